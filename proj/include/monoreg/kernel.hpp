#pragma once

#include "monoreg/types.hpp"

#include <array>
#include <string>

namespace monoreg {

enum class KernelFamily { Triweight };

/// Polynomial kernel on [-1, 1], K(u) = sum_k c_k u^k, zero outside.
///
/// Partial moments int_a^b u^m K(u) du (m = 0, 1, 2) are evaluated from the
/// antiderivative coefficients, so convolutions with step functions are exact.
class KernelSpec {
 public:
  static constexpr int kMaxDegree = 8;

  static KernelSpec triweight();
  static KernelSpec make(KernelFamily family);

  KernelFamily family() const { return family_; }
  const std::string& name() const { return name_; }

  double operator()(double u) const;
  /// K_h(u) = K(u/h)/h.
  double scaled(double u, double h) const { return (*this)(u / h) / h; }

  /// int_a^b u^m K(u) du, limits clipped to [-1, 1].
  double partial_moment(int m, double a, double b) const;

  /// int u^2 K(u) du.
  double second_moment() const { return partial_moment(2, -1.0, 1.0); }
  /// int K(u)^2 du.
  double roughness() const;

 private:
  KernelSpec(KernelFamily family, std::string name, const std::array<double, kMaxDegree + 1>& coeffs);

  double antiderivative(int m, double u) const;

  KernelFamily family_;
  std::string name_;
  std::array<double, kMaxDegree + 1> coeffs_{};
  // antiderivatives of u^m K(u), m = 0..2, zero at u = -1
  std::array<std::array<double, kMaxDegree + 4>, 3> anti_{};
  std::array<double, 3> anti_offset_{};
};

}  // namespace monoreg
