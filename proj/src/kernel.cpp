#include "monoreg/kernel.hpp"

#include <algorithm>
#include <cmath>

namespace monoreg {

KernelSpec::KernelSpec(KernelFamily family, std::string name, const std::array<double, kMaxDegree + 1>& coeffs)
    : family_(family), name_(std::move(name)), coeffs_(coeffs) {
  for (int m = 0; m < 3; ++m) {
    auto& a = anti_[static_cast<std::size_t>(m)];
    a.fill(0.0);
    for (int k = 0; k <= kMaxDegree; ++k) {
      const int p = k + m + 1;
      a[static_cast<std::size_t>(p)] = coeffs_[static_cast<std::size_t>(k)] / p;
    }
    anti_offset_[static_cast<std::size_t>(m)] = 0.0;
    anti_offset_[static_cast<std::size_t>(m)] = antiderivative(m, -1.0);
  }
}

KernelSpec KernelSpec::triweight() {
  // (35/32) (1 - u^2)^3
  return KernelSpec(KernelFamily::Triweight, "triweight",
                    {35.0 / 32.0, 0.0, -105.0 / 32.0, 0.0, 105.0 / 32.0, 0.0, -35.0 / 32.0, 0.0, 0.0});
}

KernelSpec KernelSpec::make(KernelFamily family) {
  switch (family) {
    case KernelFamily::Triweight:
      return triweight();
  }
  throw std::invalid_argument("unknown kernel family");
}

double KernelSpec::operator()(double u) const {
  if (!(std::abs(u) <= 1.0)) return 0.0;
  double acc = 0.0;
  for (int k = kMaxDegree; k >= 0; --k) acc = acc * u + coeffs_[static_cast<std::size_t>(k)];
  return acc;
}

double KernelSpec::antiderivative(int m, double u) const {
  const auto& a = anti_[static_cast<std::size_t>(m)];
  double acc = 0.0;
  for (int p = static_cast<int>(a.size()) - 1; p >= 0; --p) acc = acc * u + a[static_cast<std::size_t>(p)];
  return acc - anti_offset_[static_cast<std::size_t>(m)];
}

double KernelSpec::partial_moment(int m, double a, double b) const {
  detail::require(m >= 0 && m <= 2, "only moments 0, 1, 2 are available");
  a = std::clamp(a, -1.0, 1.0);
  b = std::clamp(b, -1.0, 1.0);
  return antiderivative(m, b) - antiderivative(m, a);
}

double KernelSpec::roughness() const {
  double acc = 0.0;
  for (int k = 0; k <= kMaxDegree; ++k)
    for (int l = 0; l <= kMaxDegree; ++l)
      if ((k + l) % 2 == 0)
        acc += coeffs_[static_cast<std::size_t>(k)] * coeffs_[static_cast<std::size_t>(l)] * 2.0 / (k + l + 1);
  return acc;
}

}  // namespace monoreg
