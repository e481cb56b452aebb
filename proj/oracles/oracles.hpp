#pragma once

// Reference computations that share no code path with the library routines
// they check. Used by the test suites and by the `selfcheck` command.

#include "monoreg/kernel.hpp"
#include "monoreg/step_function.hpp"

#include <functional>
#include <span>
#include <vector>

namespace monoreg::oracle {

/// Exact weighted isotonic regression by enumerating all 2^{n-1} contiguous
/// level-set partitions. All weights must be positive; n <= 20.
VectorXd brute_force_isotonic(const VectorXd& values, const VectorXd& weights);

/// n^{-1} (y - B zeta)^T (B Lambda B^T + I)^{-1} (y - B zeta) by dense inversion.
double dense_empirical_bayes_sigma2(const VectorXd& ys, std::span<const int> bin_of, int bins, const VectorXd& zeta,
                                    const VectorXd& lambda);

/// Adaptive Gauss-Kronrod quadrature on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b);

/// int u^m K(u) du over [-1, 1] by quadrature of pointwise kernel values.
double kernel_moment(const KernelSpec& kernel, int m);
/// int K(u)^2 du by quadrature.
double kernel_roughness(const KernelSpec& kernel);

/// int K_h(t - x) fhat(x) dx by quadrature, split at the step breakpoints,
/// with boundary kernel coefficients also derived by quadrature.
double slse_by_quadrature(const StepFunction& fhat, double t, double h, const KernelSpec& kernel);

/// Kolmogorov-Smirnov distance of a sample to Uniform[0,1].
double ks_distance_uniform(std::vector<double> sample);
/// Two-sample Kolmogorov-Smirnov statistic.
double ks_two_sample(std::vector<double> a, std::vector<double> b);
/// Asymptotic two-sample KS critical value at level alpha.
double ks_two_sample_critical(double alpha, std::size_t n, std::size_t m);

}  // namespace monoreg::oracle
