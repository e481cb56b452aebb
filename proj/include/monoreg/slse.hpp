#pragma once

#include "monoreg/kernel.hpp"
#include "monoreg/sample.hpp"
#include "monoreg/step_function.hpp"

namespace monoreg {

/// h = c n^{-1/5}; must lie in (0, 1/2).
struct Bandwidth {
  double c = 0.5;
  double h = 0.0;

  static Bandwidth for_sample(double c, long n);
  static Bandwidth fixed(double h);
};

/// Smoothed least squares estimate at t: int K_h(t - x) fhat(x) dx.
///
/// Near the ends the kernel is replaced by the linear boundary kernel
/// (a + b u) K(u) whose zeroth and first moments over the visible support
/// [max(-1, (t-1)/h), min(1, t/h)] are 1 and 0. In the interior a = 1, b = 0.
double slse_evaluate(const StepFunction& fhat, double t, const Bandwidth& h, const KernelSpec& kernel);

/// slse_evaluate at every point of `ts`.
VectorXd slse_evaluate(const StepFunction& fhat, const VectorXd& ts, const Bandwidth& h, const KernelSpec& kernel);

/// Residuals Y_i - slse(X_i), centered to mean zero.
VectorXd centered_residuals(const SortedSample& s, const VectorXd& slse_at_x);

struct SlseAsymptotics {
  double bias;      // beta = c^2 f0''(t0) int u^2 K / 2
  double variance;  // sigma0^2 int K^2 / (c g(t0))
};

/// Limit N(beta, sigma^2) of n^{2/5} (slse(t0) - f0(t0)).
SlseAsymptotics slse_asymptotics(double c, double f0_second_derivative, double noise_variance, double design_density,
                                 const KernelSpec& kernel);

/// Asymptotically MSE-optimal bandwidth constant c.
double mse_optimal_bandwidth_constant(double f0_second_derivative, double noise_variance, double design_density,
                                      const KernelSpec& kernel);

}  // namespace monoreg
