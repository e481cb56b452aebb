#include "monoreg/slse.hpp"

#include <algorithm>
#include <cmath>

namespace monoreg {

Bandwidth Bandwidth::for_sample(double c, long n) {
  detail::require(c > 0.0, "bandwidth constant must be positive");
  detail::require(n >= 1, "sample size must be positive");
  Bandwidth b{c, c * std::pow(static_cast<double>(n), -0.2)};
  detail::require(b.h > 0.0 && b.h < 0.5, "bandwidth must lie in (0, 1/2)");
  return b;
}

Bandwidth Bandwidth::fixed(double h) {
  detail::require(h > 0.0 && h < 0.5, "bandwidth must lie in (0, 1/2)");
  return Bandwidth{0.0, h};
}

double slse_evaluate(const StepFunction& fhat, double t, const Bandwidth& bw, const KernelSpec& kernel) {
  const double h = bw.h;
  detail::require(h > 0.0 && h < 0.5, "bandwidth must lie in (0, 1/2)");
  detail::require(t >= 0.0 && t <= 1.0, "t outside [0,1]");

  // visible kernel support in u = (t - x)/h for x in [0,1]
  const double lo_u = std::max(-1.0, (t - 1.0) / h);
  const double hi_u = std::min(1.0, t / h);

  double a = 1.0;
  double b = 0.0;
  if (lo_u > -1.0 || hi_u < 1.0) {
    const double m0 = kernel.partial_moment(0, lo_u, hi_u);
    const double m1 = kernel.partial_moment(1, lo_u, hi_u);
    const double m2 = kernel.partial_moment(2, lo_u, hi_u);
    const double det = m0 * m2 - m1 * m1;
    a = m2 / det;
    b = -m1 / det;
  }

  const double x_lo = t - h * hi_u;
  const double x_hi = t - h * lo_u;
  double acc = 0.0;
  for (Index j = fhat.locate(x_lo); j < fhat.cells(); ++j) {
    const double cell_lo = fhat.cell_begin(j);
    if (cell_lo >= x_hi) break;
    const double u_hi = std::min(hi_u, (t - cell_lo) / h);
    const double u_lo = std::max(lo_u, (t - fhat.cell_end(j)) / h);
    if (u_hi <= u_lo) continue;
    const double w = a * kernel.partial_moment(0, u_lo, u_hi) + b * kernel.partial_moment(1, u_lo, u_hi);
    acc += fhat.values()[j] * w;
  }
  return acc;
}

VectorXd slse_evaluate(const StepFunction& fhat, const VectorXd& ts, const Bandwidth& h, const KernelSpec& kernel) {
  VectorXd out(ts.size());
  for (Index i = 0; i < ts.size(); ++i) out[i] = slse_evaluate(fhat, ts[i], h, kernel);
  return out;
}

VectorXd centered_residuals(const SortedSample& s, const VectorXd& slse_at_x) {
  detail::require(slse_at_x.size() == s.size(), "one SLSE value per design point expected");
  VectorXd e = s.ys - slse_at_x;
  e.array() -= e.mean();
  return e;
}

SlseAsymptotics slse_asymptotics(double c, double f0_second_derivative, double noise_variance, double design_density,
                                 const KernelSpec& kernel) {
  detail::require(c > 0.0 && design_density > 0.0 && noise_variance >= 0.0, "invalid asymptotic parameters");
  return {0.5 * c * c * f0_second_derivative * kernel.second_moment(),
          noise_variance * kernel.roughness() / (c * design_density)};
}

double mse_optimal_bandwidth_constant(double f0_second_derivative, double noise_variance, double design_density,
                                      const KernelSpec& kernel) {
  detail::require(f0_second_derivative != 0.0, "MSE-optimal c needs a nonzero second derivative");
  detail::require(noise_variance > 0.0 && design_density > 0.0, "invalid asymptotic parameters");
  const double curvature = f0_second_derivative * kernel.second_moment();
  return std::pow(noise_variance / design_density * kernel.roughness() / (curvature * curvature), 0.2);
}

}  // namespace monoreg
