#pragma once

#include "monoreg/rng.hpp"
#include "monoreg/slse.hpp"

#include <span>

namespace monoreg {

/// Everything the residual bootstrap needs from the original sample.
struct SmoothedBootstrapSetup {
  Bandwidth bandwidth;
  StepFunction lse;      // monotone LSE of the sample
  VectorXd slse_at_x;    // SLSE at the design points
  VectorXd residuals;    // centered residuals w.r.t. the SLSE
};

SmoothedBootstrapSetup prepare_smoothed_bootstrap(const SortedSample& s, const Bandwidth& h,
                                                  const KernelSpec& kernel);

/// Monotone LSE of a sorted sample (per-point isotonic regression, unit weights).
StepFunction monotone_lse(const SortedSample& s);

/// Monotone LSE of (x_i, slse_i + residual[index_i]).
StepFunction smoothed_bootstrap_fit(const VectorXd& xs, const VectorXd& slse_at_x, const VectorXd& residuals,
                                    std::span<const Index> resample_index);

/// One bootstrap refit with residuals drawn uniformly with replacement.
StepFunction smoothed_bootstrap_draw(const VectorXd& xs, const VectorXd& slse_at_x, const VectorXd& residuals,
                                     CounterRng& rng);

/// (fhat(t0) - Q_{1-alpha/2}, fhat(t0) - Q_{alpha/2}) of the differences fhat*(t0) - slse(t0).
Interval smoothed_ci(double fhat_at_t0, std::span<const double> diff_draws, double alpha);

/// Fraction of differences d with d + shift <= 0, shift = fhat(t0) - f0(t0).
double centered_conditional_prob(std::span<const double> diff_draws, double shift);

/// One-sided form: fraction of differences d with d <= shift.
double reversed_conditional_prob(std::span<const double> diff_draws, double shift);

}  // namespace monoreg
