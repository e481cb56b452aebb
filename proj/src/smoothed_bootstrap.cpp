#include "monoreg/smoothed_bootstrap.hpp"

#include "monoreg/isotonic.hpp"
#include "monoreg/quantile.hpp"

#include <random>
#include <vector>

namespace monoreg {

StepFunction monotone_lse(const SortedSample& s) {
  detail::require(s.size() >= 1, "sample is empty");
  return point_step_function(s.xs, isotonic_fit(s.ys, VectorXd::Ones(s.size())));
}

SmoothedBootstrapSetup prepare_smoothed_bootstrap(const SortedSample& s, const Bandwidth& h,
                                                  const KernelSpec& kernel) {
  SmoothedBootstrapSetup setup{h, monotone_lse(s), VectorXd(), VectorXd()};
  setup.slse_at_x = slse_evaluate(setup.lse, s.xs, h, kernel);
  setup.residuals = centered_residuals(s, setup.slse_at_x);
  return setup;
}

StepFunction smoothed_bootstrap_fit(const VectorXd& xs, const VectorXd& slse_at_x, const VectorXd& residuals,
                                    std::span<const Index> resample_index) {
  const Index n = xs.size();
  detail::require(n >= 1, "sample is empty");
  detail::require(slse_at_x.size() == n && residuals.size() == n, "input lengths differ");
  detail::require(static_cast<Index>(resample_index.size()) == n, "one resample index per point expected");
  VectorXd ystar(n);
  for (Index i = 0; i < n; ++i) {
    const Index k = resample_index[static_cast<std::size_t>(i)];
    detail::require(k >= 0 && k < n, "resample index out of range");
    ystar[i] = slse_at_x[i] + residuals[k];
  }
  return point_step_function(xs, isotonic_fit(ystar, VectorXd::Ones(n)));
}

StepFunction smoothed_bootstrap_draw(const VectorXd& xs, const VectorXd& slse_at_x, const VectorXd& residuals,
                                     CounterRng& rng) {
  const Index n = xs.size();
  detail::require(n >= 1, "sample is empty");
  std::uniform_int_distribution<Index> pick(0, n - 1);
  std::vector<Index> idx(static_cast<std::size_t>(n));
  for (auto& k : idx) k = pick(rng);
  return smoothed_bootstrap_fit(xs, slse_at_x, residuals, idx);
}

Interval smoothed_ci(double fhat_at_t0, std::span<const double> diff_draws, double alpha) {
  const Interval q = quantile_interval(diff_draws, alpha);
  return {fhat_at_t0 - q.hi, fhat_at_t0 - q.lo};
}

double centered_conditional_prob(std::span<const double> diff_draws, double shift) {
  detail::require(!diff_draws.empty(), "no draws");
  long hits = 0;
  for (double d : diff_draws)
    if (d + shift <= 0.0) ++hits;
  return static_cast<double>(hits) / static_cast<double>(diff_draws.size());
}

double reversed_conditional_prob(std::span<const double> diff_draws, double shift) {
  return fraction_at_most(diff_draws, shift);
}

}  // namespace monoreg
