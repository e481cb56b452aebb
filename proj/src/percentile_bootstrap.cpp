#include "monoreg/percentile_bootstrap.hpp"

#include "monoreg/quantile.hpp"

#include <cmath>
#include <random>

namespace monoreg {

std::vector<double> BootstrapDrawSet::column(Index target) const {
  detail::require(target >= 0 && target < targets(), "target index out of range");
  std::vector<double> out(static_cast<std::size_t>(draws()));
  for (Index b = 0; b < draws(); ++b) out[static_cast<std::size_t>(b)] = values_at_targets(b, target);
  return out;
}

VectorXd regression_bootstrap_values(const BinSummaries& b, double sigma2_hat, CounterRng& rng,
                                     double shrink_lambda) {
  detail::require(sigma2_hat >= 0.0, "noise variance must be nonnegative");
  detail::require(shrink_lambda > 0.0, "shrinkage lambda must be positive");
  detail::require(b.counts.maxCoeff() > 0, "all bins are empty");
  std::normal_distribution<double> normal;
  VectorXd y = b.means;
  const double prec = std::isinf(shrink_lambda) ? 0.0 : 1.0 / (shrink_lambda * shrink_lambda);
  for (int j = 0; j < b.bins; ++j) {
    const int nj = b.counts[j];
    if (nj == 0) continue;
    const double factor = 1.0 + prec / nj;
    y[j] = b.means[j] / factor;
    if (sigma2_hat > 0.0) y[j] += std::sqrt(sigma2_hat / (nj * factor)) * normal(rng);
  }
  return y;
}

StepFunction regression_bootstrap_draw(const BinSummaries& b, double sigma2_hat, CounterRng& rng) {
  return isotonic_on_bins(regression_bootstrap_values(b, sigma2_hat, rng), b);
}

BinSummaries resampled_bins(const SortedSample& s, std::span<const int> bin_of, int bins,
                            std::span<const int> multiplicity) {
  const auto n = static_cast<std::size_t>(s.size());
  detail::require(bin_of.size() == n && multiplicity.size() == n, "resample size does not match the sample");
  BinSummaries out;
  out.bins = bins;
  out.counts = VectorXi::Zero(bins);
  out.means = VectorXd::Zero(bins);
  for (std::size_t i = 0; i < n; ++i) {
    const int m = multiplicity[i];
    if (m == 0) continue;
    detail::require(m > 0, "negative multiplicity");
    out.counts[bin_of[i]] += m;
    out.means[bin_of[i]] += m * s.ys[static_cast<Index>(i)];
  }
  for (int j = 0; j < bins; ++j)
    if (out.counts[j] > 0) out.means[j] /= out.counts[j];
  return out;
}

PairsBootstrap::PairsBootstrap(const SortedSample& s, int bins)
    : sample_(&s), bins_(bins), bin_of_(assign_bins(s, bins)) {
  detail::require(s.size() >= 1, "sample is empty");
}

std::vector<int> PairsBootstrap::draw_multiplicities(CounterRng& rng) const {
  const auto n = static_cast<std::size_t>(sample_->size());
  std::vector<int> m(n, 0);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t k = 0; k < n; ++k) ++m[pick(rng)];
  return m;
}

BinSummaries PairsBootstrap::resample(CounterRng& rng) const {
  const auto m = draw_multiplicities(rng);
  return resampled_bins(*sample_, bin_of_, bins_, m);
}

StepFunction PairsBootstrap::draw(CounterRng& rng) const { return monotone_binned_lse(resample(rng)); }

StepFunction pairs_bootstrap_draw(const SortedSample& s, int bins, CounterRng& rng) {
  return PairsBootstrap(s, bins).draw(rng);
}

Interval percentile_interval(const BootstrapDrawSet& draws, Index target, double alpha) {
  const auto col = draws.column(target);
  return quantile_interval(col, alpha);
}

double conditional_prob_below(std::span<const double> draws_at_t0, double threshold) {
  return fraction_at_most(draws_at_t0, threshold);
}

}  // namespace monoreg
