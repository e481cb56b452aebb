#pragma once

#include "monoreg/binning.hpp"
#include "monoreg/rng.hpp"

#include <limits>
#include <span>
#include <vector>

namespace monoreg {

/// B bootstrap draws (rows) of a fitted function at T target points (columns).
struct BootstrapDrawSet {
  Eigen::MatrixXd values_at_targets;

  Index draws() const { return values_at_targets.rows(); }
  Index targets() const { return values_at_targets.cols(); }
  std::vector<double> column(Index target) const;
};

// Regression model: Y*_j ~ N(ybar_j, sigma2_hat / n_j) independently on nonempty bins.
//
// A finite `shrink_lambda` swaps in the posterior's first-order corrections,
// mean ybar_j / (1 + 1/(n_j lambda^2)) and variance divided by the same factor,
// which makes the draw equal in law to the zeta = 0 posterior.
VectorXd regression_bootstrap_values(const BinSummaries& b, double sigma2_hat, CounterRng& rng,
                                     double shrink_lambda = std::numeric_limits<double>::infinity());

StepFunction regression_bootstrap_draw(const BinSummaries& b, double sigma2_hat, CounterRng& rng);

/// Bin summaries of a resample given multiplicities M_i of each original point.
BinSummaries resampled_bins(const SortedSample& s, std::span<const int> bin_of, int bins,
                            std::span<const int> multiplicity);

/// Classical pair-resampling bootstrap with precomputed bin assignments.
class PairsBootstrap {
 public:
  PairsBootstrap(const SortedSample& s, int bins);

  /// Multiplicities of n uniform index draws with replacement.
  std::vector<int> draw_multiplicities(CounterRng& rng) const;
  BinSummaries resample(CounterRng& rng) const;
  StepFunction draw(CounterRng& rng) const;

 private:
  const SortedSample* sample_;
  int bins_;
  std::vector<int> bin_of_;
};

StepFunction pairs_bootstrap_draw(const SortedSample& s, int bins, CounterRng& rng);

Interval percentile_interval(const BootstrapDrawSet& draws, Index target, double alpha);

/// Relative frequency of draws at or below the threshold.
double conditional_prob_below(std::span<const double> draws_at_t0, double threshold);

}  // namespace monoreg
