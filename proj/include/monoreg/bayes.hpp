#pragma once

#include "monoreg/binning.hpp"
#include "monoreg/rng.hpp"

#include <span>

namespace monoreg {

/// Independent normal prior theta_j ~ N(zeta_j, sigma^2 lambda_j^2) per bin.
/// lambda_j = +inf encodes the flat-prior limit 1/lambda^2 = 0.
struct PriorSpec {
  VectorXd zeta;
  VectorXd lambda;

  static PriorSpec uniform(int bins, double zeta = 0.0, double lambda = 10.0);
  void validate(int bins) const;
};

/// Per-bin normal posterior.
struct PosteriorParams {
  VectorXd mean;
  VectorXd var;
};

/// mean_j = (n_j ybar_j + zeta_j/lambda_j^2) / (n_j + 1/lambda_j^2),
/// var_j = sigma2 / (n_j + 1/lambda_j^2).
PosteriorParams posterior_params(const BinSummaries& b, const PriorSpec& p, double sigma2);

/// Closed-form empirical Bayes noise variance:
/// n^{-1} [ within-bin SSQ + sum_j n_j (ybar_j - zeta_j)^2 / (1 + n_j lambda_j^2) ].
double empirical_bayes_sigma2(const SortedSample& s, const BinSummaries& b, const PriorSpec& p);

/// Empirical Bayes prior mean: the bin means, or their isotonic regression
/// with weights n_j / (1 + n_j lambda_j^2) when `monotone` is set.
VectorXd empirical_bayes_zeta(const BinSummaries& b, const PriorSpec& p, bool monotone);

/// One raw posterior draw. Bins with n_j = 0 are not sampled and keep their mean.
VectorXd sample_posterior(const PosteriorParams& pp, const BinSummaries& b, CounterRng& rng);

/// Raw posterior draw projected onto nondecreasing bin-constant functions (weights n_j).
StepFunction draw_projected_posterior(const PosteriorParams& pp, const BinSummaries& b, CounterRng& rng);

Interval credible_interval(std::span<const double> draws_at_t0, double alpha);

}  // namespace monoreg
