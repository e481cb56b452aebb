#include "monoreg/bayes.hpp"

#include "monoreg/isotonic.hpp"
#include "monoreg/quantile.hpp"

#include <cmath>
#include <random>

namespace monoreg {

namespace {

// 1/lambda^2 with the flat-prior limit at lambda = inf
double precision_of(double lambda) { return std::isinf(lambda) ? 0.0 : 1.0 / (lambda * lambda); }

}  // namespace

PriorSpec PriorSpec::uniform(int bins, double zeta, double lambda) {
  PriorSpec p{VectorXd::Constant(bins, zeta), VectorXd::Constant(bins, lambda)};
  p.validate(bins);
  return p;
}

void PriorSpec::validate(int bins) const {
  detail::require(zeta.size() == bins && lambda.size() == bins, "prior size does not match the bin count");
  for (int j = 0; j < bins; ++j) {
    detail::require(std::isfinite(zeta[j]), "prior mean is not finite");
    detail::require(lambda[j] > 0.0, "prior scale lambda must be positive");
  }
}

PosteriorParams posterior_params(const BinSummaries& b, const PriorSpec& p, double sigma2) {
  detail::require(sigma2 > 0.0, "noise variance must be positive");
  p.validate(b.bins);
  PosteriorParams pp{VectorXd(b.bins), VectorXd(b.bins)};
  for (int j = 0; j < b.bins; ++j) {
    const double prec = precision_of(p.lambda[j]);
    const double denom = b.counts[j] + prec;
    detail::require(denom > 0.0, "flat prior on an empty bin has no posterior");
    pp.mean[j] = (b.counts[j] * b.means[j] + p.zeta[j] * prec) / denom;
    pp.var[j] = sigma2 / denom;
  }
  return pp;
}

double empirical_bayes_sigma2(const SortedSample& s, const BinSummaries& b, const PriorSpec& p) {
  const Index n = s.size();
  detail::require(n >= 2, "empirical Bayes variance needs n >= 2");
  detail::require(b.total() == n, "bin summaries do not match the sample");
  p.validate(b.bins);
  double within = 0.0;
  for (Index i = 0; i < n; ++i) {
    const double r = s.ys[i] - b.means[bin_index(s.xs[i], b.bins)];
    within += r * r;
  }
  double prior_term = 0.0;
  for (int j = 0; j < b.bins; ++j) {
    if (b.counts[j] == 0 || std::isinf(p.lambda[j])) continue;
    const double d = b.means[j] - p.zeta[j];
    prior_term += b.counts[j] * d * d / (1.0 + b.counts[j] * p.lambda[j] * p.lambda[j]);
  }
  return (within + prior_term) / static_cast<double>(n);
}

VectorXd empirical_bayes_zeta(const BinSummaries& b, const PriorSpec& p, bool monotone) {
  if (!monotone) return b.means;
  p.validate(b.bins);
  VectorXd w(b.bins);
  for (int j = 0; j < b.bins; ++j) {
    const double l2 = p.lambda[j] * p.lambda[j];
    // n_j / (1 + n_j lambda^2); up to scale, 1 per nonempty bin as lambda -> inf
    w[j] = std::isinf(l2) ? (b.counts[j] > 0 ? 1.0 : 0.0) : b.counts[j] / (1.0 + b.counts[j] * l2);
  }
  return isotonic_fit(b.means, w);
}

VectorXd sample_posterior(const PosteriorParams& pp, const BinSummaries& b, CounterRng& rng) {
  detail::require(pp.mean.size() == b.bins && pp.var.size() == b.bins, "posterior size does not match the bins");
  std::normal_distribution<double> normal;
  VectorXd theta = pp.mean;
  for (int j = 0; j < b.bins; ++j) {
    if (b.counts[j] == 0 || pp.var[j] == 0.0) continue;
    theta[j] += std::sqrt(pp.var[j]) * normal(rng);
  }
  return theta;
}

StepFunction draw_projected_posterior(const PosteriorParams& pp, const BinSummaries& b, CounterRng& rng) {
  return isotonic_on_bins(sample_posterior(pp, b, rng), b);
}

Interval credible_interval(std::span<const double> draws_at_t0, double alpha) {
  return quantile_interval(draws_at_t0, alpha);
}

}  // namespace monoreg
