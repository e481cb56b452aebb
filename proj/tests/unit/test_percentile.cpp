#include "helpers.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace monoreg;
using test::vec;

TEST_CASE("regression bootstrap with zero variance reproduces the binned LSE") {
  for (int k = 0; k < 20; ++k) {
    const auto s = test::simulated_sample(40 + 10 * k, 0.2, 50 + k);
    const auto b = summarize_bins(s, 3 + k % 6);
    CounterRng rng(1, static_cast<std::uint32_t>(k), 0);
    const StepFunction boot = regression_bootstrap_draw(b, 0.0, rng);
    const StepFunction lse = monotone_binned_lse(b);
    CHECK(boot.breakpoints() == lse.breakpoints());
    CHECK(boot.values() == lse.values());
  }
}

TEST_CASE("regression bootstrap draws are monotone and follow the forced example") {
  const BinSummaries b{2, Eigen::Vector2i(1, 1), vec({0, 0})};
  CHECK(isotonic_on_bins(vec({2, 1}), b).values() == vec({1.5, 1.5}));

  const auto s = test::simulated_sample(300, 0.1, 4);
  const auto sb = summarize_bins(s, choose_num_bins(300));
  for (int d = 0; d < 50; ++d) {
    CounterRng rng(5, 0, static_cast<std::uint32_t>(d));
    CHECK(regression_bootstrap_draw(sb, 0.01, rng).is_nondecreasing());
  }
  BinSummaries empty{2, Eigen::Vector2i(0, 0), vec({0, 0})};
  CounterRng rng(1, 0, 0);
  CHECK_THROWS_AS(regression_bootstrap_draw(empty, 0.01, rng), std::invalid_argument);
}

TEST_CASE("pairs bootstrap basics") {
  const SortedSample single = sort_sample(vec({0.4}), vec({2.5}));
  CounterRng rng(1, 0, 0);
  const StepFunction f = pairs_bootstrap_draw(single, 3, rng);
  CHECK(f(0.0) == 2.5);
  CHECK(f(0.99) == 2.5);

  const SortedSample two = sort_sample(vec({0.2, 0.3}), vec({1, 5}));
  const std::vector<int> mult{2, 0};
  const auto bin_of = assign_bins(two, 1);
  const BinSummaries rb = resampled_bins(two, bin_of, 1, mult);
  CHECK(rb.counts[0] == 2);
  CHECK(rb.means[0] == 1);
  CHECK(isotonic_on_bins(rb.means, rb).values() == vec({1}));

  const auto s = test::simulated_sample(200, 0.1, 6);
  const PairsBootstrap boot(s, choose_num_bins(200));
  for (int d = 0; d < 50; ++d) {
    CounterRng r(9, 0, static_cast<std::uint32_t>(d));
    const auto m = boot.draw_multiplicities(r);
    long total = 0;
    for (int v : m) total += v;
    CHECK(total == 200);
    CounterRng r2(9, 1, static_cast<std::uint32_t>(d));
    CHECK(boot.draw(r2).is_nondecreasing());
  }
}

TEST_CASE("pairs bootstrap preserves bin sums in conditional mean") {
  const auto s = test::simulated_sample(50, 0.1, 21);
  const int bins = choose_num_bins(50);
  const auto b = summarize_bins(s, bins);
  const PairsBootstrap boot(s, bins);
  const int draws = 100000;
  VectorXd sum = VectorXd::Zero(bins), sq = VectorXd::Zero(bins);
  for (int d = 0; d < draws; ++d) {
    CounterRng rng(77, 0, static_cast<std::uint32_t>(d));
    const BinSummaries r = boot.resample(rng);
    const VectorXd sums = r.weights().cwiseProduct(r.means);
    sum += sums;
    sq += sums.cwiseProduct(sums);
  }
  const VectorXd target = b.weights().cwiseProduct(b.means);
  for (int j = 0; j < bins; ++j) {
    const double mean = sum[j] / draws;
    const double sd = std::sqrt(std::max(sq[j] / draws - mean * mean, 0.0));
    CHECK(std::abs(mean - target[j]) <= 4.0 * sd / std::sqrt(draws) + 1e-12);
  }
}

TEST_CASE("shrunken regression bootstrap has the posterior law") {
  const auto s = test::simulated_sample(500, 0.1, 31);
  const int bins = choose_num_bins(500);
  const auto b = summarize_bins(s, bins);
  const PriorSpec p = PriorSpec::uniform(bins, 0.0, 10.0);
  const double sigma2 = empirical_bayes_sigma2(s, b, p);
  const auto pp = posterior_params(b, p, sigma2);
  const int draws = 10000;
  std::vector<std::vector<double>> post(bins), boot(bins);
  for (int d = 0; d < draws; ++d) {
    CounterRng r1(41, 0, static_cast<std::uint32_t>(d));
    CounterRng r2(41, 1, static_cast<std::uint32_t>(d));
    const VectorXd th = sample_posterior(pp, b, r1);
    const VectorXd ys = regression_bootstrap_values(b, sigma2, r2, 10.0);
    for (int j = 0; j < bins; ++j) {
      post[j].push_back(th[j]);
      boot[j].push_back(ys[j]);
    }
  }
  const double crit = oracle::ks_two_sample_critical(0.001, draws, draws);
  int failures = 0;
  for (int j = 0; j < bins; ++j)
    if (oracle::ks_two_sample(post[j], boot[j]) >= crit) ++failures;
  // 49 independent tests at level 0.001: one stray rejection is tolerated here
  CHECK(failures <= 1);
}

TEST_CASE("percentile interval and conditional frequency") {
  BootstrapDrawSet set{Eigen::MatrixXd::Constant(10, 2, 3.0)};
  CHECK(percentile_interval(set, 1, 0.05).lo == 3.0);
  CHECK(percentile_interval(set, 1, 0.05).hi == 3.0);
  set.values_at_targets.resize(1000, 1);
  for (int k = 0; k < 1000; ++k) set.values_at_targets(k, 0) = k + 1;
  const Interval iv = percentile_interval(set, 0, 0.05);
  CHECK(iv.lo == 25);
  CHECK(iv.hi == 975);
  const std::vector<double> d{1, 2, 3};
  CHECK(conditional_prob_below(d, 2) == doctest::Approx(2.0 / 3.0));
  CHECK(conditional_prob_below(d, -1) == 0);
  CHECK(conditional_prob_below(d, 10) == 1);
}
