#include "selfcheck.hpp"

#include "oracles.hpp"

#include "monoreg/bayes.hpp"
#include "monoreg/isotonic.hpp"
#include "monoreg/rng.hpp"
#include "monoreg/slse.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace monoreg::cli {

bool CheckResult::passed() const { return std::abs(observed - expected) <= tolerance; }

namespace {

struct WeightedInstance {
  VectorXd values;
  VectorXd weights;
};

WeightedInstance random_weighted_instance(CounterRng& rng) {
  std::uniform_int_distribution<int> size(1, 7);
  std::uniform_int_distribution<int> weight(1, 3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = size(rng);
  WeightedInstance inst{VectorXd(n), VectorXd(n)};
  for (int i = 0; i < n; ++i) {
    inst.values[i] = unit(rng);
    inst.weights[i] = weight(rng);
  }
  return inst;
}

}  // namespace

CheckResult check_isotonic_brute_force(int instances, std::uint64_t seed) {
  double worst = 0.0;
  for (int k = 0; k < instances; ++k) {
    CounterRng rng(seed, static_cast<std::uint32_t>(k), 0);
    const auto inst = random_weighted_instance(rng);
    const VectorXd fit = isotonic_fit(inst.values, inst.weights);
    const VectorXd exact = oracle::brute_force_isotonic(inst.values, inst.weights);
    worst = std::max(worst, (fit - exact).cwiseAbs().maxCoeff());
  }
  return {"isotonic_vs_brute_force", worst, 0.0, 1e-10};
}

CheckResult check_isotonic_gcm(int instances, std::uint64_t seed) {
  double worst = 0.0;
  for (int k = 0; k < instances; ++k) {
    CounterRng rng(seed, static_cast<std::uint32_t>(k), 1);
    const auto inst = random_weighted_instance(rng);
    const VectorXd fit = isotonic_fit(inst.values, inst.weights);
    const VectorXd gcm = gcm_left_derivatives(cusum(inst.values, inst.weights));
    worst = std::max(worst, (fit - gcm).cwiseAbs().maxCoeff());
  }
  return {"pava_vs_gcm_left_derivative", worst, 0.0, 1e-10};
}

CheckResult check_empirical_bayes_identity(int instances, std::uint64_t seed) {
  double worst = 0.0;
  for (int k = 0; k < instances; ++k) {
    CounterRng rng(seed, static_cast<std::uint32_t>(k), 2);
    std::uniform_int_distribution<int> size(2, 25);
    std::uniform_int_distribution<int> bin_count(1, 5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> normal;
    const int n = size(rng);
    const int bins = bin_count(rng);
    VectorXd xs(n);
    VectorXd ys(n);
    for (int i = 0; i < n; ++i) {
      xs[i] = unit(rng);
      ys[i] = 2.0 * xs[i] + normal(rng);
    }
    const SortedSample s = sort_sample(xs, ys);
    PriorSpec prior{VectorXd(bins), VectorXd(bins)};
    for (int j = 0; j < bins; ++j) {
      prior.zeta[j] = 2.0 * normal(rng);
      prior.lambda[j] = 0.1 + 10.0 * unit(rng);
    }
    const BinSummaries b = summarize_bins(s, bins);
    const double closed = empirical_bayes_sigma2(s, b, prior);
    const double dense = oracle::dense_empirical_bayes_sigma2(s.ys, assign_bins(s, bins), bins, prior.zeta,
                                                              prior.lambda);
    worst = std::max(worst, std::abs(closed - dense));
  }
  return {"empirical_bayes_closed_vs_dense", worst, 0.0, 1e-9};
}

CheckResult check_slse_quadrature(int step_functions, std::uint64_t seed) {
  const KernelSpec kernel = KernelSpec::triweight();
  double worst = 0.0;
  for (int k = 0; k < step_functions; ++k) {
    CounterRng rng(seed, static_cast<std::uint32_t>(k), 3);
    std::uniform_int_distribution<int> cells(1, 12);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int m = cells(rng);
    std::vector<double> bp(static_cast<std::size_t>(m - 1));
    for (auto& b : bp) b = unit(rng);
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    bp.push_back(1.0);
    VectorXd breaks = Eigen::Map<VectorXd>(bp.data(), static_cast<Index>(bp.size()));
    VectorXd vals(breaks.size());
    for (Index j = 0; j < vals.size(); ++j) vals[j] = 4.0 * unit(rng) - 2.0;
    const StepFunction f(breaks, vals);
    const double h = 0.05 + 0.4 * unit(rng);
    for (int r = 0; r < 8; ++r) {
      // half the points near an end so the boundary kernel is exercised
      const double t = (r % 2 == 0) ? unit(rng) : (r % 4 == 1 ? h * unit(rng) : 1.0 - h * unit(rng));
      const double exact = slse_evaluate(f, t, Bandwidth::fixed(h), kernel);
      const double quad = oracle::slse_by_quadrature(f, t, h, kernel);
      worst = std::max(worst, std::abs(exact - quad));
    }
  }
  return {"slse_exact_vs_quadrature", worst, 0.0, 1e-8};
}

std::vector<CheckResult> check_kernel_moments() {
  const KernelSpec kernel = KernelSpec::triweight();
  return {
      {"kernel_integral_quadrature", oracle::kernel_moment(kernel, 0), 1.0, 1e-8},
      {"kernel_first_moment_quadrature", oracle::kernel_moment(kernel, 1), 0.0, 1e-8},
      {"kernel_second_moment_quadrature", oracle::kernel_moment(kernel, 2), 1.0 / 9.0, 1e-8},
      {"kernel_roughness_quadrature", oracle::kernel_roughness(kernel), 350.0 / 429.0, 1e-8},
      {"kernel_second_moment_closed_form", kernel.second_moment(), 1.0 / 9.0, 1e-12},
      {"kernel_roughness_closed_form", kernel.roughness(), 350.0 / 429.0, 1e-12},
  };
}

CheckResult check_philox_known_answers() {
  struct Vector4 {
    CounterRng::Block ctr;
    CounterRng::Key key;
    CounterRng::Block expected;
  };
  const Vector4 cases[] = {
      {{0, 0, 0, 0}, {0, 0}, {0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}},
      {{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
       {0xffffffff, 0xffffffff},
       {0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}},
      {{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
       {0xa4093822, 0x299f31d0},
       {0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}},
  };
  int mismatches = 0;
  for (const auto& c : cases)
    if (CounterRng::philox(c.ctr, c.key) != c.expected) ++mismatches;
  return {"philox4x32_10_known_answers", static_cast<double>(mismatches), 0.0, 0.0};
}

std::vector<CheckResult> run_selfcheck() {
  std::vector<CheckResult> out;
  out.push_back(check_isotonic_brute_force(1000, 7));
  out.push_back(check_isotonic_gcm(1000, 7));
  out.push_back(check_empirical_bayes_identity(200, 7));
  for (auto& c : check_kernel_moments()) out.push_back(c);
  out.push_back(check_slse_quadrature(50, 7));
  out.push_back(check_philox_known_answers());
  return out;
}

}  // namespace monoreg::cli
