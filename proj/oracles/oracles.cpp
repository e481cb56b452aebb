#include "oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace monoreg::oracle {

VectorXd brute_force_isotonic(const VectorXd& values, const VectorXd& weights) {
  const Index n = values.size();
  detail::require(n >= 1 && n <= 20 && weights.size() == n, "brute force: bad size");
  for (Index i = 0; i < n; ++i) detail::require(weights[i] > 0.0, "brute force: weights must be positive");

  double best = std::numeric_limits<double>::infinity();
  VectorXd best_fit(n);
  VectorXd fit(n);
  // bit i set: a new block starts at i + 1
  const unsigned long patterns = 1ul << (n - 1);
  for (unsigned long mask = 0; mask < patterns; ++mask) {
    bool feasible = true;
    double prev_mean = -std::numeric_limits<double>::infinity();
    Index start = 0;
    for (Index i = 0; i < n && feasible; ++i) {
      const bool closes = (i == n - 1) || ((mask >> i) & 1ul);
      if (!closes) continue;
      double sw = 0.0;
      double swv = 0.0;
      for (Index k = start; k <= i; ++k) {
        sw += weights[k];
        swv += weights[k] * values[k];
      }
      const double mean = swv / sw;
      if (mean < prev_mean) feasible = false;
      for (Index k = start; k <= i; ++k) fit[k] = mean;
      prev_mean = mean;
      start = i + 1;
    }
    if (!feasible) continue;
    const double obj = (weights.array() * (values - fit).array().square()).sum();
    if (obj < best) {
      best = obj;
      best_fit = fit;
    }
  }
  return best_fit;
}

double dense_empirical_bayes_sigma2(const VectorXd& ys, std::span<const int> bin_of, int bins, const VectorXd& zeta,
                                    const VectorXd& lambda) {
  const Index n = ys.size();
  detail::require(static_cast<Index>(bin_of.size()) == n, "dense EB: size mismatch");
  Eigen::MatrixXd design = Eigen::MatrixXd::Zero(n, bins);
  for (Index i = 0; i < n; ++i) design(i, bin_of[static_cast<std::size_t>(i)]) = 1.0;
  const Eigen::MatrixXd prior_cov = lambda.array().square().matrix().asDiagonal();
  const Eigen::MatrixXd marginal = design * prior_cov * design.transpose() + Eigen::MatrixXd::Identity(n, n);
  const VectorXd z = ys - design * zeta;
  return z.dot(marginal.inverse() * z) / static_cast<double>(n);
}

double integrate(const std::function<double(double)>& f, double a, double b) {
  if (b <= a) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 6, 1e-12);
}

double kernel_moment(const KernelSpec& kernel, int m) {
  return integrate([&](double u) { return std::pow(u, m) * kernel(u); }, -1.0, 1.0);
}

double kernel_roughness(const KernelSpec& kernel) {
  return integrate([&](double u) { return kernel(u) * kernel(u); }, -1.0, 1.0);
}

double slse_by_quadrature(const StepFunction& fhat, double t, double h, const KernelSpec& kernel) {
  const double lo_u = std::max(-1.0, (t - 1.0) / h);
  const double hi_u = std::min(1.0, t / h);
  const double m0 = integrate([&](double u) { return kernel(u); }, lo_u, hi_u);
  const double m1 = integrate([&](double u) { return u * kernel(u); }, lo_u, hi_u);
  const double m2 = integrate([&](double u) { return u * u * kernel(u); }, lo_u, hi_u);
  const double det = m0 * m2 - m1 * m1;
  const double a = m2 / det;
  const double b = -m1 / det;

  const double x_lo = std::max(0.0, t - h);
  const double x_hi = std::min(1.0, t + h);
  std::vector<double> cuts{x_lo};
  for (Index j = 0; j < fhat.cells(); ++j) {
    const double bp = fhat.breakpoints()[j];
    if (bp > x_lo && bp < x_hi) cuts.push_back(bp);
  }
  cuts.push_back(x_hi);
  double acc = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double mid = 0.5 * (cuts[k] + cuts[k + 1]);
    const double value = fhat(mid);
    acc += value * integrate(
                       [&](double x) {
                         const double u = (t - x) / h;
                         return (a + b * u) * kernel(u) / h;
                       },
                       cuts[k], cuts[k + 1]);
  }
  return acc;
}

double ks_distance_uniform(std::vector<double> sample) {
  detail::require(!sample.empty(), "KS: empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = std::clamp(sample[i], 0.0, 1.0);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  detail::require(!a.empty() && !b.empty(), "KS: empty sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= v) ++i;
    while (j < b.size() && b[j] <= v) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  return d;
}

double ks_two_sample_critical(double alpha, std::size_t n, std::size_t m) {
  const double c = std::sqrt(-0.5 * std::log(alpha / 2.0));
  const double nd = static_cast<double>(n);
  const double md = static_cast<double>(m);
  return c * std::sqrt((nd + md) / (nd * md));
}

}  // namespace monoreg::oracle
