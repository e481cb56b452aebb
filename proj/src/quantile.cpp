#include "monoreg/quantile.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace monoreg {

Index order_statistic_rank(double q, Index draws) {
  detail::require(draws >= 1, "no draws");
  detail::require(q >= 0.0 && q <= 1.0, "quantile level outside [0,1]");
  const double pos = q * static_cast<double>(draws);
  const double nearest = std::round(pos);
  const double snapped = std::abs(pos - nearest) <= 1e-9 * std::max(1.0, pos) ? nearest : pos;
  const auto rank = static_cast<Index>(std::ceil(snapped));
  return std::clamp<Index>(rank, 1, draws);
}

double empirical_quantile(std::span<const double> draws, double q) {
  detail::require(!draws.empty(), "no draws");
  std::vector<double> work(draws.begin(), draws.end());
  const auto k = static_cast<std::size_t>(order_statistic_rank(q, static_cast<Index>(work.size())) - 1);
  std::nth_element(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(k), work.end());
  return work[k];
}

Interval quantile_interval(std::span<const double> draws, double alpha) {
  detail::require(draws.size() >= 2, "interval needs at least two draws");
  detail::require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0,1)");
  std::vector<double> work(draws.begin(), draws.end());
  std::sort(work.begin(), work.end());
  const auto b = static_cast<Index>(work.size());
  const Index lo = order_statistic_rank(alpha / 2.0, b);
  const Index hi = order_statistic_rank(1.0 - alpha / 2.0, b);
  return {work[static_cast<std::size_t>(lo - 1)], work[static_cast<std::size_t>(hi - 1)]};
}

double fraction_at_most(std::span<const double> draws, double threshold) {
  detail::require(!draws.empty(), "no draws");
  const auto hits = std::count_if(draws.begin(), draws.end(), [&](double d) { return d <= threshold; });
  return static_cast<double>(hits) / static_cast<double>(draws.size());
}

}  // namespace monoreg
