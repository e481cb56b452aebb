#include "monoreg/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace monoreg {

SortedSample sort_sample(std::span<const std::pair<double, double>> pairs) {
  detail::require(!pairs.empty(), "sample is empty");
  for (const auto& [x, y] : pairs) {
    detail::require(x >= 0.0 && x <= 1.0, "design point outside [0,1]");
    detail::require(std::isfinite(y), "response is not finite");
  }
  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pairs[a].first < pairs[b].first; });
  SortedSample s;
  s.xs.resize(static_cast<Index>(pairs.size()));
  s.ys.resize(static_cast<Index>(pairs.size()));
  for (std::size_t i = 0; i < order.size(); ++i) {
    s.xs[static_cast<Index>(i)] = pairs[order[i]].first;
    s.ys[static_cast<Index>(i)] = pairs[order[i]].second;
  }
  return s;
}

SortedSample sort_sample(const VectorXd& xs, const VectorXd& ys) {
  detail::require(xs.size() == ys.size(), "xs and ys differ in length");
  std::vector<std::pair<double, double>> pairs(static_cast<std::size_t>(xs.size()));
  for (Index i = 0; i < xs.size(); ++i) pairs[static_cast<std::size_t>(i)] = {xs[i], ys[i]};
  return sort_sample(pairs);
}

}  // namespace monoreg
