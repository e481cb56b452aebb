#pragma once

#include "monoreg/types.hpp"

#include <cmath>
#include <vector>

namespace monoreg {

/// Cumulative-sum diagram P_0 = (0,0), P_k = (sum of weights, sum of weight*value).
///
/// Coordinates are unnormalized; zero-weight entries contribute no point.
template <typename Scalar>
struct CusumDiagram {
  Vector<Scalar> cum_weight;
  Vector<Scalar> cum_value;

  Index points() const { return cum_weight.size(); }
};

namespace detail {

template <typename DerivedV, typename DerivedW>
void check_weighted(const Eigen::MatrixBase<DerivedV>& values, const Eigen::MatrixBase<DerivedW>& weights) {
  require(values.size() == weights.size(), "values and weights differ in length");
  for (Index i = 0; i < weights.size(); ++i) {
    require(std::isfinite(static_cast<double>(weights[i])), "weight is not finite");
    require(weights[i] >= 0, "negative weight");
  }
}

}  // namespace detail

template <typename DerivedV, typename DerivedW>
CusumDiagram<typename DerivedV::Scalar> cusum(const Eigen::MatrixBase<DerivedV>& values,
                                             const Eigen::MatrixBase<DerivedW>& weights) {
  using Scalar = typename DerivedV::Scalar;
  detail::check_weighted(values, weights);
  Index m = 0;
  for (Index i = 0; i < weights.size(); ++i)
    if (weights[i] > 0) ++m;
  CusumDiagram<Scalar> d;
  d.cum_weight.resize(m + 1);
  d.cum_value.resize(m + 1);
  d.cum_weight[0] = Scalar(0);
  d.cum_value[0] = Scalar(0);
  Index k = 0;
  for (Index i = 0; i < weights.size(); ++i) {
    if (!(weights[i] > 0)) continue;
    const Scalar w = static_cast<Scalar>(weights[i]);
    d.cum_weight[k + 1] = d.cum_weight[k] + w;
    d.cum_value[k + 1] = d.cum_value[k] + w * static_cast<Scalar>(values[i]);
    ++k;
  }
  return d;
}

/// Left derivatives of the greatest convex minorant, evaluated at P_1..P_m.
///
/// O(m) lower hull; the result has one entry per diagram point after P_0.
template <typename Scalar>
Vector<Scalar> gcm_left_derivatives(const CusumDiagram<Scalar>& d) {
  const Index m = d.points() - 1;
  detail::require(m >= 1, "cusum diagram has no points beyond the origin");
  std::vector<Index> hull;
  hull.reserve(static_cast<std::size_t>(m + 1));
  for (Index k = 0; k <= m; ++k) {
    while (hull.size() >= 2) {
      const Index a = hull[hull.size() - 2];
      const Index b = hull.back();
      const Scalar cross = (d.cum_weight[b] - d.cum_weight[a]) * (d.cum_value[k] - d.cum_value[a]) -
                           (d.cum_value[b] - d.cum_value[a]) * (d.cum_weight[k] - d.cum_weight[a]);
      if (cross <= Scalar(0))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(k);
  }
  Vector<Scalar> slopes(m);
  for (std::size_t s = 1; s < hull.size(); ++s) {
    const Index a = hull[s - 1];
    const Index b = hull[s];
    const Scalar slope = (d.cum_value[b] - d.cum_value[a]) / (d.cum_weight[b] - d.cum_weight[a]);
    for (Index k = a; k < b; ++k) slopes[k] = slope;
  }
  return slopes;
}

/// Weighted isotonic regression: argmin sum w_i (v_i - f_i)^2 over nondecreasing f.
///
/// Pool-adjacent-violators on the positive-weight entries. Entries with zero
/// weight take the value of the preceding block, or of the first block when
/// they lead.
template <typename DerivedV, typename DerivedW>
Vector<typename DerivedV::Scalar> isotonic_fit(const Eigen::MatrixBase<DerivedV>& values,
                                               const Eigen::MatrixBase<DerivedW>& weights) {
  using Scalar = typename DerivedV::Scalar;
  detail::check_weighted(values, weights);
  const Index n = values.size();

  struct Block {
    Scalar weight;
    Scalar mean;
    Index size;
  };
  std::vector<Block> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    if (!(weights[i] > 0)) continue;
    Block cur{static_cast<Scalar>(weights[i]), static_cast<Scalar>(values[i]), 1};
    while (!blocks.empty() && blocks.back().mean > cur.mean) {
      const Block& prev = blocks.back();
      const Scalar w = prev.weight + cur.weight;
      cur.mean = (prev.weight * prev.mean + cur.weight * cur.mean) / w;
      cur.weight = w;
      cur.size += prev.size;
      blocks.pop_back();
    }
    blocks.push_back(cur);
  }
  detail::require(!blocks.empty(), "isotonic fit needs at least one positive weight");

  Vector<Scalar> fit(n);
  std::size_t b = 0;
  Index used = 0;
  bool seen_positive = false;
  for (Index i = 0; i < n; ++i) {
    if (weights[i] > 0) {
      if (seen_positive && used == blocks[b].size) {
        ++b;
        used = 0;
      }
      seen_positive = true;
      ++used;
    }
    fit[i] = blocks[b].mean;
  }
  return fit;
}

}  // namespace monoreg
