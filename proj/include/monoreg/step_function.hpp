#pragma once

#include "monoreg/types.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace monoreg {

/// Right-continuous piecewise-constant function on [0,1].
///
/// Cell j covers (b_{j-1}, b_j] with b_0 = 0, and t = 0 belongs to the first
/// cell. The last breakpoint is always 1.
template <typename Scalar>
class BasicStepFunction {
 public:
  BasicStepFunction(Vector<Scalar> breakpoints, Vector<Scalar> values)
      : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    detail::require(breakpoints_.size() >= 1, "step function: need at least one cell");
    detail::require(breakpoints_.size() == values_.size(),
                    "step function: breakpoints and values differ in length");
    for (Index j = 0; j < breakpoints_.size(); ++j) {
      detail::require(breakpoints_[j] >= Scalar(0) && breakpoints_[j] <= Scalar(1),
                      "step function: breakpoint outside [0,1]");
      if (j > 0)
        detail::require(breakpoints_[j] > breakpoints_[j - 1],
                        "step function: breakpoints must be strictly increasing");
    }
    detail::require(breakpoints_[breakpoints_.size() - 1] == Scalar(1),
                    "step function: last breakpoint must be 1");
  }

  const Vector<Scalar>& breakpoints() const { return breakpoints_; }
  const Vector<Scalar>& values() const { return values_; }
  Index cells() const { return values_.size(); }

  /// Left end of cell j (0 for the first cell).
  Scalar cell_begin(Index j) const { return j == 0 ? Scalar(0) : breakpoints_[j - 1]; }
  Scalar cell_end(Index j) const { return breakpoints_[j]; }

  /// Index of the cell containing t.
  Index locate(Scalar t) const {
    const Scalar* first = breakpoints_.data();
    const Scalar* last = first + breakpoints_.size();
    const Scalar* it = std::lower_bound(first, last, t);
    if (it == last) --it;
    return static_cast<Index>(it - first);
  }

  Scalar operator()(Scalar t) const {
    detail::require(t >= Scalar(0) && t <= Scalar(1), "step function: t outside [0,1]");
    return values_[locate(t)];
  }

  bool is_nondecreasing() const {
    for (Index j = 1; j < values_.size(); ++j)
      if (values_[j] < values_[j - 1]) return false;
    return true;
  }

 private:
  Vector<Scalar> breakpoints_;
  Vector<Scalar> values_;
};

using StepFunction = BasicStepFunction<double>;

template <typename Scalar>
Scalar eval_step(const BasicStepFunction<Scalar>& f, Scalar t) {
  return f(t);
}

/// Step function on the equal-width grid j/J carrying one value per bin.
template <typename Derived>
BasicStepFunction<typename Derived::Scalar> grid_step_function(const Eigen::MatrixBase<Derived>& values) {
  using Scalar = typename Derived::Scalar;
  const Index bins = values.size();
  detail::require(bins >= 1, "grid step function: need at least one bin");
  Vector<Scalar> bp(bins);
  for (Index j = 0; j < bins; ++j) bp[j] = Scalar(j + 1) / Scalar(bins);
  bp[bins - 1] = Scalar(1);
  return BasicStepFunction<Scalar>(std::move(bp), values.derived().template cast<Scalar>());
}

/// Step function of a per-point fit: fitted[i] holds on (x_{i-1}, x_i].
///
/// Consecutive equal values share a cell, the last cell is extended to 1 and
/// points tied in x collapse into the first cell ending there.
template <typename DerivedX, typename DerivedF>
BasicStepFunction<typename DerivedF::Scalar> point_step_function(const Eigen::MatrixBase<DerivedX>& xs,
                                                                 const Eigen::MatrixBase<DerivedF>& fitted) {
  using Scalar = typename DerivedF::Scalar;
  const Index n = xs.size();
  detail::require(n >= 1 && fitted.size() == n, "point step function: size mismatch");
  std::vector<Scalar> bp;
  std::vector<Scalar> val;
  bp.reserve(static_cast<std::size_t>(n));
  val.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    const bool block_end = (i + 1 == n) || fitted[i + 1] != fitted[i];
    if (!block_end) continue;
    const Scalar b = (i + 1 == n) ? Scalar(1) : Scalar(xs[i]);
    if (!bp.empty() && b <= bp.back()) continue;
    bp.push_back(b);
    val.push_back(fitted[i]);
  }
  return BasicStepFunction<Scalar>(Eigen::Map<const Vector<Scalar>>(bp.data(), static_cast<Index>(bp.size())),
                                   Eigen::Map<const Vector<Scalar>>(val.data(), static_cast<Index>(val.size())));
}

}  // namespace monoreg
