#pragma once

#include "monoreg/types.hpp"

#include <span>
#include <utility>

namespace monoreg {

/// Design points sorted ascending with paired responses.
struct SortedSample {
  VectorXd xs;
  VectorXd ys;

  Index size() const { return xs.size(); }
};

/// Stable sort by x; ties stay in input order. Throws on empty input or x outside [0,1].
SortedSample sort_sample(std::span<const std::pair<double, double>> pairs);
SortedSample sort_sample(const VectorXd& xs, const VectorXd& ys);

}  // namespace monoreg
