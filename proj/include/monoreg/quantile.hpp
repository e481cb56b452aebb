#pragma once

#include "monoreg/types.hpp"

#include <span>

namespace monoreg {

/// 1-based order statistic used for the empirical q-quantile of B draws: ceil(q*B),
/// clamped to [1, B]. Products within a few ulps of an integer are treated as
/// that integer so that e.g. q = 0.975, B = 1000 selects the 975th value.
Index order_statistic_rank(double q, Index draws);

/// Empirical q-quantile under the order-statistic rule above.
double empirical_quantile(std::span<const double> draws, double q);

/// (alpha/2, 1 - alpha/2) empirical quantiles. Requires at least two draws and 0 < alpha < 1.
Interval quantile_interval(std::span<const double> draws, double alpha);

/// Fraction of draws that are <= threshold.
double fraction_at_most(std::span<const double> draws, double threshold);

}  // namespace monoreg
