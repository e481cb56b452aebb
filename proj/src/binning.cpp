#include "monoreg/binning.hpp"

#include "monoreg/isotonic.hpp"

#include <algorithm>
#include <cmath>

namespace monoreg {

int choose_num_bins(long n) {
  detail::require(n >= 2, "bin count needs n >= 2");
  const double nd = static_cast<double>(n);
  const auto j = static_cast<long>(std::floor(std::cbrt(nd) * std::log(nd)));
  return static_cast<int>(std::clamp<long>(j, 1, n));
}

int bin_index(double x, int bins) {
  detail::require(bins >= 1, "need at least one bin");
  detail::require(x >= 0.0 && x <= 1.0, "x outside [0,1]");
  const double jd = static_cast<double>(bins);
  int j = static_cast<int>(std::ceil(x * jd));
  j = std::clamp(j, 1, bins);
  // agree exactly with the breakpoints j/J used by grid step functions
  while (j > 1 && x <= static_cast<double>(j - 1) / jd) --j;
  while (j < bins && x > static_cast<double>(j) / jd) ++j;
  return j - 1;
}

std::vector<int> assign_bins(const SortedSample& s, int bins) {
  std::vector<int> out(static_cast<std::size_t>(s.size()));
  for (Index i = 0; i < s.size(); ++i) out[static_cast<std::size_t>(i)] = bin_index(s.xs[i], bins);
  return out;
}

BinSummaries summarize_bins(const SortedSample& s, int bins) {
  detail::require(bins >= 1, "need at least one bin");
  BinSummaries b;
  b.bins = bins;
  b.counts = VectorXi::Zero(bins);
  b.means = VectorXd::Zero(bins);
  for (Index i = 0; i < s.size(); ++i) {
    const int j = bin_index(s.xs[i], bins);
    b.counts[j] += 1;
    b.means[j] += s.ys[i];
  }
  for (int j = 0; j < bins; ++j)
    if (b.counts[j] > 0) b.means[j] /= b.counts[j];
  return b;
}

StepFunction binned_lse(const BinSummaries& b) { return grid_step_function(b.means); }

StepFunction monotone_binned_lse(const BinSummaries& b) { return isotonic_on_bins(b.means, b); }

StepFunction isotonic_on_bins(const VectorXd& values, const BinSummaries& b) {
  detail::require(values.size() == b.bins, "one value per bin expected");
  detail::require(b.counts.maxCoeff() > 0, "all bins are empty");
  return grid_step_function(isotonic_fit(values, b.weights()));
}

}  // namespace monoreg
