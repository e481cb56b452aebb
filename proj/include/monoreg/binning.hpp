#pragma once

#include "monoreg/sample.hpp"
#include "monoreg/step_function.hpp"

#include <vector>

namespace monoreg {

/// Counts and response means over the bins ((j-1)/J, j/J], j = 1..J.
struct BinSummaries {
  int bins = 0;
  VectorXi counts;
  VectorXd means;  // 0 for empty bins

  long total() const { return counts.cast<long>().sum(); }
  VectorXd weights() const { return counts.cast<double>(); }
};

/// floor(n^{1/3} ln n), clamped to [1, n]. Requires n >= 2.
int choose_num_bins(long n);

/// 0-based bin of x in the J-bin partition. x = 0 falls into the first bin.
int bin_index(double x, int bins);

/// 0-based bin of every design point.
std::vector<int> assign_bins(const SortedSample& s, int bins);

BinSummaries summarize_bins(const SortedSample& s, int bins);

/// Unconstrained bin-constant least squares fit: ybar_j on bin j.
StepFunction binned_lse(const BinSummaries& b);

/// Isotonic regression of the bin means with weights n_j.
StepFunction monotone_binned_lse(const BinSummaries& b);

/// Isotonic regression of per-bin values with weights n_j, returned on the J-grid.
StepFunction isotonic_on_bins(const VectorXd& values, const BinSummaries& b);

}  // namespace monoreg
