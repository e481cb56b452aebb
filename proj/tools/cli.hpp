#pragma once

#include "monoreg/sample.hpp"
#include "monoreg/simulation.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace monoreg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

/// Runs the command line `args` (program name excluded). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// %.17g, round-trip exact for doubles.
std::string format_double(double v);

std::string coverage_csv(const CoverageReport& report);
std::string histogram_csv(const std::vector<double>& probs);

/// CSV `x,y` with an optional header line. Malformed rows raise
/// std::runtime_error naming the line number.
SortedSample read_sample_csv(const std::string& path);
void write_sample_csv(const SortedSample& s, const std::string& path);

}  // namespace monoreg::cli
