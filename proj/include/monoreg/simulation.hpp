#pragma once

#include "monoreg/kernel.hpp"
#include "monoreg/rng.hpp"
#include "monoreg/sample.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace monoreg {

enum class Method { Credible, PercentileRegression, PercentilePairs, Smoothed };
enum class Center { F0, Lse, SmoothedShifted, SmoothedOneSided };
enum class Noise { Normal, Uniform };

std::string to_string(Method m);
std::string to_string(Center c);
std::string to_string(Noise n);
Method parse_method(std::string_view s);
Center parse_center(std::string_view s);
Noise parse_noise(std::string_view s);

/// Coverage level of the corrected credible/percentile limit used as the
/// reference line in coverage plots.
inline constexpr double kCorrectedCoverageLevel = 0.96324;

/// f0(x) = x^2 + x/5.
double default_regression_function(double x);

/// {0.05, 0.10, ..., 0.95}.
std::vector<double> default_t_grid();

struct ScenarioConfig {
  long n = 500;
  long reps = 500;
  long draws = 500;  // B
  std::vector<double> t_grid = default_t_grid();
  Method method = Method::Smoothed;
  Center center = Center::F0;
  double alpha = 0.05;
  double sigma = 0.1;
  Noise noise = Noise::Normal;
  double lambda = 10.0;
  double zeta = 0.0;
  double c = 0.5;
  int num_bins = 0;  // 0: choose_num_bins(n)
  std::uint64_t seed = 1;
  int workers = 1;   // 0: hardware concurrency
  std::function<double(double)> f0 = default_regression_function;
  KernelFamily kernel = KernelFamily::Triweight;

  /// Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
  int bins_for(long sample_size) const;
};

/// Uniform design on [0,1], Y = f0(X) + noise, sorted by X.
SortedSample generate_dataset(const ScenarioConfig& cfg, CounterRng& rng);

/// Stream 0 of each replication generates data; draw b uses stream b + 1.
inline CounterRng dataset_rng(const ScenarioConfig& cfg, long rep) {
  return CounterRng(cfg.seed, static_cast<std::uint32_t>(rep), 0);
}
inline CounterRng draw_rng(const ScenarioConfig& cfg, long rep, long draw) {
  return CounterRng(cfg.seed, static_cast<std::uint32_t>(rep), static_cast<std::uint32_t>(draw + 1));
}

/// Draws of the method's bootstrap/posterior estimate at each target, plus the
/// original-sample LSE and (smoothed method only) SLSE at the targets.
struct TargetDraws {
  Eigen::MatrixXd draws;  // B x T
  VectorXd lse;           // fhat_n(t)
  VectorXd slse;          // SLSE(t); NaN unless the method is smoothed
};

TargetDraws compute_target_draws(const ScenarioConfig& cfg, const SortedSample& s, const std::vector<double>& targets,
                                 long rep);

/// Interval at target column `j` built by the configured method.
Interval method_interval(const ScenarioConfig& cfg, const TargetDraws& td, Index j);

struct CoverageRow {
  Method method;
  long n;
  double t;
  long reps;
  long hits;
  double coverage;
  double mean_length;
  double mc_se;  // sqrt(p (1 - p) / reps)
};

struct CoverageReport {
  std::vector<CoverageRow> rows;
};

CoverageReport run_coverage(const ScenarioConfig& cfg);

/// One conditional probability per replication at the single grid point,
/// as a relative frequency over B draws, centered per cfg.center.
std::vector<double> run_conditional_histogram(const ScenarioConfig& cfg);

/// n^{2/5} (SLSE(t0) - f0(t0)) per replication, t0 = the single grid point.
std::vector<double> run_slse_study(const ScenarioConfig& cfg);

/// Runs body(rep) for rep in [0, reps) on `workers` threads. Order of execution
/// is unspecified; callers write results into per-rep slots.
void parallel_for(long reps, int workers, const std::function<void(long)>& body);

}  // namespace monoreg
