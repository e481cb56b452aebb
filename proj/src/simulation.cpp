#include "monoreg/simulation.hpp"

#include "monoreg/bayes.hpp"
#include "monoreg/binning.hpp"
#include "monoreg/percentile_bootstrap.hpp"
#include "monoreg/quantile.hpp"
#include "monoreg/smoothed_bootstrap.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

namespace monoreg {

std::string to_string(Method m) {
  switch (m) {
    case Method::Credible: return "credible";
    case Method::PercentileRegression: return "percentile-regression";
    case Method::PercentilePairs: return "percentile-pairs";
    case Method::Smoothed: return "smoothed";
  }
  return "unknown";
}

std::string to_string(Center c) {
  switch (c) {
    case Center::F0: return "f0";
    case Center::Lse: return "lse";
    case Center::SmoothedShifted: return "theorem44";
    case Center::SmoothedOneSided: return "theorem45";
  }
  return "unknown";
}

std::string to_string(Noise n) { return n == Noise::Normal ? "normal" : "uniform"; }

Method parse_method(std::string_view s) {
  for (Method m : {Method::Credible, Method::PercentileRegression, Method::PercentilePairs, Method::Smoothed})
    if (s == to_string(m)) return m;
  throw std::invalid_argument("unknown method: " + std::string(s));
}

Center parse_center(std::string_view s) {
  for (Center c : {Center::F0, Center::Lse, Center::SmoothedShifted, Center::SmoothedOneSided})
    if (s == to_string(c)) return c;
  throw std::invalid_argument("unknown center: " + std::string(s));
}

Noise parse_noise(std::string_view s) {
  for (Noise n : {Noise::Normal, Noise::Uniform})
    if (s == to_string(n)) return n;
  throw std::invalid_argument("unknown noise: " + std::string(s));
}

double default_regression_function(double x) { return x * x + x / 5.0; }

std::vector<double> default_t_grid() {
  std::vector<double> grid;
  for (int k = 1; k <= 19; ++k) grid.push_back(k / 20.0);
  return grid;
}

void ScenarioConfig::validate() const {
  using detail::require;
  require(n >= 2, "n must be at least 2");
  require(reps >= 1, "reps must be at least 1");
  require(draws >= 1, "B must be at least 1");
  require(reps <= std::numeric_limits<std::uint32_t>::max(), "too many replications");
  require(draws < std::numeric_limits<std::uint32_t>::max(), "too many draws");
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0,1)");
  require(sigma >= 0.0 && std::isfinite(sigma), "sigma must be finite and nonnegative");
  require(lambda > 0.0, "lambda must be positive");
  require(std::isfinite(zeta), "zeta must be finite");
  require(c > 0.0, "bandwidth constant c must be positive");
  require(num_bins >= 0, "bin count must be nonnegative");
  require(workers >= 0, "workers must be nonnegative");
  require(!t_grid.empty(), "t grid is empty");
  for (double t : t_grid) require(t > 0.0 && t < 1.0, "t grid points must lie in (0,1)");
  require(static_cast<bool>(f0), "regression function is not set");
  if (center == Center::SmoothedShifted || center == Center::SmoothedOneSided)
    require(method == Method::Smoothed, "theorem44/theorem45 centering needs the smoothed method");
}

int ScenarioConfig::bins_for(long sample_size) const {
  return num_bins > 0 ? num_bins : choose_num_bins(sample_size);
}

SortedSample generate_dataset(const ScenarioConfig& cfg, CounterRng& rng) {
  const auto n = static_cast<Index>(cfg.n);
  VectorXd xs(n);
  VectorXd ys(n);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (Index i = 0; i < n; ++i) xs[i] = unit(rng);
  if (cfg.noise == Noise::Normal) {
    std::normal_distribution<double> normal;
    for (Index i = 0; i < n; ++i) ys[i] = cfg.f0(xs[i]) + cfg.sigma * normal(rng);
  } else {
    // centered uniform with standard deviation sigma
    std::uniform_real_distribution<double> sym(-1.0, 1.0);
    const double half_width = cfg.sigma * std::sqrt(3.0);
    for (Index i = 0; i < n; ++i) ys[i] = cfg.f0(xs[i]) + half_width * sym(rng);
  }
  return sort_sample(xs, ys);
}

TargetDraws compute_target_draws(const ScenarioConfig& cfg, const SortedSample& s, const std::vector<double>& targets,
                                 long rep) {
  const Index n = s.size();
  const auto t_count = static_cast<Index>(targets.size());
  const auto b_count = static_cast<Index>(cfg.draws);
  TargetDraws td{Eigen::MatrixXd(b_count, t_count), VectorXd(t_count),
                 VectorXd::Constant(t_count, std::numeric_limits<double>::quiet_NaN())};

  auto record = [&](Index d, const StepFunction& f) {
    for (Index k = 0; k < t_count; ++k) td.draws(d, k) = f(targets[static_cast<std::size_t>(k)]);
  };

  if (cfg.method == Method::Smoothed) {
    const KernelSpec kernel = KernelSpec::make(cfg.kernel);
    const auto setup = prepare_smoothed_bootstrap(s, Bandwidth::for_sample(cfg.c, n), kernel);
    for (Index k = 0; k < t_count; ++k) {
      const double t = targets[static_cast<std::size_t>(k)];
      td.lse[k] = setup.lse(t);
      td.slse[k] = slse_evaluate(setup.lse, t, setup.bandwidth, kernel);
    }
    for (Index d = 0; d < b_count; ++d) {
      CounterRng rng = draw_rng(cfg, rep, d);
      record(d, smoothed_bootstrap_draw(s.xs, setup.slse_at_x, setup.residuals, rng));
    }
    return td;
  }

  const StepFunction lse = monotone_lse(s);
  for (Index k = 0; k < t_count; ++k) td.lse[k] = lse(targets[static_cast<std::size_t>(k)]);

  const int bins = cfg.bins_for(n);
  if (cfg.method == Method::PercentilePairs) {
    const PairsBootstrap boot(s, bins);
    for (Index d = 0; d < b_count; ++d) {
      CounterRng rng = draw_rng(cfg, rep, d);
      record(d, boot.draw(rng));
    }
    return td;
  }

  const BinSummaries b = summarize_bins(s, bins);
  const PriorSpec prior = PriorSpec::uniform(bins, cfg.zeta, cfg.lambda);
  const double sigma2 = empirical_bayes_sigma2(s, b, prior);
  if (cfg.method == Method::Credible) {
    const PosteriorParams pp = posterior_params(b, prior, sigma2);
    for (Index d = 0; d < b_count; ++d) {
      CounterRng rng = draw_rng(cfg, rep, d);
      record(d, draw_projected_posterior(pp, b, rng));
    }
  } else {
    for (Index d = 0; d < b_count; ++d) {
      CounterRng rng = draw_rng(cfg, rep, d);
      record(d, regression_bootstrap_draw(b, sigma2, rng));
    }
  }
  return td;
}

namespace {

std::vector<double> column_of(const TargetDraws& td, Index j) {
  std::vector<double> col(static_cast<std::size_t>(td.draws.rows()));
  for (Index d = 0; d < td.draws.rows(); ++d) col[static_cast<std::size_t>(d)] = td.draws(d, j);
  return col;
}

}  // namespace

Interval method_interval(const ScenarioConfig& cfg, const TargetDraws& td, Index j) {
  auto col = column_of(td, j);
  if (cfg.method != Method::Smoothed) return quantile_interval(col, cfg.alpha);
  for (double& v : col) v -= td.slse[j];
  return smoothed_ci(td.lse[j], col, cfg.alpha);
}

void parallel_for(long reps, int workers, const std::function<void(long)>& body) {
  long threads = workers > 0 ? workers : static_cast<long>(std::max(1u, std::thread::hardware_concurrency()));
  threads = std::clamp<long>(threads, 1, reps);
  if (threads == 1) {
    for (long r = 0; r < reps; ++r) body(r);
    return;
  }
  std::atomic<long> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (long w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (long r = next++; r < reps && !failed; r = next++) {
        try {
          body(r);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          failed = true;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

CoverageReport run_coverage(const ScenarioConfig& cfg) {
  cfg.validate();
  detail::require(cfg.draws >= 2, "coverage needs B >= 2");
  const auto t_count = cfg.t_grid.size();
  std::vector<std::vector<Interval>> intervals(static_cast<std::size_t>(cfg.reps));
  parallel_for(cfg.reps, cfg.workers, [&](long rep) {
    CounterRng rng = dataset_rng(cfg, rep);
    const SortedSample s = generate_dataset(cfg, rng);
    const TargetDraws td = compute_target_draws(cfg, s, cfg.t_grid, rep);
    auto& out = intervals[static_cast<std::size_t>(rep)];
    out.resize(t_count);
    for (std::size_t k = 0; k < t_count; ++k) out[k] = method_interval(cfg, td, static_cast<Index>(k));
  });

  CoverageReport report;
  for (std::size_t k = 0; k < t_count; ++k) {
    const double t = cfg.t_grid[k];
    const double truth = cfg.f0(t);
    long hits = 0;
    double length = 0.0;
    for (const auto& rep : intervals) {
      if (rep[k].contains(truth)) ++hits;
      length += rep[k].length();
    }
    const double reps = static_cast<double>(cfg.reps);
    const double p = hits / reps;
    report.rows.push_back({cfg.method, cfg.n, t, cfg.reps, hits, p, length / reps, std::sqrt(p * (1.0 - p) / reps)});
  }
  return report;
}

std::vector<double> run_conditional_histogram(const ScenarioConfig& cfg) {
  cfg.validate();
  detail::require(cfg.t_grid.size() == 1, "conditional histogram needs exactly one target point");
  const double t0 = cfg.t_grid.front();
  const double truth = cfg.f0(t0);
  std::vector<double> probs(static_cast<std::size_t>(cfg.reps));
  parallel_for(cfg.reps, cfg.workers, [&](long rep) {
    CounterRng rng = dataset_rng(cfg, rep);
    const SortedSample s = generate_dataset(cfg, rng);
    const TargetDraws td = compute_target_draws(cfg, s, cfg.t_grid, rep);
    auto col = column_of(td, 0);
    double p = 0.0;
    switch (cfg.center) {
      case Center::F0:
        for (double& v : col) v -= truth;
        p = conditional_prob_below(col, 0.0);
        break;
      case Center::Lse:
        for (double& v : col) v -= td.lse[0];
        p = conditional_prob_below(col, 0.0);
        break;
      case Center::SmoothedShifted:
        for (double& v : col) v -= td.slse[0];
        p = centered_conditional_prob(col, td.lse[0] - truth);
        break;
      case Center::SmoothedOneSided:
        for (double& v : col) v -= td.slse[0];
        p = reversed_conditional_prob(col, td.lse[0] - truth);
        break;
    }
    probs[static_cast<std::size_t>(rep)] = p;
  });
  return probs;
}

std::vector<double> run_slse_study(const ScenarioConfig& cfg) {
  cfg.validate();
  detail::require(cfg.t_grid.size() == 1, "SLSE study needs exactly one target point");
  const double t0 = cfg.t_grid.front();
  const KernelSpec kernel = KernelSpec::make(cfg.kernel);
  const Bandwidth bw = Bandwidth::for_sample(cfg.c, cfg.n);
  const double scale = std::pow(static_cast<double>(cfg.n), 0.4);
  std::vector<double> out(static_cast<std::size_t>(cfg.reps));
  parallel_for(cfg.reps, cfg.workers, [&](long rep) {
    CounterRng rng = dataset_rng(cfg, rep);
    const SortedSample s = generate_dataset(cfg, rng);
    const double est = slse_evaluate(monotone_lse(s), t0, bw, kernel);
    out[static_cast<std::size_t>(rep)] = scale * (est - cfg.f0(t0));
  });
  return out;
}

}  // namespace monoreg
