#include "cli.hpp"

#include "selfcheck.hpp"

#include "monoreg/slse.hpp"
#include "monoreg/smoothed_bootstrap.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#ifndef MONOREG_VERSION
#define MONOREG_VERSION "0.0.0"
#endif

namespace monoreg::cli {

namespace fs = std::filesystem;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string coverage_csv(const CoverageReport& report) {
  std::ostringstream os;
  os << "method,n,t,reps,coverage,mean_length,mc_se\n";
  for (const auto& r : report.rows)
    os << to_string(r.method) << ',' << r.n << ',' << format_double(r.t) << ',' << r.reps << ','
       << format_double(r.coverage) << ',' << format_double(r.mean_length) << ',' << format_double(r.mc_se) << '\n';
  return os.str();
}

std::string histogram_csv(const std::vector<double>& probs) {
  std::ostringstream os;
  os << "rep,prob\n";
  for (std::size_t i = 0; i < probs.size(); ++i) os << i << ',' << format_double(probs[i]) << '\n';
  return os.str();
}

namespace {

bool parse_number(const std::string& field, double& out) {
  const char* begin = field.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  if (end == begin) return false;
  while (*end == ' ' || *end == '\t' || *end == '\r') ++end;
  return *end == '\0';
}

}  // namespace

SortedSample read_sample_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data file: " + path);
  std::vector<std::pair<double, double>> pairs;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = line.find(',');
    const auto where = path + ":" + std::to_string(line_no) + ": ";
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      if (pairs.empty() && line_no == 1 && comma != std::string::npos) continue;
      throw std::runtime_error(where + "expected two comma-separated fields");
    }
    double x = 0.0;
    double y = 0.0;
    const bool ok = parse_number(line.substr(0, comma), x) && parse_number(line.substr(comma + 1), y);
    if (!ok) {
      if (line_no == 1) continue;  // header
      throw std::runtime_error(where + "fields are not numbers");
    }
    if (!(x >= 0.0 && x <= 1.0)) throw std::runtime_error(where + "x outside [0,1]");
    pairs.emplace_back(x, y);
  }
  if (pairs.empty()) throw std::runtime_error("data file has no rows: " + path);
  return sort_sample(pairs);
}

void write_sample_csv(const SortedSample& s, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << "x,y\n";
  for (Index i = 0; i < s.size(); ++i) os << format_double(s.xs[i]) << ',' << format_double(s.ys[i]) << '\n';
  if (!os) throw std::runtime_error("write failed: " + path);
}

namespace {

struct Options {
  ScenarioConfig cfg;
  std::optional<double> t0;
  std::vector<double> t_grid;
  std::string method = "smoothed";
  std::string center = "auto";
  std::string noise = "normal";
  std::string out_dir = ".";
  std::string data_file;
  std::string save_data;
};

void add_scenario_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("--method", o.method, "credible|percentile-regression|percentile-pairs|smoothed")
      ->check(CLI::IsMember({"credible", "percentile-regression", "percentile-pairs", "smoothed"}));
  cmd.add_option("--n", o.cfg.n, "sample size");
  cmd.add_option("--reps", o.cfg.reps, "Monte Carlo replications");
  cmd.add_option("--B", o.cfg.draws, "bootstrap/posterior draws per replication");
  cmd.add_option("--t0", o.t0, "single target point");
  cmd.add_option("--t-grid", o.t_grid, "comma-separated target points")->delimiter(',');
  cmd.add_option("--alpha", o.cfg.alpha, "one minus nominal level");
  cmd.add_option("--sigma", o.cfg.sigma, "noise standard deviation");
  cmd.add_option("--noise", o.noise, "normal|uniform")->check(CLI::IsMember({"normal", "uniform"}));
  cmd.add_option("--lambda", o.cfg.lambda, "prior scale lambda");
  cmd.add_option("--zeta", o.cfg.zeta, "prior mean zeta");
  cmd.add_option("--c", o.cfg.c, "bandwidth constant, h = c n^{-1/5}");
  cmd.add_option("--bins", o.cfg.num_bins, "bin count J (0: floor(n^{1/3} log n))");
  cmd.add_option("--seed", o.cfg.seed, "random seed");
  cmd.add_option("--workers", o.cfg.workers, "worker threads (0: all cores)");
  cmd.add_option("--out", o.out_dir, "output directory");
  cmd.add_option("--center", o.center, "f0|lse|theorem44|theorem45 (hist)")
      ->check(CLI::IsMember({"auto", "f0", "lse", "theorem44", "theorem45"}));
}

void resolve(Options& o) {
  o.cfg.method = parse_method(o.method);
  o.cfg.noise = parse_noise(o.noise);
  if (o.center == "auto")
    o.cfg.center = o.cfg.method == Method::Smoothed ? Center::SmoothedShifted : Center::F0;
  else
    o.cfg.center = parse_center(o.center);
  if (o.t0 && !o.t_grid.empty()) throw std::invalid_argument("give either --t0 or --t-grid, not both");
  if (o.t0) o.cfg.t_grid = {*o.t0};
  if (!o.t_grid.empty()) o.cfg.t_grid = o.t_grid;
}

nlohmann::json config_json(const ScenarioConfig& c) {
  return {{"n", c.n},
          {"reps", c.reps},
          {"B", c.draws},
          {"t_grid", c.t_grid},
          {"method", to_string(c.method)},
          {"center", to_string(c.center)},
          {"alpha", c.alpha},
          {"sigma", c.sigma},
          {"noise", to_string(c.noise)},
          {"lambda", c.lambda},
          {"zeta", c.zeta},
          {"c", c.c},
          {"bins", c.num_bins},
          {"seed", c.seed},
          {"workers", c.workers},
          {"kernel", KernelSpec::make(c.kernel).name()},
          {"regression_function", "x^2 + x/5"}};
}

// Writes every file or none: contents go to sibling temporaries first.
void write_outputs(const std::vector<std::pair<fs::path, std::string>>& files) {
  std::vector<fs::path> written;
  try {
    for (const auto& [path, content] : files) {
      fs::path tmp = path;
      tmp += ".partial";
      {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw std::runtime_error("cannot write " + tmp.string());
        written.push_back(tmp);
        os << content;
        if (!os) throw std::runtime_error("write failed: " + tmp.string());
      }
    }
    for (const auto& [path, content] : files) {
      fs::path tmp = path;
      tmp += ".partial";
      fs::rename(tmp, path);
    }
  } catch (...) {
    std::error_code ec;
    for (const auto& p : written) fs::remove(p, ec);
    throw;
  }
}

std::string manifest(const std::string& command, const ScenarioConfig& cfg, double seconds,
                     const std::vector<fs::path>& outputs, const nlohmann::json& extra = nlohmann::json::object()) {
  nlohmann::json m = {{"tool", "monoreg"},
                      {"version", MONOREG_VERSION},
                      {"command", command},
                      {"config", config_json(cfg)},
                      {"wall_time_seconds", seconds}};
  std::vector<std::string> names;
  for (const auto& p : outputs) names.push_back(p.string());
  m["outputs"] = names;
  m.update(extra);
  return m.dump(2) + "\n";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_coverage(const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const CoverageReport report = run_coverage(o.cfg);
  const fs::path dir(o.out_dir);
  fs::create_directories(dir);
  const fs::path csv = dir / "coverage.csv";
  const fs::path json = dir / "coverage.manifest.json";
  write_outputs({{csv, coverage_csv(report)}, {json, manifest("coverage", o.cfg, seconds_since(start), {csv})}});
  out << "wrote " << csv.string() << '\n';
  return kExitOk;
}

int cmd_hist(const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  if (o.cfg.t_grid.size() != 1) throw std::invalid_argument("hist needs a single target point (--t0)");
  const auto probs = run_conditional_histogram(o.cfg);
  const fs::path dir(o.out_dir);
  fs::create_directories(dir);
  const fs::path csv = dir / "hist.csv";
  const fs::path json = dir / "hist.manifest.json";
  write_outputs({{csv, histogram_csv(probs)}, {json, manifest("hist", o.cfg, seconds_since(start), {csv})}});
  out << "wrote " << csv.string() << '\n';
  return kExitOk;
}

int cmd_intervals(Options o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  SortedSample s;
  if (!o.data_file.empty()) {
    s = read_sample_csv(o.data_file);
    o.cfg.n = s.size();
  }
  o.cfg.validate();
  detail::require(o.cfg.draws >= 2, "intervals need B >= 2");
  if (o.data_file.empty()) {
    CounterRng rng = dataset_rng(o.cfg, 0);
    s = generate_dataset(o.cfg, rng);
  }
  if (!o.save_data.empty()) write_sample_csv(s, o.save_data);

  const TargetDraws td = compute_target_draws(o.cfg, s, o.cfg.t_grid, 0);
  const KernelSpec kernel = KernelSpec::make(o.cfg.kernel);
  const StepFunction lse = monotone_lse(s);
  const Bandwidth bw = Bandwidth::for_sample(o.cfg.c, s.size());

  std::ostringstream csv_text;
  csv_text << "t,lo,hi,lse,slse\n";
  for (std::size_t k = 0; k < o.cfg.t_grid.size(); ++k) {
    const double t = o.cfg.t_grid[k];
    const Interval iv = method_interval(o.cfg, td, static_cast<Index>(k));
    csv_text << format_double(t) << ',' << format_double(iv.lo) << ',' << format_double(iv.hi) << ','
             << format_double(lse(t)) << ',' << format_double(slse_evaluate(lse, t, bw, kernel)) << '\n';
  }
  const fs::path dir(o.out_dir);
  fs::create_directories(dir);
  const fs::path csv = dir / "intervals.csv";
  const fs::path json = dir / "intervals.manifest.json";
  nlohmann::json extra = {{"data_file", o.data_file}, {"sample_size", s.size()}};
  write_outputs(
      {{csv, csv_text.str()}, {json, manifest("intervals", o.cfg, seconds_since(start), {csv}, extra)}});
  out << "wrote " << csv.string() << '\n';
  return kExitOk;
}

int cmd_selfcheck(std::ostream& out) {
  const auto results = run_selfcheck();
  bool all = true;
  out << std::left << std::setw(36) << "check" << std::setw(26) << "observed" << std::setw(26) << "expected"
      << std::setw(12) << "tolerance" << "status\n";
  for (const auto& r : results) {
    all = all && r.passed();
    out << std::left << std::setw(36) << r.name << std::setw(26) << format_double(r.observed) << std::setw(26)
        << format_double(r.expected) << std::setw(12) << r.tolerance << (r.passed() ? "ok" : "FAIL") << '\n';
  }
  out << (all ? "all checks passed\n" : "some checks FAILED\n");
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Confidence and credible intervals for monotone regression"};
  app.require_subcommand(1);
  Options o;

  auto* coverage = app.add_subcommand("coverage", "Monte Carlo coverage of pointwise intervals");
  add_scenario_flags(*coverage, o);
  auto* hist = app.add_subcommand("hist", "conditional probabilities at one point, one per replication");
  add_scenario_flags(*hist, o);
  auto* intervals = app.add_subcommand("intervals", "intervals over a t-grid for one dataset");
  add_scenario_flags(*intervals, o);
  intervals->add_option("--data", o.data_file, "CSV file with columns x,y");
  intervals->add_option("--save-data", o.save_data, "write the dataset used to this CSV file");
  auto* selfcheck = app.add_subcommand("selfcheck", "run the embedded oracle checks");

  std::vector<std::string> argv_store{"monoreg"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (selfcheck->parsed()) return cmd_selfcheck(out);
    resolve(o);
    if (coverage->parsed()) return cmd_coverage(o, out);
    if (hist->parsed()) return cmd_hist(o, out);
    if (intervals->parsed()) return cmd_intervals(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace monoreg::cli
