#include "cli.hpp"
#include "helpers.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using namespace monoreg;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("monoreg_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("format_double round-trips") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 123456789.123456789, 0.35}) CHECK(std::stod(cli::format_double(v)) == v);
}

TEST_CASE("coverage command writes csv and manifest") {
  const auto dir = fresh_dir("coverage");
  const auto r = run({"coverage", "--method", "credible", "--n", "100", "--reps", "5", "--B", "50", "--seed", "42",
                      "--alpha", "0.1", "--out", dir.string()});
  REQUIRE(r.code == 0);
  const auto rows = lines(slurp(dir / "coverage.csv"));
  REQUIRE(rows.size() == 20);
  CHECK(rows[0] == "method,n,t,reps,coverage,mean_length,mc_se");
  CHECK(rows[1].rfind("credible,100,0.050000000000000003,5,", 0) == 0);
  const auto manifest = nlohmann::json::parse(slurp(dir / "coverage.manifest.json"));
  CHECK(manifest["config"]["alpha"] == 0.1);
  CHECK(manifest["config"]["method"] == "credible");
  CHECK(manifest["config"]["seed"] == 42);
  CHECK(manifest["version"] == "0.1.0");
  CHECK(manifest["outputs"].size() == 1);
  CHECK(manifest.contains("wall_time_seconds"));
  for (const auto& e : fs::directory_iterator(dir)) CHECK(e.path().extension() != ".partial");
}

TEST_CASE("identical flags give byte-identical output") {
  const auto a = fresh_dir("same_a");
  const auto b = fresh_dir("same_b");
  std::vector<std::string> args{"coverage", "--method", "percentile-pairs", "--n", "80", "--reps", "6", "--B", "30",
                                "--t-grid", "0.25,0.5,0.75"};
  auto ra = args;
  ra.insert(ra.end(), {"--out", a.string(), "--workers", "1"});
  auto rb = args;
  rb.insert(rb.end(), {"--out", b.string(), "--workers", "4"});
  REQUIRE(run(ra).code == 0);
  REQUIRE(run(rb).code == 0);
  CHECK(slurp(a / "coverage.csv") == slurp(b / "coverage.csv"));
  CHECK(lines(slurp(a / "coverage.csv")).size() == 4);
}

TEST_CASE("hist command") {
  const auto dir = fresh_dir("hist");
  auto r = run({"hist", "--method", "smoothed", "--n", "100", "--reps", "7", "--B", "40", "--t0", "0.5", "--out",
                dir.string()});
  REQUIRE(r.code == 0);
  auto rows = lines(slurp(dir / "hist.csv"));
  CHECK(rows.size() == 8);
  CHECK(rows[0] == "rep,prob");
  CHECK(nlohmann::json::parse(slurp(dir / "hist.manifest.json"))["config"]["center"] == "theorem44");

  r = run({"hist", "--method", "percentile-regression", "--center", "f0", "--n", "100", "--reps", "3", "--B", "20",
           "--t0", "0.5", "--out", dir.string()});
  CHECK(r.code == 0);
  r = run({"hist", "--method", "credible", "--center", "lse", "--n", "100", "--reps", "3", "--B", "20", "--t0",
           "0.5", "--out", dir.string()});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(slurp(dir / "hist.manifest.json"))["config"]["center"] == "lse");

  r = run({"hist", "--method", "credible", "--center", "theorem44", "--t0", "0.5", "--out", dir.string()});
  CHECK(r.code == 1);
  r = run({"hist", "--n", "100", "--reps", "2", "--B", "10", "--out", dir.string()});
  CHECK(r.code == 1);
}

TEST_CASE("intervals command on simulated, noiseless and external data") {
  const auto dir = fresh_dir("intervals");
  const auto data = dir / "sample.csv";
  auto r = run({"intervals", "--n", "100", "--B", "100", "--out", dir.string(), "--save-data", data.string()});
  REQUIRE(r.code == 0);
  const auto rows = lines(slurp(dir / "intervals.csv"));
  REQUIRE(rows.size() == 20);
  CHECK(rows[0] == "t,lo,hi,lse,slse");
  const std::string first = slurp(dir / "intervals.csv");

  // reading the saved sample back reproduces the same intervals
  r = run({"intervals", "--data", data.string(), "--B", "100", "--out", dir.string()});
  REQUIRE(r.code == 0);
  CHECK(slurp(dir / "intervals.csv") == first);

  r = run({"intervals", "--method", "credible", "--sigma", "0", "--n", "2000", "--B", "200", "--out", dir.string()});
  REQUIRE(r.code == 0);
  const auto noiseless = lines(slurp(dir / "intervals.csv"));
  for (std::size_t k = 1; k < noiseless.size(); ++k) {
    std::stringstream ss(noiseless[k]);
    std::string field;
    std::vector<double> v;
    while (std::getline(ss, field, ',')) v.push_back(std::stod(field));
    const double truth = default_regression_function(v[0]);
    CHECK(std::abs(v[1] - truth) < 0.03);
    CHECK(std::abs(v[2] - truth) < 0.03);
    CHECK(v[2] - v[1] < 0.03);
  }
}

TEST_CASE("sample csv round trip and malformed rows") {
  const auto dir = fresh_dir("csv");
  const auto s = test::simulated_sample(50, 0.1, 3);
  cli::write_sample_csv(s, (dir / "s.csv").string());
  const auto back = cli::read_sample_csv((dir / "s.csv").string());
  CHECK(back.xs == s.xs);
  CHECK(back.ys == s.ys);

  std::ofstream(dir / "bad.csv") << "x,y\n0.1,2\n0.2,abc\n";
  try {
    cli::read_sample_csv((dir / "bad.csv").string());
    FAIL("expected an error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find(":3:") != std::string::npos);
  }
  std::ofstream(dir / "bad2.csv") << "0.1,2\n0.5\n";
  CHECK_THROWS_WITH_AS(cli::read_sample_csv((dir / "bad2.csv").string()), doctest::Contains(":2:"),
                       std::runtime_error);
  std::ofstream(dir / "bad3.csv") << "0.1,2\n1.5,1\n";
  CHECK_THROWS_WITH_AS(cli::read_sample_csv((dir / "bad3.csv").string()), doctest::Contains(":2:"),
                       std::runtime_error);

  const auto r = run({"intervals", "--data", (dir / "bad.csv").string(), "--out", dir.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find(":3:") != std::string::npos);
  CHECK(!fs::exists(dir / "intervals.csv"));
}

TEST_CASE("usage errors and selfcheck") {
  CHECK(run({}).code == 1);
  CHECK(run({"coverage", "--method", "magic"}).code == 1);
  CHECK(run({"coverage", "--n", "ten"}).code == 1);
  CHECK(run({"coverage", "--alpha", "1.5", "--out", fresh_dir("alpha").string()}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  const auto r = run({"selfcheck"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0.1111111111111111") != std::string::npos);
  CHECK(r.out.find("0.81585081585081587") != std::string::npos);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}
