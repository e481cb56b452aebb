#include "helpers.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace monoreg;
using test::vec;

TEST_CASE("triweight kernel values and moments") {
  const KernelSpec k = KernelSpec::triweight();
  CHECK(k(0.0) == doctest::Approx(1.09375).epsilon(1e-15));
  CHECK(k(1.0) == 0.0);
  CHECK(k(-1.0) == 0.0);
  CHECK(k(1.5) == 0.0);
  CHECK(k(0.3) == k(-0.3));
  for (double u = -1.0; u <= 1.0; u += 0.01) CHECK(k(u) >= 0.0);
  CHECK(k.scaled(0.05, 0.1) == doctest::Approx(k(0.5) / 0.1));

  CHECK(std::abs(oracle::kernel_moment(k, 0) - 1.0) <= 1e-8);
  CHECK(std::abs(oracle::kernel_moment(k, 1)) <= 1e-8);
  CHECK(std::abs(oracle::kernel_moment(k, 2) - 1.0 / 9.0) <= 1e-8);
  CHECK(std::abs(oracle::kernel_roughness(k) - 350.0 / 429.0) <= 1e-8);
  CHECK(k.second_moment() == doctest::Approx(1.0 / 9.0).epsilon(1e-13));
  CHECK(k.roughness() == doctest::Approx(350.0 / 429.0).epsilon(1e-13));
}

TEST_CASE("partial moments match quadrature") {
  const KernelSpec k = KernelSpec::triweight();
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int r = 0; r < 200; ++r) {
    double a = u(gen), b = u(gen);
    if (a > b) std::swap(a, b);
    for (int m = 0; m <= 2; ++m) {
      const double quad = oracle::integrate(
          [&](double x) { return std::pow(x, m) * k(x); }, std::max(a, -1.0), std::min(b, 1.0));
      CHECK(std::abs(k.partial_moment(m, a, b) - quad) <= 1e-12);
    }
  }
}

TEST_CASE("bandwidth") {
  const Bandwidth bw = Bandwidth::for_sample(0.5, 500);
  CHECK(bw.h == doctest::Approx(0.5 * std::pow(500.0, -0.2)));
  CHECK_THROWS_AS(Bandwidth::for_sample(0.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(Bandwidth::for_sample(-1.0, 100), std::invalid_argument);
  CHECK_THROWS_AS(Bandwidth::fixed(0.5), std::invalid_argument);
  CHECK_THROWS_AS(Bandwidth::fixed(0.0), std::invalid_argument);
  CHECK_THROWS_AS(Bandwidth::for_sample(2.0, 2), std::invalid_argument);
}

TEST_CASE("SLSE examples") {
  const KernelSpec k = KernelSpec::triweight();
  const StepFunction constant(vec({1.0}), vec({2.75}));
  for (double t = 0.0; t <= 1.0; t += 0.01)
    CHECK(slse_evaluate(constant, t, Bandwidth::fixed(0.15), k) == doctest::Approx(2.75).epsilon(1e-13));

  const StepFunction jump(vec({0.5, 1.0}), vec({0.0, 1.0}));
  CHECK(slse_evaluate(jump, 0.5, Bandwidth::fixed(0.1), k) == doctest::Approx(0.5).epsilon(1e-14));

  const StepFunction stairs = grid_step_function(VectorXd::LinSpaced(10, 0.05, 0.95));
  for (double t : {0.3, 0.45, 0.52, 0.7}) {
    const double exact = slse_evaluate(stairs, t, Bandwidth::fixed(0.12), k);
    CHECK(std::abs(exact - oracle::slse_by_quadrature(stairs, t, 0.12, k)) <= 1e-8);
  }
}

TEST_CASE("SLSE matches quadrature on random step functions, interior and boundary") {
  const KernelSpec k = KernelSpec::triweight();
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int r = 0; r < 50; ++r) {
    std::vector<double> bp;
    const int m = 1 + r % 15;
    for (int j = 0; j + 1 < m; ++j) bp.push_back(unit(gen));
    std::sort(bp.begin(), bp.end());
    bp.push_back(1.0);
    VectorXd values(m);
    for (int j = 0; j < m; ++j) values[j] = 3.0 * unit(gen) - 1.0;
    const StepFunction f(Eigen::Map<VectorXd>(bp.data(), m), values);
    const double h = 0.03 + 0.45 * unit(gen);
    for (int q = 0; q < 10; ++q) {
      const double t = unit(gen);
      const double exact = slse_evaluate(f, t, Bandwidth::fixed(h), k);
      REQUIRE(std::abs(exact - oracle::slse_by_quadrature(f, t, h, k)) <= 1e-8);
    }
  }
}

TEST_CASE("boundary correction is continuous and reproduces constants and lines") {
  const KernelSpec k = KernelSpec::triweight();
  const double h = 0.2;
  const StepFunction f = grid_step_function(VectorXd::LinSpaced(40, 0.0, 1.0).array().square().matrix().eval());
  for (double edge : {h, 1.0 - h}) {
    const double left = slse_evaluate(f, edge - 1e-10, Bandwidth::fixed(h), k);
    const double right = slse_evaluate(f, edge + 1e-10, Bandwidth::fixed(h), k);
    CHECK(std::abs(left - right) <= 1e-8);
  }

  // a fine staircase of a line is reproduced up to discretization even at the ends
  const int cells = 2000;
  VectorXd mid(cells);
  for (int j = 0; j < cells; ++j) mid[j] = (j + 0.5) / cells;
  const StepFunction line = grid_step_function(mid);
  for (double t : {0.0, 0.05, 0.5, 0.97, 1.0})
    CHECK(std::abs(slse_evaluate(line, t, Bandwidth::fixed(h), k) - t) <= 1e-3);
}

TEST_CASE("SLSE of a monotone fit is nondecreasing away from the ends") {
  const KernelSpec k = KernelSpec::triweight();
  for (int r = 0; r < 10; ++r) {
    const auto s = test::simulated_sample(300, 0.2, 60 + r);
    const StepFunction lse = monotone_lse(s);
    const Bandwidth bw = Bandwidth::for_sample(0.5, 300);
    double prev = -1e300;
    for (double t = bw.h; t <= 1.0 - bw.h; t += 0.002) {
      const double v = slse_evaluate(lse, t, bw, k);
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("centered residuals") {
  const auto s = sort_sample(vec({0.2, 0.6}), vec({1, 3}));
  const VectorXd e = centered_residuals(s, vec({1, 1}));
  CHECK(e == vec({-1, 1}));
  CHECK(centered_residuals(s, s.ys).isZero());
  CHECK_THROWS_AS(centered_residuals(s, vec({1})), std::invalid_argument);

  const auto big = test::simulated_sample(1000, 3.0, 2);
  const VectorXd r = centered_residuals(big, VectorXd::Constant(1000, 0.4));
  CHECK(std::abs(r.sum()) <= 1e-12 * 1000 * big.ys.cwiseAbs().maxCoeff());
}

TEST_CASE("asymptotic constants") {
  const KernelSpec k = KernelSpec::triweight();
  const auto a = slse_asymptotics(0.5, 2.0, 0.01, 1.0, k);
  CHECK(a.bias == doctest::Approx(0.25 / 9.0).epsilon(1e-12));
  CHECK(a.variance == doctest::Approx(0.01 * 350.0 / 429.0 / 0.5).epsilon(1e-12));
  const double c = mse_optimal_bandwidth_constant(2.0, 0.01, 1.0, k);
  const auto at = [&](double cc) {
    const auto s = slse_asymptotics(cc, 2.0, 0.01, 1.0, k);
    return s.bias * s.bias + s.variance;
  };
  CHECK(at(c) <= at(c * 1.05));
  CHECK(at(c) <= at(c * 0.95));
}
