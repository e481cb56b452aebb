#pragma once

#include "monoreg/monoreg.hpp"

#include <doctest.h>

#include <initializer_list>
#include <random>
#include <vector>

namespace test {

inline monoreg::VectorXd vec(std::initializer_list<double> xs) {
  monoreg::VectorXd v(static_cast<monoreg::Index>(xs.size()));
  monoreg::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

inline double max_abs_diff(const monoreg::VectorXd& a, const monoreg::VectorXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Uniform design with f0 = x^2 + x/5 and N(0, sigma^2) noise.
inline monoreg::SortedSample simulated_sample(long n, double sigma, std::uint64_t seed) {
  monoreg::ScenarioConfig cfg;
  cfg.n = n;
  cfg.sigma = sigma;
  cfg.seed = seed;
  monoreg::CounterRng rng = monoreg::dataset_rng(cfg, 0);
  return monoreg::generate_dataset(cfg, rng);
}

}  // namespace test
