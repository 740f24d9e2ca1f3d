#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "pdci/dataset.hpp"

namespace pdci::test {

// Test-side randomness deliberately uses std:: distributions rather than the
// library's hand-written ones, so the fixtures do not share code with the
// implementation under test.
inline Dataset random_points(std::size_t n, std::size_t dim, std::uint64_t seed, double lo = -1.0,
                             double hi = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(lo, hi);
  std::vector<double> values(n * dim);
  for (double& v : values) v = coord(rng);
  return Dataset(dim, std::move(values));
}

inline std::vector<double> random_vector(std::size_t dim, std::uint64_t seed, double lo = -1.0, double hi = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(lo, hi);
  std::vector<double> v(dim);
  for (double& x : v) x = coord(rng);
  return v;
}

// Plain Euclidean distance, summed in index order.
inline double euclid(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(acc);
}

}  // namespace pdci::test
