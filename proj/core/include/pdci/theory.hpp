#pragma once

#include <cstddef>
#include <cstdint>

#include "pdci/dataset.hpp"

namespace pdci {

// (1 - (2/pi) * acos(ratio))^M: the probability that all M random projections of
// a longer vector stay within the length of a shorter one, ratio = short / long.
// Exact in two dimensions; a lower bound for d >= 3.
double lemma1_probability(double ratio, std::size_t num_projections);

// Fraction of `trials` in which max_j |<v, u_j>| <= ratio * |v| for M fresh
// uniform unit vectors u_j in R^dim and a fixed unit vector v.
double monte_carlo_projection_prob(std::size_t dim, double ratio, std::size_t num_projections,
                                   std::size_t trials, std::uint64_t seed);

struct SparsityEstimate {
  std::size_t tau = 0;
  double gamma = 1.0;
  double intrinsic_dim = 0.0;  // 1 / log2(gamma); +infinity when gamma == 1
  std::size_t samples_used = 0;
};

/// Empirical global relative sparsity (tau, gamma).
///
/// For each sampled centre p with d_i the distance to its i-th nearest other
/// point, gamma is the minimum of d_{2i+1} / d_i over i in [tau, (n-2)/2],
/// floored at 1. Uses every point as a centre when n <= sample_size.
/// Throws kInsufficientData when n < 2 * tau + 2 (d_{2 tau + 1} must exist).
SparsityEstimate estimate_gamma(const Dataset& data, std::size_t tau, std::size_t sample_size,
                                std::uint64_t seed);

}  // namespace pdci
