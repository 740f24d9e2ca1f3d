#include "pdci/theory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "pdci/error.hpp"
#include "pdci/random.hpp"

namespace pdci {

namespace {
constexpr std::uint64_t kMonteCarloStream = 0x4D43;   // "MC"
constexpr std::uint64_t kCentreStream = 0x43454E54;   // "CENT"

void check_ratio(double ratio) {
  if (!(ratio >= 0.0 && ratio <= 1.0)) {
    throw Error(ErrorCode::kInvalidParams, "ratio must lie in [0, 1], got " + std::to_string(ratio));
  }
}
}  // namespace

double lemma1_probability(double ratio, std::size_t num_projections) {
  check_ratio(ratio);
  if (num_projections < 1) throw Error(ErrorCode::kInvalidParams, "M must be >= 1");
  const double single = 1.0 - (2.0 / std::numbers::pi) * std::acos(ratio);
  return std::pow(single, static_cast<double>(num_projections));
}

double monte_carlo_projection_prob(std::size_t dim, double ratio, std::size_t num_projections,
                                   std::size_t trials, std::uint64_t seed) {
  check_ratio(ratio);
  if (dim < 2) throw Error(ErrorCode::kInvalidParams, "d must be >= 2");
  if (num_projections < 1) throw Error(ErrorCode::kInvalidParams, "M must be >= 1");
  if (trials < 1) throw Error(ErrorCode::kInvalidParams, "trials must be >= 1");

  // By rotation invariance the fixed vector is e_1, so <v, u> is u's first coordinate.
  Engine engine = make_stream(seed, {kMonteCarloStream, dim, num_projections});
  std::vector<double> u(dim);
  std::size_t hits = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    bool inside = true;
    for (std::size_t j = 0; j < num_projections && inside; ++j) {
      sample_unit_vector(engine, u);
      inside = std::min(1.0, std::abs(u[0])) <= ratio;
    }
    if (inside) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

SparsityEstimate estimate_gamma(const Dataset& data, std::size_t tau, std::size_t sample_size,
                                std::uint64_t seed) {
  const std::size_t n = data.size();
  if (tau < 1) throw Error(ErrorCode::kInvalidParams, "tau must be >= 1");
  if (sample_size < 1) throw Error(ErrorCode::kInvalidParams, "sample size must be >= 1");
  // i = tau needs the (2 tau + 1)-th nearest other point, i.e. n - 1 >= 2 tau + 1.
  if (n < 2 * tau + 2) {
    throw Error(ErrorCode::kInsufficientData, "need at least 2*tau + 2 = " + std::to_string(2 * tau + 2) +
                                                  " points, got " + std::to_string(n));
  }

  std::vector<std::size_t> centres(n);
  std::iota(centres.begin(), centres.end(), std::size_t{0});
  if (n > sample_size) {
    Engine engine = make_stream(seed, {kCentreStream});
    for (std::size_t i = 0; i < sample_size; ++i) {
      std::swap(centres[i], centres[i + uniform_below(engine, n - i)]);
    }
    centres.resize(sample_size);
  }

  const std::size_t last_i = (n - 2) / 2;
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> dists;
  dists.reserve(n - 1);
  for (std::size_t c : centres) {
    const auto p = data.row(c);
    dists.clear();
    for (std::size_t o = 0; o < n; ++o) {
      if (o == c) continue;
      const auto x = data.row(o);
      double sq = 0.0;
      for (std::size_t t = 0; t < x.size(); ++t) {
        const double diff = x[t] - p[t];
        sq += diff * diff;
      }
      dists.push_back(std::sqrt(sq));
    }
    std::sort(dists.begin(), dists.end());
    // dists[i - 1] is d_i, the distance to the i-th nearest other point.
    for (std::size_t i = tau; i <= last_i; ++i) {
      const double inner = dists[i - 1];
      if (inner <= 0.0) continue;  // a zero-radius ball never grows
      best = std::min(best, dists[2 * i] / inner);
    }
  }
  if (!std::isfinite(best)) {
    throw Error(ErrorCode::kInsufficientData, "all sampled neighbour distances are zero");
  }

  SparsityEstimate est;
  est.tau = tau;
  est.gamma = std::max(1.0, best);
  est.intrinsic_dim = est.gamma > 1.0 ? 1.0 / std::log2(est.gamma) : std::numeric_limits<double>::infinity();
  est.samples_used = centres.size();
  return est;
}

}  // namespace pdci
