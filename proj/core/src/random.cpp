#include "pdci/random.hpp"

#include <cmath>
#include <numbers>

#include "pdci/error.hpp"

namespace pdci {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Engine make_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t state = seed;
  std::uint64_t h = splitmix64(state);
  for (std::uint64_t tag : path) {
    state = h ^ (tag + 0x632BE59BD9B4E019ULL);
    h = splitmix64(state);
  }
  std::seed_seq seq{static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  return Engine(seq);
}

double uniform01(Engine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(Engine& engine, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kInvalidParams, "uniform_below needs a positive bound");
  // Rejection on the top of the range keeps the draw unbiased.
  const std::uint64_t limit = Engine::max() - Engine::max() % bound;
  std::uint64_t x;
  do {
    x = engine();
  } while (x >= limit);
  return x % bound;
}

void fill_standard_normal(Engine& engine, std::span<double> out) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  for (std::size_t i = 0; i < out.size(); i += 2) {
    const double u1 = 1.0 - uniform01(engine);  // (0, 1]
    const double u2 = uniform01(engine);
    const double r = std::sqrt(-2.0 * std::log(u1));
    out[i] = r * std::cos(kTwoPi * u2);
    if (i + 1 < out.size()) out[i + 1] = r * std::sin(kTwoPi * u2);
  }
}

void sample_unit_vector(Engine& engine, std::span<double> out) {
  if (out.empty()) throw Error(ErrorCode::kInvalidDimension, "unit vector dimension must be >= 1");
  for (;;) {
    fill_standard_normal(engine, out);
    double sq = 0.0;
    for (double x : out) sq += x * x;
    if (sq > 0.0 && std::isfinite(sq)) {
      const double norm = std::sqrt(sq);
      for (double& x : out) x /= norm;
      return;
    }
  }
}

std::vector<double> sample_unit_vector(std::size_t dim, Engine& engine) {
  std::vector<double> v(dim);
  sample_unit_vector(engine, v);
  return v;
}

}  // namespace pdci
