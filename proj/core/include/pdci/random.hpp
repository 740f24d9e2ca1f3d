#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

namespace pdci {

// std::mt19937_64 output is fully specified by the standard; the distributions
// below are written out by hand because std::*_distribution results are not
// portable across standard libraries.
using Engine = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t& state) noexcept;

// Independent stream keyed by a root seed and a path of integer tags,
// e.g. make_stream(seed, {kDirectionStream, j, l, d}).
Engine make_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

// Uniform on [0, 1) with 53 random bits.
double uniform01(Engine& engine);

// Uniform integer in [0, bound), unbiased. bound must be positive.
std::uint64_t uniform_below(Engine& engine, std::uint64_t bound);

// Fills out with i.i.d. standard normal variates (Box-Muller, pairs consumed in order).
void fill_standard_normal(Engine& engine, std::span<double> out);

// Uniformly distributed direction on the unit sphere in R^out.size().
void sample_unit_vector(Engine& engine, std::span<double> out);
std::vector<double> sample_unit_vector(std::size_t dim, Engine& engine);

}  // namespace pdci
