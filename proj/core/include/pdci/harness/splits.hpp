#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pdci/random.hpp"

namespace pdci::harness {

struct Split {
  std::vector<std::size_t> queries;  // in sampling order
  std::vector<std::size_t> data;     // complement, ascending
};

// `count` distinct values from [0, n) by partial Fisher-Yates.
std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t count, Engine& engine);

// Each split draws its query ids from its own stream keyed by (seed, split).
std::vector<Split> make_splits(std::size_t n, std::size_t splits, std::size_t queries_per_split,
                               std::uint64_t seed);

}  // namespace pdci::harness
