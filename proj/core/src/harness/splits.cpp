#include "pdci/harness/splits.hpp"

#include <numeric>
#include <string>

#include "pdci/error.hpp"

namespace pdci::harness {

namespace {
constexpr std::uint64_t kSplitStream = 0x53504C54;  // "SPLT"
}

std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t count, Engine& engine) {
  if (count > n) throw Error(ErrorCode::kInvalidParams, "cannot sample more items than available");
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < count; ++i) {
    std::swap(pool[i], pool[i + uniform_below(engine, n - i)]);
  }
  pool.resize(count);
  return pool;
}

std::vector<Split> make_splits(std::size_t n, std::size_t splits, std::size_t queries_per_split,
                               std::uint64_t seed) {
  if (splits < 1) throw Error(ErrorCode::kInvalidParams, "splits must be >= 1");
  if (queries_per_split < 1 || queries_per_split >= n) {
    throw Error(ErrorCode::kInvalidParams, "queries per split must lie in [1, n), n = " + std::to_string(n));
  }
  std::vector<Split> out(splits);
  for (std::size_t s = 0; s < splits; ++s) {
    Engine engine = make_stream(seed, {kSplitStream, s});
    out[s].queries = sample_without_replacement(n, queries_per_split, engine);
    std::vector<bool> is_query(n, false);
    for (std::size_t q : out[s].queries) is_query[q] = true;
    out[s].data.reserve(n - queries_per_split);
    for (std::size_t i = 0; i < n; ++i) {
      if (!is_query[i]) out[s].data.push_back(i);
    }
  }
  return out;
}

}  // namespace pdci::harness
