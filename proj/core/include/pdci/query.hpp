#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "pdci/dci_index.hpp"

namespace pdci {

enum class TraversalMode {
  kPrioritized,  // always advance the simple index with the closest upcoming projection
  kCyclic,       // standard DCI: one step from every simple index per round
};

std::string_view to_string(TraversalMode mode);
TraversalMode parse_traversal_mode(std::string_view text);

struct QueryParams {
  std::size_t k = 1;
  std::size_t retrieve_budget = 1;  // k0: candidates to retrieve per composite index
  std::size_t visit_budget = 1;     // k1: projections to visit per composite index
  TraversalMode mode = TraversalMode::kPrioritized;
};

struct Neighbour {
  PointId id = 0;
  double distance = 0.0;

  friend bool operator==(const Neighbour&, const Neighbour&) = default;
};

struct QueryStats {
  std::size_t projections_visited = 0;
  std::size_t unique_candidates = 0;
  std::size_t distance_evaluations = 0;
  std::vector<std::size_t> per_composite_visits;
  bool truncated = false;  // fewer than k candidates were retrieved
};

struct QueryResult {
  std::vector<Neighbour> neighbours;  // ascending distance, ties by smaller id
  QueryStats stats;
};

// Hook for checking traversal order from tests and diagnostics.
class TraversalObserver {
 public:
  virtual ~TraversalObserver() = default;
  // A projection was consumed from simple index `simple` of composite `composite`.
  virtual void on_visit(std::size_t composite, std::size_t simple, PointId id, double projected_gap) = 0;
  // `id` reached the visit count needed to become a candidate of `composite`.
  virtual void on_retrieve(std::size_t composite, PointId id) = 0;
};

/// k-nearest-neighbour query against a DCI index.
///
/// Prioritized mode runs the seek step and then k1 - 1 rounds; each round pops
/// one projection per active composite index. Cyclic mode spends floor(k1 / m)
/// rounds of m visits each. A composite stops once it holds k0 candidates.
/// Distances are evaluated once per unique candidate across composites.
///
/// Throws kEmptyIndex, kDimensionMismatch or kInvalidParams.
QueryResult query(const DciIndex& index, std::span<const double> q, const QueryParams& params,
                  TraversalObserver* observer = nullptr);

void validate_query_params(const QueryParams& params, std::size_t n, std::size_t num_simple);

// Budget suggested by the analysis, scaled by c0:
// ceil(c0 * k * max(log2(n/k), (n/k)^(1 - m/d'))), clamped to [k, n].
std::size_t default_k0(std::size_t n, std::size_t k, std::size_t m, double intrinsic_dim, double c0 = 1.0);

// ceil(c1 * m * k * max(log2(n/k), (n/k)^(1 - 1/d'))), clamped to [m, m*n].
std::size_t default_k1(std::size_t n, std::size_t k, std::size_t m, double intrinsic_dim, double c1 = 1.0);

}  // namespace pdci
