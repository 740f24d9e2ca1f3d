#include "pdci/query.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <string>
#include <unordered_map>

#include "pdci/error.hpp"

namespace pdci {

std::string_view to_string(TraversalMode mode) {
  return mode == TraversalMode::kPrioritized ? "prioritized" : "cyclic";
}

TraversalMode parse_traversal_mode(std::string_view text) {
  if (text == "prioritized") return TraversalMode::kPrioritized;
  if (text == "cyclic") return TraversalMode::kCyclic;
  throw Error(ErrorCode::kInvalidParams, "unknown traversal mode '" + std::string(text) + "'");
}

namespace {

struct PendingVisit {
  double gap;
  std::size_t simple;
  PointId id;
};

// priority_queue is a max-heap on this "less"; the top is the smallest gap,
// then the smallest simple index, then the smallest id.
struct LowerPriority {
  bool operator()(const PendingVisit& a, const PendingVisit& b) const noexcept {
    if (a.gap != b.gap) return a.gap > b.gap;
    if (a.simple != b.simple) return a.simple > b.simple;
    return a.id > b.id;
  }
};

// Per-composite traversal state: cursors, visit counters and candidate list.
class CompositeTraversal {
 public:
  CompositeTraversal(const DciIndex& index, const ProjectedQuery& projected, std::size_t composite,
                     std::size_t retrieve_budget, TraversalObserver* observer)
      : composite_(composite),
        num_simple_(index.params().num_simple),
        retrieve_budget_(retrieve_budget),
        observer_(observer) {
    cursors_.reserve(num_simple_);
    for (std::size_t j = 0; j < num_simple_; ++j) {
      cursors_.push_back(index.simple_index(j, composite).seek_nearest(projected.key(j, composite)));
      push_head(j);
    }
  }

  bool wants_more() const noexcept { return candidates_.size() < retrieve_budget_; }
  bool has_pending() const noexcept { return !queue_.empty(); }
  bool simple_exhausted(std::size_t j) const noexcept { return cursors_[j].peek() == nullptr; }

  // Prioritized step: visit the globally closest upcoming projection.
  void visit_prioritized() {
    const PendingVisit top = queue_.top();
    queue_.pop();
    cursors_[top.simple].next();
    push_head(top.simple);
    record(top.simple, top.id, top.gap);
  }

  // Cyclic step: visit the next projection of one fixed simple index.
  void visit_simple(std::size_t j) {
    const double gap = cursors_[j].head_distance();
    const auto entry = cursors_[j].next();
    record(j, entry->id, gap);
  }

  std::size_t visits() const noexcept { return visits_; }
  const std::vector<PointId>& candidates() const noexcept { return candidates_; }

 private:
  void push_head(std::size_t j) {
    if (const ProjectionEntry* head = cursors_[j].peek()) {
      queue_.push({cursors_[j].head_distance(), j, head->id});
    }
  }

  void record(std::size_t j, PointId id, double gap) {
    ++visits_;
    if (observer_) observer_->on_visit(composite_, j, id, gap);
    if (++counters_[id] == num_simple_) {
      candidates_.push_back(id);
      if (observer_) observer_->on_retrieve(composite_, id);
    }
  }

  std::size_t composite_;
  std::size_t num_simple_;
  std::size_t retrieve_budget_;
  TraversalObserver* observer_;
  std::vector<Cursor> cursors_;
  std::priority_queue<PendingVisit, std::vector<PendingVisit>, LowerPriority> queue_;
  std::unordered_map<PointId, std::uint32_t> counters_;
  std::vector<PointId> candidates_;
  std::size_t visits_ = 0;
};

double distance(std::span<const double> a, std::span<const double> b) noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    acc += diff * diff;
  }
  return std::sqrt(acc);
}

void run_prioritized(std::vector<CompositeTraversal>& composites, std::size_t visit_budget) {
  for (std::size_t round = 1; round < visit_budget; ++round) {
    bool progressed = false;
    for (auto& c : composites) {
      if (c.wants_more() && c.has_pending()) {
        c.visit_prioritized();
        progressed = true;
      }
    }
    if (!progressed) break;
  }
}

void run_cyclic(std::vector<CompositeTraversal>& composites, std::size_t visit_budget,
                std::size_t num_simple) {
  const std::size_t rounds = visit_budget / num_simple;
  for (std::size_t round = 0; round < rounds; ++round) {
    bool progressed = false;
    for (auto& c : composites) {
      for (std::size_t j = 0; j < num_simple; ++j) {
        if (c.wants_more() && !c.simple_exhausted(j)) {
          c.visit_simple(j);
          progressed = true;
        }
      }
    }
    if (!progressed) break;
  }
}

}  // namespace

void validate_query_params(const QueryParams& params, std::size_t n, std::size_t num_simple) {
  if (params.k < 1 || params.k > n) {
    throw Error(ErrorCode::kInvalidParams,
                "k = " + std::to_string(params.k) + " outside [1, " + std::to_string(n) + "]");
  }
  if (params.retrieve_budget < params.k || params.retrieve_budget > n) {
    throw Error(ErrorCode::kInvalidParams, "k0 = " + std::to_string(params.retrieve_budget) +
                                               " outside [k, n] = [" + std::to_string(params.k) + ", " +
                                               std::to_string(n) + "]");
  }
  // k1 - 1 rounds consume at most m * n entries, so m * n + 1 is the exhaustive budget.
  if (params.visit_budget < num_simple || params.visit_budget > num_simple * n + 1) {
    throw Error(ErrorCode::kInvalidParams, "k1 = " + std::to_string(params.visit_budget) + " outside [m, m*n + 1] = [" +
                                               std::to_string(num_simple) + ", " +
                                               std::to_string(num_simple * n + 1) + "]");
  }
}

QueryResult query(const DciIndex& index, std::span<const double> q, const QueryParams& params,
                  TraversalObserver* observer) {
  if (index.empty()) throw Error(ErrorCode::kEmptyIndex, "query on an empty index");
  const DciParams& dp = index.params();
  validate_query_params(params, index.size(), dp.num_simple);
  const ProjectedQuery projected = index.project_query(q);

  std::vector<CompositeTraversal> composites;
  composites.reserve(dp.num_composite);
  for (std::size_t l = 0; l < dp.num_composite; ++l) {
    composites.emplace_back(index, projected, l, params.retrieve_budget, observer);
  }

  if (params.mode == TraversalMode::kPrioritized) {
    run_prioritized(composites, params.visit_budget);
  } else {
    run_cyclic(composites, params.visit_budget, dp.num_simple);
  }

  QueryResult result;
  std::vector<PointId> pool;
  for (const auto& c : composites) {
    result.stats.per_composite_visits.push_back(c.visits());
    result.stats.projections_visited += c.visits();
    pool.insert(pool.end(), c.candidates().begin(), c.candidates().end());
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  result.neighbours.reserve(pool.size());
  for (PointId id : pool) result.neighbours.push_back({id, distance(index.point(id), q)});
  result.stats.unique_candidates = pool.size();
  result.stats.distance_evaluations = pool.size();

  std::sort(result.neighbours.begin(), result.neighbours.end(), [](const Neighbour& a, const Neighbour& b) {
    return a.distance != b.distance ? a.distance < b.distance : a.id < b.id;
  });
  if (result.neighbours.size() > params.k) result.neighbours.resize(params.k);
  result.stats.truncated = result.neighbours.size() < params.k;
  return result;
}

namespace {

double budget_growth(std::size_t n, std::size_t k, double exponent) {
  const double ratio = static_cast<double>(n) / static_cast<double>(k);
  return std::max(std::log2(ratio), std::pow(ratio, exponent));
}

void check_budget_inputs(std::size_t n, std::size_t k, std::size_t m, double intrinsic_dim, double c) {
  if (k < 1 || n < k) throw Error(ErrorCode::kInvalidParams, "need n >= k >= 1");
  if (m < 1) throw Error(ErrorCode::kInvalidParams, "need m >= 1");
  if (!(intrinsic_dim > 0.0)) throw Error(ErrorCode::kInvalidParams, "intrinsic dimensionality must be > 0");
  if (!(c > 0.0) || !std::isfinite(c)) throw Error(ErrorCode::kInvalidParams, "budget multiplier must be > 0");
}

std::size_t clamp_ceil(double value, std::size_t lo, std::size_t hi) {
  const double v = std::ceil(value);
  if (!(v < static_cast<double>(hi))) return hi;
  return std::max(lo, static_cast<std::size_t>(v));
}

}  // namespace

std::size_t default_k0(std::size_t n, std::size_t k, std::size_t m, double intrinsic_dim, double c0) {
  check_budget_inputs(n, k, m, intrinsic_dim, c0);
  const double exponent = 1.0 - static_cast<double>(m) / intrinsic_dim;
  return clamp_ceil(c0 * static_cast<double>(k) * budget_growth(n, k, exponent), k, n);
}

std::size_t default_k1(std::size_t n, std::size_t k, std::size_t m, double intrinsic_dim, double c1) {
  check_budget_inputs(n, k, m, intrinsic_dim, c1);
  const double exponent = 1.0 - 1.0 / intrinsic_dim;
  return clamp_ceil(c1 * static_cast<double>(m) * static_cast<double>(k) * budget_growth(n, k, exponent), m,
                    m * n);
}

}  // namespace pdci
