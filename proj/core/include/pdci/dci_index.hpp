#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pdci/dataset.hpp"
#include "pdci/ordered_index.hpp"

namespace pdci {

struct DciParams {
  std::size_t dim = 0;
  std::size_t num_simple = 1;     // simple indices per composite index
  std::size_t num_composite = 1;  // composite indices
  std::uint64_t seed = 0;

  void validate() const;
  friend bool operator==(const DciParams&, const DciParams&) = default;
};

// Dot product accumulated strictly left to right in double precision.
double dot(std::span<const double> a, std::span<const double> b) noexcept;

/// The num_simple x num_composite random unit directions.
///
/// Direction (j, l) is drawn from its own stream keyed by (seed, j, l, dim), so
/// growing either count leaves the existing directions untouched.
class ProjectionSet {
 public:
  ProjectionSet() = default;
  static ProjectionSet generate(const DciParams& params);

  std::span<const double> direction(std::size_t j, std::size_t l) const {
    return {values_.data() + (l * num_simple_ + j) * dim_, dim_};
  }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t num_simple() const noexcept { return num_simple_; }
  std::size_t num_composite() const noexcept { return num_composite_; }

 private:
  std::size_t dim_ = 0;
  std::size_t num_simple_ = 0;
  std::size_t num_composite_ = 0;
  std::vector<double> values_;
};

// Query keys <q, u_jl>, laid out composite-major.
class ProjectedQuery {
 public:
  ProjectedQuery(std::size_t num_simple, std::vector<double> keys)
      : num_simple_(num_simple), keys_(std::move(keys)) {}

  double key(std::size_t j, std::size_t l) const { return keys_[l * num_simple_ + j]; }
  std::span<const double> keys() const noexcept { return keys_; }

 private:
  std::size_t num_simple_;
  std::vector<double> keys_;
};

/// Append-only coordinate storage addressed by PointId; removed slots become
/// tombstones so ids are never reused.
class PointStore {
 public:
  PointStore() = default;
  explicit PointStore(std::size_t dim) : dim_(dim) {}

  PointId add(std::span<const double> point);
  void erase(PointId id);
  bool contains(PointId id) const noexcept { return id < live_.size() && live_[id]; }
  std::span<const double> get(PointId id) const;

  std::size_t size() const noexcept { return live_count_; }
  std::size_t dim() const noexcept { return dim_; }
  PointId next_id() const noexcept { return live_.size(); }
  std::vector<PointId> ids() const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
  std::vector<bool> live_;
  std::size_t live_count_ = 0;
};

/// Prioritized DCI data structure: points, random directions and one ordered
/// projection index per (simple, composite) pair.
///
/// Invariant: every stored point has exactly one entry, keyed <p, u_jl>, in each
/// of the num_simple * num_composite ordered indices. Reads may run
/// concurrently; mutation needs exclusive access.
class DciIndex {
 public:
  static DciIndex construct(const Dataset& data, const DciParams& params,
                            Layout layout = Layout::kSortedArray);

  PointId insert(std::span<const double> point);
  void remove(PointId id);

  ProjectedQuery project_query(std::span<const double> q) const;

  const DciParams& params() const noexcept { return params_; }
  const ProjectionSet& projections() const noexcept { return projections_; }
  const OrderedIndex& simple_index(std::size_t j, std::size_t l) const {
    return indices_[l * params_.num_simple + j];
  }

  std::size_t size() const noexcept { return store_.size(); }
  bool empty() const noexcept { return store_.size() == 0; }
  bool contains(PointId id) const noexcept { return store_.contains(id); }
  std::span<const double> point(PointId id) const { return store_.get(id); }
  std::vector<PointId> ids() const { return store_.ids(); }
  PointId next_id() const noexcept { return store_.next_id(); }

 private:
  DciIndex(const DciParams& params, ProjectionSet projections);
  void check_point(std::span<const double> p) const;

  DciParams params_;
  ProjectionSet projections_;
  PointStore store_;
  std::vector<OrderedIndex> indices_;  // composite-major, like ProjectionSet
};

// Free-function spellings.
inline DciIndex construct(const Dataset& data, const DciParams& params) {
  return DciIndex::construct(data, params);
}

}  // namespace pdci
