#include "pdci/dci_index.hpp"

#include <cmath>
#include <string>

#include "pdci/error.hpp"
#include "pdci/random.hpp"

namespace pdci {

namespace {
constexpr std::uint64_t kDirectionStream = 0x44495245;  // "DIRE"
}

void DciParams::validate() const {
  if (dim == 0) throw Error(ErrorCode::kInvalidDimension, "d must be >= 1");
  if (num_simple == 0) throw Error(ErrorCode::kInvalidParams, "m must be >= 1");
  if (num_composite == 0) throw Error(ErrorCode::kInvalidParams, "L must be >= 1");
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

ProjectionSet ProjectionSet::generate(const DciParams& params) {
  params.validate();
  ProjectionSet set;
  set.dim_ = params.dim;
  set.num_simple_ = params.num_simple;
  set.num_composite_ = params.num_composite;
  set.values_.resize(params.dim * params.num_simple * params.num_composite);
  for (std::size_t l = 0; l < params.num_composite; ++l) {
    for (std::size_t j = 0; j < params.num_simple; ++j) {
      Engine engine = make_stream(params.seed, {kDirectionStream, j, l, params.dim});
      std::span<double> out(set.values_.data() + (l * params.num_simple + j) * params.dim,
                            params.dim);
      sample_unit_vector(engine, out);
    }
  }
  return set;
}

PointId PointStore::add(std::span<const double> point) {
  const PointId id = live_.size();
  coords_.insert(coords_.end(), point.begin(), point.end());
  live_.push_back(true);
  ++live_count_;
  return id;
}

void PointStore::erase(PointId id) {
  if (!contains(id)) throw Error(ErrorCode::kNotFound, "point " + std::to_string(id) + " not in index");
  live_[id] = false;
  --live_count_;
}

std::span<const double> PointStore::get(PointId id) const {
  if (!contains(id)) throw Error(ErrorCode::kNotFound, "point " + std::to_string(id) + " not in index");
  return {coords_.data() + id * dim_, dim_};
}

std::vector<PointId> PointStore::ids() const {
  std::vector<PointId> out;
  out.reserve(live_count_);
  for (PointId id = 0; id < live_.size(); ++id) {
    if (live_[id]) out.push_back(id);
  }
  return out;
}

DciIndex::DciIndex(const DciParams& params, ProjectionSet projections)
    : params_(params), projections_(std::move(projections)), store_(params.dim) {}

void DciIndex::check_point(std::span<const double> p) const {
  if (p.size() != params_.dim) {
    throw Error(ErrorCode::kDimensionMismatch, "expected " + std::to_string(params_.dim) +
                                                   " coordinates, got " + std::to_string(p.size()));
  }
  for (double x : p) {
    if (!std::isfinite(x)) throw Error(ErrorCode::kInvalidPoint, "point has a non-finite coordinate");
  }
}

DciIndex DciIndex::construct(const Dataset& data, const DciParams& params, Layout layout) {
  DciIndex index(params, ProjectionSet::generate(params));
  if (!data.empty() && data.dim() != params.dim) {
    throw Error(ErrorCode::kDimensionMismatch, "dataset has dimension " + std::to_string(data.dim()) +
                                                   ", index expects " + std::to_string(params.dim));
  }
  const std::size_t n = data.size();
  for (std::size_t i = 0; i < n; ++i) index.check_point(data.row(i));
  for (std::size_t i = 0; i < n; ++i) index.store_.add(data.row(i));

  const std::size_t count = params.num_simple * params.num_composite;
  index.indices_.reserve(count);
  std::vector<ProjectionEntry> entries(n);
  for (std::size_t l = 0; l < params.num_composite; ++l) {
    for (std::size_t j = 0; j < params.num_simple; ++j) {
      const auto u = index.projections_.direction(j, l);
      for (std::size_t i = 0; i < n; ++i) entries[i] = {dot(data.row(i), u), static_cast<PointId>(i)};
      index.indices_.push_back(OrderedIndex::bulk_load(entries, layout));
    }
  }
  return index;
}

PointId DciIndex::insert(std::span<const double> point) {
  check_point(point);
  const PointId id = store_.add(point);
  for (std::size_t l = 0; l < params_.num_composite; ++l) {
    for (std::size_t j = 0; j < params_.num_simple; ++j) {
      indices_[l * params_.num_simple + j].insert({dot(point, projections_.direction(j, l)), id});
    }
  }
  return id;
}

void DciIndex::remove(PointId id) {
  const auto p = store_.get(id);
  for (std::size_t l = 0; l < params_.num_composite; ++l) {
    for (std::size_t j = 0; j < params_.num_simple; ++j) {
      indices_[l * params_.num_simple + j].remove(dot(p, projections_.direction(j, l)), id);
    }
  }
  store_.erase(id);
}

ProjectedQuery DciIndex::project_query(std::span<const double> q) const {
  check_point(q);
  std::vector<double> keys(params_.num_simple * params_.num_composite);
  for (std::size_t l = 0; l < params_.num_composite; ++l) {
    for (std::size_t j = 0; j < params_.num_simple; ++j) {
      keys[l * params_.num_simple + j] = dot(q, projections_.direction(j, l));
    }
  }
  return ProjectedQuery(params_.num_simple, std::move(keys));
}

}  // namespace pdci
