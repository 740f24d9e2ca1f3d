#include "pdci/ordered_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pdci/error.hpp"

namespace pdci {

namespace {

void check_key(double key) {
  if (!std::isfinite(key)) {
    throw Error(ErrorCode::kInvalidKey, "projection key must be finite");
  }
}

std::string describe(double key, PointId id) {
  return "(" + std::to_string(key) + ", " + std::to_string(id) + ")";
}

// Smallest possible entry with the given key.
ProjectionEntry key_floor(double key) { return {key, std::numeric_limits<PointId>::min()}; }

}  // namespace

OrderedIndex::OrderedIndex(Layout layout) {
  if (layout == Layout::kBalancedTree) store_.emplace<std::set<ProjectionEntry>>();
}

OrderedIndex OrderedIndex::bulk_load(std::vector<ProjectionEntry> entries, Layout layout) {
  for (const auto& e : entries) check_key(e.key);
  std::sort(entries.begin(), entries.end());
  auto dup = std::adjacent_find(entries.begin(), entries.end());
  if (dup != entries.end()) {
    throw Error(ErrorCode::kDuplicateEntry, "entry " + describe(dup->key, dup->id) + " repeated");
  }
  OrderedIndex out(Layout::kSortedArray);
  if (layout == Layout::kSortedArray) {
    out.store_ = std::move(entries);
  } else {
    out.store_ = std::set<ProjectionEntry>(entries.begin(), entries.end());
  }
  return out;
}

void OrderedIndex::promote() {
  if (auto* arr = std::get_if<std::vector<ProjectionEntry>>(&store_)) {
    std::set<ProjectionEntry> tree(arr->begin(), arr->end());
    store_ = std::move(tree);
  }
}

void OrderedIndex::insert(const ProjectionEntry& entry) {
  check_key(entry.key);
  promote();
  auto& tree = std::get<std::set<ProjectionEntry>>(store_);
  if (!tree.insert(entry).second) {
    throw Error(ErrorCode::kDuplicateEntry, "entry " + describe(entry.key, entry.id) + " already present");
  }
}

void OrderedIndex::remove(double key, PointId id) {
  if (!contains(key, id)) {
    throw Error(ErrorCode::kNotFound, "entry " + describe(key, id) + " not present");
  }
  promote();
  std::get<std::set<ProjectionEntry>>(store_).erase(ProjectionEntry{key, id});
}

bool OrderedIndex::contains(double key, PointId id) const {
  const ProjectionEntry probe{key, id};
  return std::visit(
      [&](const auto& c) {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, std::vector<ProjectionEntry>>) {
          return std::binary_search(c.begin(), c.end(), probe);
        } else {
          return c.contains(probe);
        }
      },
      store_);
}

Cursor OrderedIndex::seek_nearest(double query_key) const {
  if (std::isnan(query_key)) {
    throw Error(ErrorCode::kInvalidKey, "query key is NaN");
  }
  if (empty()) {
    throw Error(ErrorCode::kEmptyIndex, "cannot seek in an empty ordered index");
  }
  const ProjectionEntry probe = key_floor(query_key);
  if (const auto* arr = std::get_if<std::vector<ProjectionEntry>>(&store_)) {
    auto split = std::lower_bound(arr->begin(), arr->end(), probe);
    return Cursor(Cursor::ArrayCursor(arr->begin(), arr->end(), split, query_key));
  }
  const auto& tree = std::get<std::set<ProjectionEntry>>(store_);
  return Cursor(Cursor::TreeCursor(tree.begin(), tree.end(), tree.lower_bound(probe), query_key));
}

std::size_t OrderedIndex::size() const noexcept {
  return std::visit([](const auto& c) { return c.size(); }, store_);
}

Layout OrderedIndex::layout() const noexcept {
  return std::holds_alternative<std::vector<ProjectionEntry>>(store_) ? Layout::kSortedArray
                                                                      : Layout::kBalancedTree;
}

std::vector<ProjectionEntry> OrderedIndex::entries() const {
  return std::visit([](const auto& c) { return std::vector<ProjectionEntry>(c.begin(), c.end()); },
                    store_);
}

}  // namespace pdci
