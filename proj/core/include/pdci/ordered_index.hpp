#pragma once

#include <compare>
#include <cstddef>
#include <iterator>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "pdci/dataset.hpp"

namespace pdci {

// One point's projection onto a single direction.
struct ProjectionEntry {
  double key = 0.0;
  PointId id = 0;

  friend auto operator<=>(const ProjectionEntry&, const ProjectionEntry&) = default;
  friend bool operator==(const ProjectionEntry&, const ProjectionEntry&) = default;
};

enum class Layout {
  kSortedArray,   // bulk build, read-mostly
  kBalancedTree,  // O(log n) insert / remove
};

/// Emits the entries of an ordered range in non-decreasing |key - query_key|,
/// expanding outward from the seek position on both sides.
///
/// Ties between the two sides go to the left (smaller key). Runs of equal keys
/// on the left are emitted in ascending id order, so the overall tie rule is
/// "smaller key first, then smaller id". The underlying container must not be
/// modified while a cursor is alive.
template <std::bidirectional_iterator It>
class BasicCursor {
 public:
  BasicCursor(It first, It last, It split, double query_key)
      : first_(first),
        last_(last),
        right_(split),
        left_begin_(split),
        left_pos_(split),
        left_end_(split),
        query_key_(query_key) {
    settle();
  }

  // Entry the next call to next() will return, or nullptr once exhausted.
  const ProjectionEntry* peek() const noexcept { return head_; }

  // |peek()->key - query_key|; only meaningful while peek() != nullptr.
  double head_distance() const noexcept { return head_distance_; }

  std::optional<ProjectionEntry> next() {
    if (head_ == nullptr) return std::nullopt;
    ProjectionEntry out = *head_;
    if (head_from_left_) {
      ++left_pos_;
    } else {
      ++right_;
    }
    settle();
    return out;
  }

  double query_key() const noexcept { return query_key_; }

 private:
  // Moves the left window to the previous run of equal keys.
  void refill_left() {
    if (left_begin_ == first_) return;
    It run_end = left_begin_;
    It it = std::prev(run_end);
    while (it != first_) {
      It before = std::prev(it);
      if (before->key != it->key) break;
      it = before;
    }
    left_begin_ = it;
    left_pos_ = it;
    left_end_ = run_end;
  }

  void settle() {
    if (left_pos_ == left_end_) refill_left();
    const bool has_left = left_pos_ != left_end_;
    const bool has_right = right_ != last_;
    if (!has_left && !has_right) {
      head_ = nullptr;
      return;
    }
    const double dl = has_left ? query_key_ - left_pos_->key : 0.0;
    const double dr = has_right ? right_->key - query_key_ : 0.0;
    head_from_left_ = has_left && (!has_right || dl <= dr);
    if (head_from_left_) {
      head_ = &*left_pos_;
      head_distance_ = dl;
    } else {
      head_ = &*right_;
      head_distance_ = dr;
    }
  }

  It first_;
  It last_;
  It right_;       // next candidate at or above the query key
  It left_begin_;  // [left_begin_, left_end_) is the current equal-key run below the query
  It left_pos_;
  It left_end_;
  double query_key_;
  const ProjectionEntry* head_ = nullptr;
  double head_distance_ = 0.0;
  bool head_from_left_ = false;
};

class Cursor {
 public:
  using ArrayCursor = BasicCursor<std::vector<ProjectionEntry>::const_iterator>;
  using TreeCursor = BasicCursor<std::set<ProjectionEntry>::const_iterator>;

  explicit Cursor(ArrayCursor c) : impl_(std::move(c)) {}
  explicit Cursor(TreeCursor c) : impl_(std::move(c)) {}

  const ProjectionEntry* peek() const noexcept {
    return std::visit([](const auto& c) { return c.peek(); }, impl_);
  }
  double head_distance() const noexcept {
    return std::visit([](const auto& c) { return c.head_distance(); }, impl_);
  }
  std::optional<ProjectionEntry> next() {
    return std::visit([](auto& c) { return c.next(); }, impl_);
  }
  double query_key() const noexcept {
    return std::visit([](const auto& c) { return c.query_key(); }, impl_);
  }

 private:
  std::variant<ArrayCursor, TreeCursor> impl_;
};

/// Ordered multiset of (projection key, point id) pairs for one random direction.
///
/// Entries are ordered lexicographically by (key, id). Keys must be finite and a
/// given (key, id) pair may appear at most once. A sorted-array index is promoted
/// to a balanced tree on its first mutation.
class OrderedIndex {
 public:
  explicit OrderedIndex(Layout layout = Layout::kBalancedTree);

  static OrderedIndex bulk_load(std::vector<ProjectionEntry> entries,
                                Layout layout = Layout::kSortedArray);

  void insert(const ProjectionEntry& entry);
  void remove(double key, PointId id);
  bool contains(double key, PointId id) const;

  // Positions a cursor whose first emission minimises |key - query_key|.
  Cursor seek_nearest(double query_key) const;

  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  Layout layout() const noexcept;

  // In-order copy of all entries.
  std::vector<ProjectionEntry> entries() const;

  template <class F>
  void for_each(F&& f) const {
    std::visit(
        [&](const auto& c) {
          for (const auto& e : c) f(e);
        },
        store_);
  }

 private:
  void promote();

  std::variant<std::vector<ProjectionEntry>, std::set<ProjectionEntry>> store_;
};

// Free-function spellings of the index operations.
inline void insert_entry(OrderedIndex& index, const ProjectionEntry& e) { index.insert(e); }
inline void remove_entry(OrderedIndex& index, double key, PointId id) { index.remove(key, id); }
inline Cursor seek_nearest(const OrderedIndex& index, double query_key) {
  return index.seek_nearest(query_key);
}
inline std::optional<ProjectionEntry> next_closest(Cursor& cursor) { return cursor.next(); }

}  // namespace pdci
