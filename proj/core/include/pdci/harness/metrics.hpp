#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pdci/query.hpp"

namespace pdci::harness {

/// Radius of the returned k-NN ball over the radius of the true k-NN ball
/// (>= 1, lower is better). Both radii zero gives 1. A result holding fewer
/// neighbours than the truth, or a zero true radius with a positive returned
/// radius, gives +infinity. Throws kInvalidParams on empty input.
double approximation_ratio(std::span<const Neighbour> truth, std::span<const Neighbour> returned);

// Fraction of true ids present in the returned list.
double recall(std::span<const Neighbour> truth, std::span<const Neighbour> returned);

// Streaming mean and sample standard deviation (Welford). Once an infinite
// sample is added the mean and deviation are +infinity.
class RunningStats {
 public:
  void add(double x);
  std::size_t count() const noexcept { return count_; }
  double mean() const noexcept;
  double stddev() const;  // 0 for fewer than two samples

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  bool infinite_ = false;
};

// One sweep point of a cost-vs-quality curve.
struct CurvePoint {
  double ratio = 0.0;   // mean approximation ratio
  double evals = 0.0;   // mean distance evaluations
  double visits = 0.0;  // mean projections visited
};

struct MatchedCost {
  double evals = 0.0;
  double visits = 0.0;
  bool bracketed = false;  // false: the cheapest sweep point already met the target
};

/// Cost at which the curve reaches `target_ratio`, by linear interpolation
/// between the two sweep points that bracket it on the lower envelope
/// (points sorted by evals, dropping any point no better than a cheaper one).
/// nullopt if no sweep point reaches the target.
std::optional<MatchedCost> cost_at_ratio(std::vector<CurvePoint> curve, double target_ratio);

}  // namespace pdci::harness
