#include "pdci/harness/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>
#include <utility>

#include "pdci/error.hpp"

namespace pdci::harness {

double approximation_ratio(std::span<const Neighbour> truth, std::span<const Neighbour> returned) {
  if (truth.empty() || returned.empty()) {
    throw Error(ErrorCode::kInvalidParams, "approximation ratio needs non-empty neighbour lists");
  }
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (returned.size() < truth.size()) return kInf;
  auto radius = [](std::span<const Neighbour> s) {
    double r = 0.0;
    for (const auto& nb : s) r = std::max(r, nb.distance);
    return r;
  };
  const double true_radius = radius(truth);
  const double returned_radius = radius(returned);
  if (true_radius == 0.0) return returned_radius == 0.0 ? 1.0 : kInf;
  return returned_radius / true_radius;
}

double recall(std::span<const Neighbour> truth, std::span<const Neighbour> returned) {
  if (truth.empty()) throw Error(ErrorCode::kInvalidParams, "recall needs a non-empty truth list");
  std::unordered_set<PointId> ids;
  for (const auto& nb : returned) ids.insert(nb.id);
  std::size_t hits = 0;
  for (const auto& nb : truth) hits += ids.count(nb.id);
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

void RunningStats::add(double x) {
  ++count_;
  if (std::isinf(x)) {
    infinite_ = true;
    return;
  }
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

double RunningStats::mean() const noexcept {
  return infinite_ ? std::numeric_limits<double>::infinity() : mean_;
}

double RunningStats::stddev() const {
  if (infinite_) return std::numeric_limits<double>::infinity();
  if (count_ < 2) return 0.0;
  return std::sqrt(m2_ / static_cast<double>(count_ - 1));
}

std::optional<MatchedCost> cost_at_ratio(std::vector<CurvePoint> curve, double target_ratio) {
  std::sort(curve.begin(), curve.end(), [](const CurvePoint& a, const CurvePoint& b) {
    return a.evals != b.evals ? a.evals < b.evals : a.ratio < b.ratio;
  });
  // Keep only points that improve on every cheaper point.
  std::vector<CurvePoint> envelope;
  for (const CurvePoint& p : curve) {
    if (envelope.empty() || p.ratio < envelope.back().ratio) envelope.push_back(p);
  }
  curve = std::move(envelope);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (!(curve[i].ratio <= target_ratio)) continue;
    if (i == 0) return MatchedCost{curve[0].evals, curve[0].visits, false};
    const CurvePoint& lo = curve[i - 1];
    const CurvePoint& hi = curve[i];
    if (!std::isfinite(lo.ratio)) return MatchedCost{hi.evals, hi.visits, true};
    const double t = (lo.ratio - target_ratio) / (lo.ratio - hi.ratio);
    return MatchedCost{lo.evals + t * (hi.evals - lo.evals), lo.visits + t * (hi.visits - lo.visits), true};
  }
  return std::nullopt;
}

}  // namespace pdci::harness
