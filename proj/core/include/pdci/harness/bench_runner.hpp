#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pdci/dataset.hpp"
#include "pdci/harness/dataset_io.hpp"
#include "pdci/harness/metrics.hpp"
#include "pdci/query.hpp"

namespace pdci::harness {

// One point of the (k0, k1) sweep: explicit budgets win over the multipliers,
// which scale default_k0 / default_k1.
struct BudgetSpec {
  double c0 = 1.0;
  double c1 = 1.0;
  std::optional<std::size_t> k0;
  std::optional<std::size_t> k1;

  std::pair<std::size_t, std::size_t> resolve(std::size_t n, std::size_t k, std::size_t m,
                                              double intrinsic_dim) const;
};

struct BenchConfig {
  std::filesystem::path data_path;
  DataFormat format = DataFormat::kFvecs;
  std::size_t subsample = 0;  // 0 keeps the whole dataset
  std::size_t splits = 10;
  std::size_t queries_per_split = 100;
  std::size_t k = 25;
  std::size_t num_simple = 10;
  std::size_t num_composite = 2;
  std::uint64_t seed = 0;
  std::vector<BudgetSpec> sweep{BudgetSpec{}};
  std::vector<TraversalMode> modes{TraversalMode::kPrioritized, TraversalMode::kCyclic};
  std::filesystem::path report_path;
  std::optional<double> intrinsic_dim;  // estimated from the data (tau = k) when unset
  std::size_t sparsity_samples = 100;
  bool record_timings = true;  // false writes zero timings so reports diff cleanly

  void validate(std::size_t dataset_size) const;
};

struct MetricsRow {
  std::size_t split = 0;
  TraversalMode mode = TraversalMode::kPrioritized;
  std::size_t m = 0;
  std::size_t L = 0;
  std::size_t k = 0;
  std::size_t k0 = 0;
  std::size_t k1 = 0;
  double recall = 0.0;
  double approx_ratio = 0.0;
  double dist_evals = 0.0;
  double projections_visited = 0.0;
  double build_ms = 0.0;
  double query_ms = 0.0;  // mean per query
  bool truncated = false;
  std::size_t sweep_index = 0;

  friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

struct SummaryRow {
  TraversalMode mode = TraversalMode::kPrioritized;
  std::size_t sweep_index = 0;
  std::size_t k0 = 0;
  std::size_t k1 = 0;
  double recall_mean = 0.0, recall_std = 0.0;
  double ratio_mean = 0.0, ratio_std = 0.0;
  double evals_mean = 0.0, evals_std = 0.0;
  double visits_mean = 0.0, visits_std = 0.0;
};

struct BenchReport {
  std::vector<MetricsRow> rows;  // split-major, then mode, then sweep point
  std::vector<SummaryRow> summary;
  std::size_t dataset_size = 0;
  std::size_t dim = 0;
  std::size_t points_per_split = 0;
  double intrinsic_dim = 0.0;
};

// Applies the configured seeded subsample (row order preserved).
Dataset prepare_dataset(const BenchConfig& config, const Dataset& full);

/// Runs every split x mode x sweep point. One index is built per split and
/// ground truth is computed once per query and reused across modes and budgets.
BenchReport run_benchmark(const BenchConfig& config, const Dataset& full);

// Loads config.data_path, runs, and writes config.report_path when set.
BenchReport run_benchmark(const BenchConfig& config);

void write_report(std::ostream& out, const BenchReport& report);
void write_report(const std::filesystem::path& path, const BenchReport& report);

// Mean-over-splits curve of one mode, one point per sweep entry.
std::vector<CurvePoint> mode_curve(const BenchReport& report, TraversalMode mode);

struct ModeComparison {
  double target_ratio = 0.0;
  std::optional<MatchedCost> prioritized;
  std::optional<MatchedCost> cyclic;
  std::optional<double> evals_ratio;   // prioritized / cyclic
  std::optional<double> visits_ratio;  // prioritized / cyclic
};

ModeComparison compare_curves(const std::vector<CurvePoint>& prioritized, const std::vector<CurvePoint>& cyclic,
                              double target_ratio);
std::vector<ModeComparison> compare_modes(const BenchReport& report, std::span<const double> target_ratios);
void write_comparison(std::ostream& out, std::span<const ModeComparison> comparisons);

}  // namespace pdci::harness
