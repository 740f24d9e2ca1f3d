#include "pdci/harness/bench_runner.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <string>

#include "pdci/dci_index.hpp"
#include "pdci/error.hpp"
#include "pdci/harness/splits.hpp"
#include "pdci/oracle.hpp"
#include "pdci/random.hpp"
#include "pdci/theory.hpp"

namespace pdci::harness {

namespace {

constexpr std::uint64_t kSubsampleStream = 0x53554253;  // "SUBS"

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

std::pair<std::size_t, std::size_t> BudgetSpec::resolve(std::size_t n, std::size_t k, std::size_t m,
                                                        double intrinsic_dim) const {
  const std::size_t r0 = k0 ? *k0 : default_k0(n, k, m, intrinsic_dim, c0);
  const std::size_t r1 = k1 ? *k1 : default_k1(n, k, m, intrinsic_dim, c1);
  return {r0, r1};
}

void BenchConfig::validate(std::size_t dataset_size) const {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::kInvalidParams, what); };
  if (splits < 1) fail("splits must be >= 1");
  if (queries_per_split < 1) fail("queries per split must be >= 1");
  if (subsample > dataset_size) {
    fail("subsample " + std::to_string(subsample) + " exceeds dataset size " + std::to_string(dataset_size));
  }
  if (k < 1) fail("k must be >= 1");
  if (num_simple < 1 || num_composite < 1) fail("m and L must be >= 1");
  if (sweep.empty()) fail("parameter sweep is empty");
  if (modes.empty()) fail("no traversal modes selected");
  if (intrinsic_dim && !(*intrinsic_dim > 0.0)) fail("intrinsic dimensionality must be > 0");
  const std::size_t n = subsample == 0 ? dataset_size : subsample;
  if (queries_per_split >= n) fail("queries per split must be smaller than the dataset");
  if (k > n - queries_per_split) fail("k exceeds the number of data points per split");
}

Dataset prepare_dataset(const BenchConfig& config, const Dataset& full) {
  if (config.subsample == 0 || config.subsample >= full.size()) return full;
  Engine engine = make_stream(config.seed, {kSubsampleStream, full.size(), config.subsample});
  auto rows = sample_without_replacement(full.size(), config.subsample, engine);
  std::sort(rows.begin(), rows.end());
  return full.select(rows);
}

BenchReport run_benchmark(const BenchConfig& config, const Dataset& full) {
  config.validate(full.size());
  const Dataset data = prepare_dataset(config, full);
  const auto splits = make_splits(data.size(), config.splits, config.queries_per_split, config.seed);

  BenchReport report;
  report.dataset_size = data.size();
  report.dim = data.dim();
  report.points_per_split = data.size() - config.queries_per_split;
  report.intrinsic_dim = config.intrinsic_dim
                             ? *config.intrinsic_dim
                             : estimate_gamma(data, config.k, config.sparsity_samples, config.seed).intrinsic_dim;

  std::vector<std::pair<std::size_t, std::size_t>> budgets;
  for (const auto& spec : config.sweep) {
    budgets.push_back(spec.resolve(report.points_per_split, config.k, config.num_simple, report.intrinsic_dim));
  }

  const DciParams params{data.dim(), config.num_simple, config.num_composite, config.seed};
  for (std::size_t s = 0; s < splits.size(); ++s) {
    const Dataset split_data = data.select(splits[s].data);
    const Dataset split_queries = data.select(splits[s].queries);

    const auto build_start = Clock::now();
    const DciIndex index = DciIndex::construct(split_data, params);
    const double build_ms = config.record_timings ? elapsed_ms(build_start) : 0.0;

    std::vector<std::vector<Neighbour>> truth;
    truth.reserve(split_queries.size());
    for (std::size_t q = 0; q < split_queries.size(); ++q) {
      truth.push_back(brute_force_knn(split_data, split_queries.row(q), config.k));
    }

    for (TraversalMode mode : config.modes) {
      for (std::size_t b = 0; b < budgets.size(); ++b) {
        const QueryParams qp{config.k, budgets[b].first, budgets[b].second, mode};
        MetricsRow row;
        row.split = s;
        row.mode = mode;
        row.m = config.num_simple;
        row.L = config.num_composite;
        row.k = config.k;
        row.k0 = qp.retrieve_budget;
        row.k1 = qp.visit_budget;
        row.build_ms = build_ms;
        row.sweep_index = b;

        RunningStats rec, ratio, evals, visits;
        const auto query_start = Clock::now();
        for (std::size_t q = 0; q < split_queries.size(); ++q) {
          const QueryResult res = query(index, split_queries.row(q), qp);
          rec.add(recall(truth[q], res.neighbours));
          ratio.add(res.neighbours.empty() ? std::numeric_limits<double>::infinity()
                                           : approximation_ratio(truth[q], res.neighbours));
          evals.add(static_cast<double>(res.stats.distance_evaluations));
          visits.add(static_cast<double>(res.stats.projections_visited));
          row.truncated = row.truncated || res.stats.truncated;
        }
        if (config.record_timings) row.query_ms = elapsed_ms(query_start) / split_queries.size();
        row.recall = rec.mean();
        row.approx_ratio = ratio.mean();
        row.dist_evals = evals.mean();
        row.projections_visited = visits.mean();
        report.rows.push_back(row);
      }
    }
  }

  for (TraversalMode mode : config.modes) {
    for (std::size_t b = 0; b < budgets.size(); ++b) {
      RunningStats rec, ratio, evals, visits;
      for (const auto& row : report.rows) {
        if (row.mode != mode || row.sweep_index != b) continue;
        rec.add(row.recall);
        ratio.add(row.approx_ratio);
        evals.add(row.dist_evals);
        visits.add(row.projections_visited);
      }
      report.summary.push_back({mode, b, budgets[b].first, budgets[b].second, rec.mean(), rec.stddev(),
                                ratio.mean(), ratio.stddev(), evals.mean(), evals.stddev(), visits.mean(),
                                visits.stddev()});
    }
  }
  return report;
}

BenchReport run_benchmark(const BenchConfig& config) {
  const Dataset full = load_dataset(config.data_path, config.format);
  BenchReport report = run_benchmark(config, full);
  if (!config.report_path.empty()) write_report(config.report_path, report);
  return report;
}

void write_report(std::ostream& out, const BenchReport& report) {
  out << std::setprecision(10);
  out << "# pdci benchmark report\n"
      << "# dist_evals counts unique candidates over all composite indices (deduplicated, once each)\n"
      << "# approx_ratio = returned k-NN radius / true k-NN radius (>= 1; inf if fewer than k returned)\n"
      << "# points=" << report.dataset_size << " dim=" << report.dim
      << " points_per_split=" << report.points_per_split << " intrinsic_dim=" << report.intrinsic_dim << '\n';
  out << "split\tmode\tm\tL\tk\tk0\tk1\trecall\tapprox_ratio\tdist_evals\tprojections_visited\tbuild_ms\t"
         "query_ms\ttruncated\n";
  for (const auto& r : report.rows) {
    out << r.split << '\t' << to_string(r.mode) << '\t' << r.m << '\t' << r.L << '\t' << r.k << '\t' << r.k0
        << '\t' << r.k1 << '\t' << r.recall << '\t' << r.approx_ratio << '\t' << r.dist_evals << '\t'
        << r.projections_visited << '\t' << r.build_ms << '\t' << r.query_ms << '\t' << (r.truncated ? 1 : 0)
        << '\n';
  }
  out << "\n# summary over splits (mean, sample standard deviation)\n"
      << "mode\tk0\tk1\trecall_mean\trecall_std\tapprox_ratio_mean\tapprox_ratio_std\tdist_evals_mean\t"
         "dist_evals_std\tprojections_visited_mean\tprojections_visited_std\n";
  for (const auto& s : report.summary) {
    out << to_string(s.mode) << '\t' << s.k0 << '\t' << s.k1 << '\t' << s.recall_mean << '\t' << s.recall_std
        << '\t' << s.ratio_mean << '\t' << s.ratio_std << '\t' << s.evals_mean << '\t' << s.evals_std << '\t'
        << s.visits_mean << '\t' << s.visits_std << '\n';
  }
}

void write_report(const std::filesystem::path& path, const BenchReport& report) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write '" + path.string() + "'");
  write_report(out, report);
}

std::vector<CurvePoint> mode_curve(const BenchReport& report, TraversalMode mode) {
  std::vector<CurvePoint> curve;
  for (const auto& s : report.summary) {
    if (s.mode == mode) curve.push_back({s.ratio_mean, s.evals_mean, s.visits_mean});
  }
  return curve;
}

ModeComparison compare_curves(const std::vector<CurvePoint>& prioritized, const std::vector<CurvePoint>& cyclic,
                              double target_ratio) {
  ModeComparison cmp;
  cmp.target_ratio = target_ratio;
  cmp.prioritized = cost_at_ratio(prioritized, target_ratio);
  cmp.cyclic = cost_at_ratio(cyclic, target_ratio);
  if (cmp.prioritized && cmp.cyclic) {
    if (cmp.cyclic->evals > 0.0) cmp.evals_ratio = cmp.prioritized->evals / cmp.cyclic->evals;
    if (cmp.cyclic->visits > 0.0) cmp.visits_ratio = cmp.prioritized->visits / cmp.cyclic->visits;
  }
  return cmp;
}

std::vector<ModeComparison> compare_modes(const BenchReport& report, std::span<const double> target_ratios) {
  const auto prioritized = mode_curve(report, TraversalMode::kPrioritized);
  const auto cyclic = mode_curve(report, TraversalMode::kCyclic);
  std::vector<ModeComparison> out;
  for (double t : target_ratios) out.push_back(compare_curves(prioritized, cyclic, t));
  return out;
}

void write_comparison(std::ostream& out, std::span<const ModeComparison> comparisons) {
  auto opt = [&](const std::optional<double>& v) -> std::ostream& {
    if (v) return out << *v;
    return out << "n/a";
  };
  out << std::setprecision(6);
  out << "target_ratio\tprioritized_evals\tcyclic_evals\tevals_ratio\tprioritized_visits\tcyclic_visits\t"
         "visits_ratio\n";
  for (const auto& c : comparisons) {
    out << c.target_ratio << '\t';
    opt(c.prioritized ? std::optional<double>(c.prioritized->evals) : std::nullopt) << '\t';
    opt(c.cyclic ? std::optional<double>(c.cyclic->evals) : std::nullopt) << '\t';
    opt(c.evals_ratio) << '\t';
    opt(c.prioritized ? std::optional<double>(c.prioritized->visits) : std::nullopt) << '\t';
    opt(c.cyclic ? std::optional<double>(c.cyclic->visits) : std::nullopt) << '\t';
    opt(c.visits_ratio) << '\n';
  }
}

}  // namespace pdci::harness
