#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pdci/dci_index.hpp"
#include "pdci/error.hpp"
#include "pdci/harness/bench_runner.hpp"
#include "pdci/harness/dataset_io.hpp"
#include "pdci/harness/index_meta.hpp"
#include "pdci/query.hpp"
#include "pdci/theory.hpp"

namespace pdci::cli {

namespace {

namespace fs = std::filesystem;
using harness::DataFormat;

const std::vector<std::string> kFormats{"fvecs", "idx", "txt"};

struct BuildArgs {
  std::string data, format, out;
  std::size_t m = 10, L = 2;
  std::uint64_t seed = 0;
};

struct QueryArgs {
  std::string index, queries, queries_format, report, mode = "prioritized";
  std::size_t k = 1, k0 = 0, k1 = 0;
};

struct BenchArgs {
  std::string data, format, report, modes = "prioritized,cyclic";
  std::size_t subsample = 0, splits = 10, queries = 100, k = 25, m = 10, L = 2;
  std::uint64_t seed = 0;
  std::vector<double> c0{1.0}, c1{1.0}, targets{1.05};
  double d_est = 0.0;
  bool no_timings = false;
};

struct ProjectionProbArgs {
  std::size_t d = 2, M = 1, trials = 100000;
  double ratio = 0.5;
  std::uint64_t seed = 0;
};

struct SparsityArgs {
  std::string data, format;
  std::size_t tau = 1, samples = 100;
  std::uint64_t seed = 0;
};

int run_build(const BuildArgs& a, std::ostream& out) {
  const DataFormat format = harness::parse_data_format(a.format);
  const Dataset data = harness::load_dataset(a.data, format);
  const DciParams params{data.dim(), a.m, a.L, a.seed};
  const auto start = std::chrono::steady_clock::now();
  const DciIndex index = DciIndex::construct(data, params);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  harness::save_index_metadata(a.out, {fs::absolute(a.data), format, params, data.size()});
  out << "built index over " << index.size() << " points (d=" << params.dim << ", m=" << params.num_simple
      << ", L=" << params.num_composite << ", seed=" << params.seed << ") in " << std::fixed
      << std::setprecision(1) << ms << " ms; metadata written to " << a.out << '\n';
  return kExitOk;
}

int run_query(const QueryArgs& a, std::ostream& out) {
  const harness::IndexMetadata meta = harness::load_index_metadata(a.index);
  const DciIndex index = harness::rebuild_index(meta, a.index);
  const DataFormat qformat = a.queries_format.empty() ? meta.format : harness::parse_data_format(a.queries_format);
  const Dataset queries = harness::load_dataset(a.queries, qformat);
  if (queries.dim() != index.params().dim) {
    throw Error(ErrorCode::kDimensionMismatch, "queries have dimension " + std::to_string(queries.dim()) +
                                                   ", index has " + std::to_string(index.params().dim));
  }
  const QueryParams qp{a.k, a.k0, a.k1, parse_traversal_mode(a.mode)};

  std::ofstream report(a.report);
  if (!report) throw Error(ErrorCode::kIoError, "cannot write '" + a.report + "'");
  report << std::setprecision(10);
  report << "query\trank\tid\tdistance\tdist_evals\tprojections_visited\ttruncated\n";
  double total_evals = 0.0;
  for (std::size_t q = 0; q < queries.size(); ++q) {
    const QueryResult res = query(index, queries.row(q), qp);
    total_evals += static_cast<double>(res.stats.distance_evaluations);
    for (std::size_t r = 0; r < res.neighbours.size(); ++r) {
      report << q << '\t' << r + 1 << '\t' << res.neighbours[r].id << '\t' << res.neighbours[r].distance << '\t'
             << res.stats.distance_evaluations << '\t' << res.stats.projections_visited << '\t'
             << (res.stats.truncated ? 1 : 0) << '\n';
    }
  }
  out << "answered " << queries.size() << " queries (" << a.mode << ", k=" << a.k << ", k0=" << a.k0
      << ", k1=" << a.k1 << "); mean distance evaluations " << total_evals / static_cast<double>(queries.size())
      << "; results in " << a.report << '\n';
  return kExitOk;
}

std::vector<TraversalMode> parse_modes(const std::string& text) {
  std::vector<TraversalMode> modes;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) modes.push_back(parse_traversal_mode(item));
  }
  return modes;
}

int run_bench(const BenchArgs& a, std::ostream& out) {
  harness::BenchConfig config;
  config.data_path = a.data;
  config.format = harness::parse_data_format(a.format);
  config.subsample = a.subsample;
  config.splits = a.splits;
  config.queries_per_split = a.queries;
  config.k = a.k;
  config.num_simple = a.m;
  config.num_composite = a.L;
  config.seed = a.seed;
  config.modes = parse_modes(a.modes);
  config.report_path = a.report;
  config.record_timings = !a.no_timings;
  if (a.d_est > 0.0) config.intrinsic_dim = a.d_est;

  const std::size_t points = std::max(a.c0.size(), a.c1.size());
  if ((a.c0.size() != points && a.c0.size() != 1) || (a.c1.size() != points && a.c1.size() != 1)) {
    throw Error(ErrorCode::kInvalidParams, "--c0 and --c1 lists must have equal length (or length one)");
  }
  config.sweep.clear();
  for (std::size_t i = 0; i < points; ++i) {
    harness::BudgetSpec spec;
    spec.c0 = a.c0.size() == 1 ? a.c0[0] : a.c0[i];
    spec.c1 = a.c1.size() == 1 ? a.c1[0] : a.c1[i];
    config.sweep.push_back(spec);
  }

  const harness::BenchReport report = harness::run_benchmark(config);
  out << "wrote " << report.rows.size() << " rows to " << a.report << " (intrinsic_dim=" << report.intrinsic_dim
      << ")\n";
  const bool both = std::count(config.modes.begin(), config.modes.end(), TraversalMode::kPrioritized) &&
                    std::count(config.modes.begin(), config.modes.end(), TraversalMode::kCyclic);
  if (both) {
    const auto cmp = harness::compare_modes(report, a.targets);
    harness::write_comparison(out, cmp);
  }
  return kExitOk;
}

int run_projection_probability(const ProjectionProbArgs& a, std::ostream& out) {
  const double closed = lemma1_probability(a.ratio, a.M);
  const double empirical = monte_carlo_projection_prob(a.d, a.ratio, a.M, a.trials, a.seed);
  const double sigma = std::sqrt(std::max(closed * (1.0 - closed), 1e-300) / static_cast<double>(a.trials));
  out << std::setprecision(6) << "d=" << a.d << " ratio=" << a.ratio << " M=" << a.M << " trials=" << a.trials
      << "\nclosed_form=" << closed << "\nmonte_carlo=" << empirical << "\nsigma=" << sigma
      << "\nz=" << (empirical - closed) / sigma << '\n';
  return kExitOk;
}

int run_sparsity(const SparsityArgs& a, std::ostream& out) {
  const Dataset data = harness::load_dataset(a.data, harness::parse_data_format(a.format));
  const SparsityEstimate est = estimate_gamma(data, a.tau, a.samples, a.seed);
  out << std::setprecision(6) << "tau=" << est.tau << "\ngamma=" << est.gamma
      << "\nintrinsic_dim=" << est.intrinsic_dim << "\nsamples_used=" << est.samples_used << '\n';
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidParams:
    case ErrorCode::kInvalidDimension:
      return kExitInvalidArguments;
    default:
      return kExitDataError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prioritized DCI: exact randomized k-nearest-neighbour search"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Build an index and write its metadata file");
  build_cmd->add_option("--data", build.data, "Data file")->required();
  build_cmd->add_option("--format", build.format, "Data format")->required()->check(CLI::IsMember(kFormats));
  build_cmd->add_option("--m", build.m, "Simple indices per composite index")->check(CLI::PositiveNumber);
  build_cmd->add_option("--L", build.L, "Composite indices")->check(CLI::PositiveNumber);
  build_cmd->add_option("--seed", build.seed, "Projection seed");
  build_cmd->add_option("--out", build.out, "Metadata output path")->required();

  QueryArgs qa;
  auto* query_cmd = app.add_subcommand("query", "Answer k-NN queries against a built index");
  query_cmd->add_option("--index", qa.index, "Index metadata file")->required();
  query_cmd->add_option("--queries", qa.queries, "Query file")->required();
  query_cmd->add_option("--queries-format", qa.queries_format, "Query file format (default: index data format)")
      ->check(CLI::IsMember(kFormats));
  query_cmd->add_option("--k", qa.k, "Neighbours per query")->required();
  query_cmd->add_option("--k0", qa.k0, "Candidates to retrieve per composite index")->required();
  query_cmd->add_option("--k1", qa.k1, "Projections to visit per composite index")->required();
  query_cmd->add_option("--mode", qa.mode, "Traversal mode")->check(CLI::IsMember({"prioritized", "cyclic"}));
  query_cmd->add_option("--report", qa.report, "Result table output path")->required();

  BenchArgs ba;
  auto* bench_cmd = app.add_subcommand("bench", "Run the split / sweep evaluation protocol");
  bench_cmd->add_option("--data", ba.data, "Data file")->required();
  bench_cmd->add_option("--format", ba.format, "Data format")->required()->check(CLI::IsMember(kFormats));
  bench_cmd->add_option("--subsample", ba.subsample, "Random subsample size (0 = all)");
  bench_cmd->add_option("--splits", ba.splits, "Query/data splits");
  bench_cmd->add_option("--queries", ba.queries, "Queries per split");
  bench_cmd->add_option("--k", ba.k, "Neighbours per query");
  bench_cmd->add_option("--m", ba.m, "Simple indices per composite index");
  bench_cmd->add_option("--L", ba.L, "Composite indices");
  bench_cmd->add_option("--seed", ba.seed, "Seed for subsample, splits and projections");
  bench_cmd->add_option("--c0", ba.c0, "k0 multipliers, comma separated")->delimiter(',');
  bench_cmd->add_option("--c1", ba.c1, "k1 multipliers, comma separated")->delimiter(',');
  bench_cmd->add_option("--modes", ba.modes, "Traversal modes, comma separated");
  bench_cmd->add_option("--report", ba.report, "Report output path")->required();
  bench_cmd->add_option("--d-est", ba.d_est, "Intrinsic dimensionality for the budgets (default: estimated)");
  bench_cmd->add_option("--targets", ba.targets, "Approximation ratios for the mode comparison")->delimiter(',');
  bench_cmd->add_flag("--no-timings", ba.no_timings, "Write zero timings for reproducible reports");

  auto* validate_cmd = app.add_subcommand("validate", "Check theory results by simulation");
  validate_cmd->require_subcommand(1);
  ProjectionProbArgs la;
  auto* projection_cmd = validate_cmd->add_subcommand("lemma1", "Projection-order probability vs Monte Carlo");
  projection_cmd->add_option("--d", la.d, "Ambient dimensionality");
  projection_cmd->add_option("--ratio", la.ratio, "Short / long vector length ratio in [0, 1]");
  projection_cmd->add_option("--M", la.M, "Number of projections");
  projection_cmd->add_option("--trials", la.trials, "Monte Carlo trials");
  projection_cmd->add_option("--seed", la.seed, "Seed");

  SparsityArgs sa;
  auto* sparsity_cmd = app.add_subcommand("sparsity", "Estimate global relative sparsity and intrinsic dimension");
  sparsity_cmd->add_option("--data", sa.data, "Data file")->required();
  sparsity_cmd->add_option("--format", sa.format, "Data format")->required()->check(CLI::IsMember(kFormats));
  sparsity_cmd->add_option("--tau", sa.tau, "Minimum ball population");
  sparsity_cmd->add_option("--samples", sa.samples, "Sampled centres");
  sparsity_cmd->add_option("--seed", sa.seed, "Seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidArguments;
  }

  try {
    if (build_cmd->parsed()) return run_build(build, out);
    if (query_cmd->parsed()) return run_query(qa, out);
    if (bench_cmd->parsed()) return run_bench(ba, out);
    if (projection_cmd->parsed()) return run_projection_probability(la, out);
    if (sparsity_cmd->parsed()) return run_sparsity(sa, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitInvalidArguments;
}

}  // namespace pdci::cli
