#include "pdci/dci_index.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <filesystem>
#include <limits>
#include <random>
#include <vector>

#include "pdci/error.hpp"
#include "pdci/harness/dataset_io.hpp"
#include "pdci/query.hpp"
#include "test_util.hpp"

namespace pdci {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kIoError;
}

// Dot product written independently of the library's.
double ref_dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::size_t total_entries(const DciIndex& index) {
  std::size_t total = 0;
  for (std::size_t l = 0; l < index.params().num_composite; ++l) {
    for (std::size_t j = 0; j < index.params().num_simple; ++j) total += index.simple_index(j, l).size();
  }
  return total;
}

// Query results expressed by coordinates, so indices with different id
// assignments can be compared.
std::vector<std::pair<std::vector<double>, double>> by_coordinates(const DciIndex& index,
                                                                  const QueryResult& r) {
  std::vector<std::pair<std::vector<double>, double>> out;
  for (const auto& nb : r.neighbours) {
    const auto p = index.point(nb.id);
    out.emplace_back(std::vector<double>(p.begin(), p.end()), nb.distance);
  }
  return out;
}

TEST(Construct, ThreePointsTwoSimpleIndices) {
  const Dataset data{{0.5, -1.0}, {2.0, 3.0}, {-4.0, 0.25}};
  const DciParams params{2, 2, 1, 7};
  const DciIndex index = DciIndex::construct(data, params);
  ASSERT_EQ(index.size(), 3u);
  for (std::size_t j = 0; j < 2; ++j) {
    const OrderedIndex& t = index.simple_index(j, 0);
    ASSERT_EQ(t.size(), 3u);
    const auto u = index.projections().direction(j, 0);
    for (PointId i = 0; i < 3; ++i) EXPECT_TRUE(t.contains(ref_dot(data.row(i), u), i));
  }
}

TEST(Construct, EmptyDatasetGivesEmptyIndex) {
  const DciIndex index = DciIndex::construct(Dataset(4), {4, 3, 2, 1});
  EXPECT_TRUE(index.empty());
  EXPECT_EQ(total_entries(index), 0u);
  EXPECT_EQ(code_of([&] { query(index, std::vector<double>(4, 0.0), {1, 1, 3}); }), ErrorCode::kEmptyIndex);
}

TEST(Construct, RejectsBadInput) {
  const Dataset wrong_dim{{1.0, 2.0, 3.0}};
  EXPECT_EQ(code_of([&] { DciIndex::construct(wrong_dim, {2, 1, 1, 0}); }), ErrorCode::kDimensionMismatch);
  const Dataset non_finite{{1.0, std::numeric_limits<double>::infinity()}};
  EXPECT_EQ(code_of([&] { DciIndex::construct(non_finite, {2, 1, 1, 0}); }), ErrorCode::kInvalidPoint);
  EXPECT_EQ(code_of([&] { DciIndex::construct(Dataset(2), {0, 1, 1, 0}); }), ErrorCode::kInvalidDimension);
  EXPECT_EQ(code_of([&] { DciIndex::construct(Dataset(2), {2, 0, 1, 0}); }), ErrorCode::kInvalidParams);
  EXPECT_EQ(code_of([&] { DciIndex::construct(Dataset(2), {2, 1, 0, 0}); }), ErrorCode::kInvalidParams);
}

TEST(Construct, MnistSubsampleKeysAreBitIdenticalAcrossBuilds) {
  const auto path = std::filesystem::path(PDCI_DATA_DIR) / "mnist10k-images-idx3-ubyte";
  const Dataset full = harness::load_dataset(path, harness::DataFormat::kIdx);
  std::vector<std::size_t> rows(1000);
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i * 10;
  const Dataset data = full.select(rows);
  const DciParams params{data.dim(), 10, 2, 2024};
  const DciIndex a = DciIndex::construct(data, params);
  const DciIndex b = DciIndex::construct(data, params);
  for (std::size_t l = 0; l < 2; ++l) {
    for (std::size_t j = 0; j < 10; ++j) {
      const auto ea = a.simple_index(j, l).entries();
      const auto eb = b.simple_index(j, l).entries();
      ASSERT_EQ(ea.size(), 1000u);
      for (std::size_t i = 0; i < ea.size(); ++i) {
        ASSERT_EQ(std::bit_cast<std::uint64_t>(ea[i].key), std::bit_cast<std::uint64_t>(eb[i].key));
        ASSERT_EQ(ea[i].id, eb[i].id);
      }
    }
  }
}

TEST(Projections, UnitNormAndDeterministic) {
  const DciParams params{33, 6, 4, 99};
  const ProjectionSet a = ProjectionSet::generate(params);
  const ProjectionSet b = ProjectionSet::generate(params);
  for (std::size_t l = 0; l < 4; ++l) {
    for (std::size_t j = 0; j < 6; ++j) {
      const auto u = a.direction(j, l);
      EXPECT_NEAR(std::sqrt(ref_dot(u, u)), 1.0, 1e-12);
      const auto v = b.direction(j, l);
      EXPECT_TRUE(std::equal(u.begin(), u.end(), v.begin()));
    }
  }
}

TEST(Projections, GrowingMOrLKeepsExistingDirections) {
  const ProjectionSet small = ProjectionSet::generate({8, 3, 2, 5});
  const ProjectionSet large = ProjectionSet::generate({8, 5, 4, 5});
  for (std::size_t l = 0; l < 2; ++l) {
    for (std::size_t j = 0; j < 3; ++j) {
      const auto u = small.direction(j, l);
      const auto v = large.direction(j, l);
      EXPECT_TRUE(std::equal(u.begin(), u.end(), v.begin())) << j << "," << l;
    }
  }
}

TEST(Index, StoredKeysMatchRecomputedDotProducts) {
  const Dataset data = test::random_points(300, 12, 1);
  const DciIndex index = DciIndex::construct(data, {12, 5, 3, 8});
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const PointId id = rng() % 300;
    const std::size_t j = rng() % 5, l = rng() % 3;
    const double key = ref_dot(data.row(id), index.projections().direction(j, l));
    EXPECT_TRUE(index.simple_index(j, l).contains(key, id));
  }
}

TEST(Index, EntryCountInvariantThroughUpdates) {
  DciIndex index = DciIndex::construct(test::random_points(40, 5, 2), {5, 3, 2, 1});
  EXPECT_EQ(total_entries(index), 3u * 2u * index.size());
  std::mt19937_64 rng(8);
  for (int step = 0; step < 200; ++step) {
    const auto ids = index.ids();
    if (ids.empty() || rng() % 2 == 0) {
      index.insert(test::random_vector(5, rng()));
    } else {
      index.remove(ids[rng() % ids.size()]);
    }
    ASSERT_EQ(total_entries(index), 3u * 2u * index.size());
  }
}

TEST(Index, IdsAreNeverReused) {
  DciIndex index = DciIndex::construct(test::random_points(3, 2, 4), {2, 2, 1, 0});
  index.remove(2);
  const PointId fresh = index.insert(std::vector<double>{0.1, 0.2});
  EXPECT_EQ(fresh, 3u);
  EXPECT_FALSE(index.contains(2));
  EXPECT_EQ(code_of([&] { index.remove(2); }), ErrorCode::kNotFound);
  EXPECT_EQ(code_of([&] { index.remove(17); }), ErrorCode::kNotFound);
}

TEST(Index, InsertRejectsBadPoints) {
  DciIndex index = DciIndex::construct(Dataset(3), {3, 2, 1, 0});
  EXPECT_EQ(code_of([&] { index.insert(std::vector<double>{1.0, 2.0}); }), ErrorCode::kDimensionMismatch);
  EXPECT_EQ(code_of([&] { index.insert(std::vector<double>{1.0, std::nan(""), 2.0}); }),
            ErrorCode::kInvalidPoint);
  EXPECT_TRUE(index.empty());
}

TEST(Index, SolePointIsFoundAtDistanceZero) {
  DciIndex index = DciIndex::construct(Dataset(3), {3, 4, 2, 6});
  const std::vector<double> p{0.3, -0.7, 2.5};
  const PointId id = index.insert(p);
  const QueryResult r = query(index, p, {1, 1, 4 + 1});
  ASSERT_EQ(r.neighbours.size(), 1u);
  EXPECT_EQ(r.neighbours[0].id, id);
  EXPECT_EQ(r.neighbours[0].distance, 0.0);
}

TEST(Index, RemovingLastPointEmptiesIndex) {
  DciIndex index = DciIndex::construct(Dataset{{1.0, 1.0}}, {2, 2, 2, 0});
  index.remove(0);
  EXPECT_EQ(code_of([&] { query(index, std::vector<double>{0.0, 0.0}, {1, 1, 2}); }), ErrorCode::kEmptyIndex);
}

TEST(Index, RemovedPointNeverReturned) {
  const Dataset data = test::random_points(60, 4, 21);
  DciIndex index = DciIndex::construct(data, {4, 3, 2, 2});
  index.remove(17);
  const std::size_t n = index.size();
  const auto q = data.row(17);  // the removed point itself is the hardest case
  const QueryResult r = query(index, q, {n - 1, n, 3 * n + 1});
  ASSERT_EQ(r.neighbours.size(), n - 1);
  for (const auto& nb : r.neighbours) EXPECT_NE(nb.id, 17u);
}

// The equivalence checks below use 50 random instances each; results are
// compared by coordinates because ids differ between the two indices.
TEST(Index, InsertMatchesBatchConstruction) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const std::size_t n = 20 + s * 3, d = 2 + s % 9;
    const Dataset data = test::random_points(n, d, 1000 + s);
    const std::size_t x = s % n;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != x) rest.push_back(i);
    }
    const DciParams params{d, 1 + s % 4, 1 + s % 3, s};
    const DciIndex batch = DciIndex::construct(data, params);
    DciIndex incremental = DciIndex::construct(data.select(rest), params);
    incremental.insert(data.row(x));

    for (int qi = 0; qi < 3; ++qi) {
      const auto q = test::random_vector(d, s * 31 + qi);
      const QueryParams qp{std::min<std::size_t>(5, n), std::min<std::size_t>(10, n), 4 * params.num_simple,
                           qi == 2 ? TraversalMode::kCyclic : TraversalMode::kPrioritized};
      const auto a = query(batch, q, qp);
      const auto b = query(incremental, q, qp);
      ASSERT_EQ(by_coordinates(batch, a), by_coordinates(incremental, b)) << "instance " << s;
      EXPECT_EQ(a.stats.projections_visited, b.stats.projections_visited);
    }
  }
}

TEST(Index, RemoveMatchesConstructionWithoutThePoint) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const std::size_t n = 20 + s * 3, d = 2 + s % 9;
    const Dataset data = test::random_points(n, d, 5000 + s);
    const std::size_t x = (s * 7) % n;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != x) rest.push_back(i);
    }
    const DciParams params{d, 1 + s % 4, 1 + s % 3, s + 77};
    DciIndex removed = DciIndex::construct(data, params);
    removed.remove(x);
    const DciIndex rebuilt = DciIndex::construct(data.select(rest), params);

    for (int qi = 0; qi < 3; ++qi) {
      const auto q = test::random_vector(d, s * 17 + qi);
      const QueryParams qp{std::min<std::size_t>(5, n - 1), std::min<std::size_t>(12, n - 1),
                           5 * params.num_simple,
                           qi == 2 ? TraversalMode::kCyclic : TraversalMode::kPrioritized};
      const auto a = query(removed, q, qp);
      const auto b = query(rebuilt, q, qp);
      ASSERT_EQ(by_coordinates(removed, a), by_coordinates(rebuilt, b)) << "instance " << s;
    }
  }
}

TEST(ProjectQuery, ZeroVectorGivesZeroKeys) {
  const DciIndex index = DciIndex::construct(Dataset(6), {6, 4, 3, 1});
  const ProjectedQuery projected = index.project_query(std::vector<double>(6, 0.0));
  const auto keys = projected.keys();
  ASSERT_EQ(keys.size(), 12u);
  for (double k : keys) EXPECT_EQ(k, 0.0);
}

TEST(ProjectQuery, DirectionProjectsToOne) {
  const DciIndex index = DciIndex::construct(Dataset(9), {9, 3, 2, 4});
  const auto u = index.projections().direction(0, 0);
  const std::vector<double> q(u.begin(), u.end());
  EXPECT_NEAR(index.project_query(q).key(0, 0), 1.0, 1e-9);
}

TEST(ProjectQuery, KeysBoundedByQueryNorm) {
  const DciIndex index = DciIndex::construct(Dataset(20), {20, 8, 3, 12});
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto q = test::random_vector(20, s, -5.0, 5.0);
    const double bound = std::sqrt(ref_dot(q, q));
    const ProjectedQuery projected = index.project_query(q);
    for (double k : projected.keys()) EXPECT_LE(std::abs(k), bound + 1e-12);
  }
}

TEST(ProjectQuery, RejectsWrongLength) {
  const DciIndex index = DciIndex::construct(Dataset(3), {3, 1, 1, 0});
  EXPECT_EQ(code_of([&] { index.project_query(std::vector<double>{1.0}); }), ErrorCode::kDimensionMismatch);
}

}  // namespace
}  // namespace pdci
