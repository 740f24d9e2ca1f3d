#include "pdci/random.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <vector>

#include "pdci/error.hpp"

namespace pdci {
namespace {

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

TEST(SampleUnitVector, OneDimensionIsPlusOrMinusOne) {
  Engine engine = make_stream(1, {});
  std::set<double> seen;
  for (int i = 0; i < 200; ++i) {
    const auto u = sample_unit_vector(1, engine);
    ASSERT_EQ(u.size(), 1u);
    ASSERT_TRUE(u[0] == 1.0 || u[0] == -1.0) << u[0];
    seen.insert(u[0]);
  }
  EXPECT_EQ(seen.size(), 2u);
}

TEST(SampleUnitVector, DeterministicForASeed) {
  Engine a = make_stream(42, {3});
  Engine b = make_stream(42, {3});
  EXPECT_EQ(sample_unit_vector(3, a), sample_unit_vector(3, b));
  Engine c = make_stream(43, {3});
  Engine d = make_stream(42, {3});
  EXPECT_NE(sample_unit_vector(3, c), sample_unit_vector(3, d));
}

TEST(SampleUnitVector, TwoDimensionalMeanIsCentred) {
  Engine engine = make_stream(7, {});
  double sx = 0.0, sy = 0.0;
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) {
    const auto u = sample_unit_vector(2, engine);
    sx += u[0];
    sy += u[1];
  }
  EXPECT_NEAR(sx / samples, 0.0, 0.03);
  EXPECT_NEAR(sy / samples, 0.0, 0.03);
}

TEST(SampleUnitVector, NormsWithinTolerance) {
  Engine engine = make_stream(11, {});
  for (std::size_t d : {1u, 2u, 3u, 17u, 128u, 784u}) {
    for (int i = 0; i < 50; ++i) EXPECT_NEAR(norm(sample_unit_vector(d, engine)), 1.0, 1e-12);
  }
}

TEST(SampleUnitVector, ZeroDimensionRejected) {
  Engine engine = make_stream(0, {});
  try {
    sample_unit_vector(0, engine);
    FAIL() << "expected InvalidDimension";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidDimension);
  }
}

TEST(Streams, DistinctPathsGiveDistinctStreams) {
  Engine a = make_stream(5, {1, 2});
  Engine b = make_stream(5, {2, 1});
  Engine c = make_stream(5, {1, 2, 0});
  const auto va = a();
  EXPECT_NE(va, b());
  EXPECT_NE(va, c());
}

TEST(UniformBelow, StaysInRangeAndCoversIt) {
  Engine engine = make_stream(9, {});
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = uniform_below(engine, 7);
    ASSERT_LT(v, 7u);
    ++hits[v];
  }
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(Uniform01, HalfOpenUnitInterval) {
  Engine engine = make_stream(10, {});
  double sum = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double u = uniform01(engine);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 10000, 0.5, 0.015);
}

}  // namespace
}  // namespace pdci
