#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "csnorm/errors.hpp"
#include "csnorm/slopes.hpp"

using namespace csnorm;

TEST(Slope, CanonicalSign) {
  const auto a = Slope::make(-3, -2);
  EXPECT_EQ(a.p(), 3);
  EXPECT_EQ(a.q(), 2);
  EXPECT_TRUE(Slope::make(-1, 0).is_infinite());
  EXPECT_EQ(Slope::make(-1, 0), Slope::infinity());
}

TEST(Slope, RejectsBadPairs) {
  EXPECT_THROW(Slope::make(0, 0), Error);
  EXPECT_THROW(Slope::make(6, 2), Error);
  EXPECT_THROW(Slope::reduce(0, 0), Error);
}

TEST(Slope, ReduceAndParse) {
  EXPECT_EQ(Slope::reduce(6, -4), Slope::make(-3, 2));
  EXPECT_EQ(Slope::reduce(0, 5), Slope::make(0, 1));
  EXPECT_EQ(Slope::parse("inf"), Slope::infinity());
  EXPECT_EQ(Slope::parse("7"), Slope::make(7, 1));
  EXPECT_EQ(Slope::parse("-5/3"), Slope::make(-5, 3));
  EXPECT_EQ(Slope::parse("-5/3").str(), "-5/3");
  EXPECT_THROW(Slope::parse("x/2"), Error);
}

TEST(Slope, Distance) {
  EXPECT_EQ(distance(Slope::make(1, 0), Slope::make(0, 1)), 1);
  EXPECT_EQ(distance(Slope::make(5, 1), Slope::make(4, 1)), 1);
  EXPECT_EQ(distance(Slope::make(7, 2), Slope::infinity()), 2);
}

TEST(Slope, DistanceProperties) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-40, 40);
  for (int i = 0; i < 500; ++i) {
    int p1 = d(rng), q1 = d(rng), p2 = d(rng), q2 = d(rng);
    if ((p1 == 0 && q1 == 0) || (p2 == 0 && q2 == 0)) continue;
    const auto a = Slope::reduce(p1, q1), b = Slope::reduce(p2, q2);
    EXPECT_EQ(distance(a, b), distance(b, a));
    EXPECT_EQ(distance(a, a), 0);
    // invariant under the SL2(Z) shear p -> p + k q
    const auto sa = Slope::reduce(a.p() + 3 * a.q(), a.q()), sb = Slope::reduce(b.p() + 3 * b.q(), b.q());
    EXPECT_EQ(distance(sa, sb), distance(a, b));
  }
}

TEST(Slope, Ranges) {
  EXPECT_EQ(classify_range(Slope::make(-1, 1)).tag, RangeTag::NegInf0);
  EXPECT_EQ(classify_range(Slope::make(1, 1)).tag, RangeTag::Zero2);
  EXPECT_EQ(classify_range(Slope::make(5, 2)).tag, RangeTag::Two4);
  EXPECT_EQ(classify_range(Slope::make(5, 1)).tag, RangeTag::FourInf);
  EXPECT_TRUE(classify_range(Slope::make(0, 1)).is_boundary());
  EXPECT_TRUE(classify_range(Slope::make(2, 1)).is_boundary());
  EXPECT_TRUE(classify_range(Slope::make(4, 1)).is_boundary());
  EXPECT_THROW(classify_range(Slope::infinity()), Error);
}

// beta_2 from the boundary-slope table, written out independently.
TEST(BoundarySlopes, MiddleSlopePerRange) {
  auto beta2 = [](std::int64_t p, std::int64_t q) { return boundary_slopes(p, q).beta[1]; };
  EXPECT_EQ(beta2(-1, 1), Slope::make(-4, 1));
  EXPECT_EQ(beta2(1, 1), Slope::make(6, 1));
  EXPECT_EQ(beta2(5, 2), Slope::make(7, 2));
  EXPECT_EQ(beta2(5, 1), Slope::make(4, 3));
  EXPECT_EQ(beta2(7, 2), Slope::make(5, 2));
  EXPECT_EQ(beta2(9, 2), Slope::make(8, 5));
  for (std::int64_t q = 1; q <= 6; ++q)
    for (std::int64_t p = -20; p <= 30; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const auto b = boundary_slopes(p, q);
      EXPECT_EQ(b.beta[0], Slope::make(4, 1));
      EXPECT_EQ(b.beta[2], Slope::make(0, 1));
    }
}

TEST(BoundarySlopes, EndpointsAgree) {
  // Both neighbouring formulas give the same beta_2 at p/q = 2 and 4.
  EXPECT_EQ(Slope::reduce(2 * 2 + 4, 2), Slope::reduce(-2 + 6, 1));
  EXPECT_EQ(boundary_slopes(2, 1).beta[1], Slope::make(4, 1));
  EXPECT_EQ(boundary_slopes(4, 1).beta[1], Slope::reduce(4, 2));
}

TEST(BoundarySlopes, DistanceRow) {
  const auto row = distance_row(-1, 1, Slope::infinity());
  EXPECT_EQ(row, (std::array<std::int64_t, 3>{1, 1, 1}));
  const auto r2 = distance_row(7, 2, Slope::make(1, 1));
  EXPECT_EQ(r2, (std::array<std::int64_t, 3>{3, 3, 1}));
}

TEST(BoundarySlopes, PairTableNonEmpty) { EXPECT_FALSE(whitehead_slope_pairs().empty()); }
