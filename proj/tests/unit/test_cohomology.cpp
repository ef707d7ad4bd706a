#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "csnorm/cohomology.hpp"
#include "csnorm/errors.hpp"
#include "csnorm/reps.hpp"
#include "csnorm/respq.hpp"
#include "csnorm/roots.hpp"

using namespace csnorm;

namespace {

const double kPi = std::acos(-1.0);

Complex unity(std::int64_t k, std::int64_t n) {
  return std::polar(1.0, 2 * kPi * static_cast<double>(k) / static_cast<double>(n));
}

}  // namespace

TEST(Coboundary, RankThreeGenerically) {
  EXPECT_EQ(numeric_rank(coboundary_matrix(Complex(1.7, 0.3), Complex(0.4, -1.2))), 3);
  EXPECT_EQ(numeric_rank(coboundary_matrix(Complex(2.0), Complex(1.0))), 3);
}

TEST(Coboundary, DropsRankAtSEqualsOne) {
  EXPECT_EQ(numeric_rank(coboundary_matrix(Complex(1.0 + 1e-12), Complex(1.0))), 2);
}

TEST(Coboundary, RankThreeAtIrreduciblePReps) {
  for (auto [p, q] : {std::pair<int, int>{-1, 1}, {5, 1}, {7, 2}, {-5, 3}}) {
    const auto nt = nontrivial_roots(find_roots(res_poly(p, q)), expected_trivial_root_orders(p, q));
    for (const auto& r : nt.roots) {
      const auto a = partial_diagonal_a(solve_t(r.value, p, q));
      EXPECT_EQ(numeric_rank(coboundary_matrix(r.value, a)), 3) << p << "/" << q;
    }
  }
}

TEST(Presentation, RankFiveAtRootsOfUnity) {
  for (std::int64_t p = 3; p <= 15; p += 2)
    for (std::int64_t q : {1, 2}) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t k = 1; 2 * k < p; ++k)
        EXPECT_NO_THROW(reducible_presentation_matrix(unity(k, p), p, q)) << p << "/" << q;
    }
}

// Determinant frozen from an independent symbolic expansion of the 6x6
// matrix at s = exp(2 pi i / 5), (p, q) = (5, 1).
TEST(DetP, FrozenValue) {
  const auto d = det_P_reducible(unity(1, 5), 5, 1);
  EXPECT_NEAR(d.numeric.real(), -139.4427190999916, 1e-9);
  EXPECT_NEAR(d.numeric.imag(), 291.52236890588, 1e-9);
  EXPECT_LE(d.rel_error, 1e-12);
}

TEST(DetP, ScaledRowDisagrees) {
  const auto d = det_P_reducible(unity(1, 5), 5, 1);
  EXPECT_GT(d.rel_error_scaled_row, 0.1);
}

TEST(DetP, MatchesClosedFormOffTheRootsOfUnity) {
  for (Complex s : {Complex(1.3, 0.4), Complex(-0.6, 0.9), Complex(2.5, -1.0)})
    for (auto [p, q] : {std::pair<int, int>{5, 1}, {-7, 3}, {2, 1}}) {
      const auto d = det_P_reducible(s, p, q);
      EXPECT_LE(d.rel_error, 1e-10);
    }
}

TEST(DetP, VanishesForPZero) {
  const auto d = det_P_reducible(unity(1, 7), 0, 1);
  EXPECT_LT(std::abs(d.numeric), 1e-12);
}

TEST(D1, ClosedFormRoots) {
  // numeric roots from an independent polynomial solver
  const auto c = d1_classify(5, 1);
  EXPECT_TRUE(c.expect_real);
  EXPECT_EQ(c.real, 4);
  double big = 0, small = 1e9;
  for (const auto& z : c.roots) {
    big = std::max(big, std::abs(z));
    small = std::min(small, std::abs(z));
  }
  EXPECT_NEAR(big, 3.5098181457607374, 1e-12);
  EXPECT_NEAR(small, 0.28491504644131765, 1e-13);

  const auto i = d1_classify(1, 1);
  EXPECT_TRUE(i.expect_imaginary);
  EXPECT_EQ(i.imaginary, 4);
  for (const auto& z : i.roots) EXPECT_TRUE(std::abs(std::abs(z) - 2.1074910296635316) < 1e-12 ||
                                            std::abs(std::abs(z) - 0.4744978678080796) < 1e-12);
  EXPECT_THROW(d1_roots(4, 1), Error);
}

TEST(D1, ClassificationSweep) {
  for (std::int64_t q = 1; q <= 8; ++q)
    for (std::int64_t p = -25; p <= 25; ++p) {
      if (std::gcd(p, q) != 1 || p == 0 || p == 4 * q) continue;
      const auto c = d1_classify(p, q);
      EXPECT_TRUE(c.ok()) << p << "/" << q;
      EXPECT_LE(c.max_residual, 1e-12);
    }
}

// Checksums from an independent exact evaluation of the encoded d2.
TEST(D2, Checksums) {
  const auto& d2 = d2_poly();
  EXPECT_EQ(d2.maxdeg(), 40);
  EXPECT_EQ(d2.mindeg(), 0);
  EXPECT_EQ(d2.leading(), 22);
  EXPECT_EQ(d2.trailing(), 11);
  EXPECT_EQ(d2.eval(BigInt(1)), 256);
  EXPECT_EQ(d2.eval(BigInt(2)), BigInt("299725177483"));
  for (const auto& [e, c] : d2.terms()) EXPECT_EQ(e % 2, 0);
}

TEST(D2, NoCommonRootsOnSamples) {
  const std::pair<int, int> samples[] = {{-1, 1}, {1, 1}, {5, 1}, {7, 2}, {-5, 3}, {65, 3}};
  const double want[] = {0.152, 0.130, 0.152, 0.064, 0.037, 0.101};
  for (std::size_t i = 0; i < std::size(samples); ++i) {
    const auto [p, q] = samples[i];
    const auto c = d2_check(p, q);
    EXPECT_GT(c.min_distance, 1e-3);
    EXPECT_NEAR(c.min_distance, want[i], 1e-3) << p << "/" << q;
    EXPECT_GT(c.d1_min_distance, 1e-3);
  }
  EXPECT_THROW(d2_check(4, 1), Error);
}
