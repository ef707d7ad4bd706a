#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "csnorm/errors.hpp"
#include "csnorm/polynomials.hpp"

using namespace csnorm;

namespace {

IntPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(-6, 6), c(-9, 9), n(0, 5);
  IntPoly f;
  for (int i = n(rng); i >= 0; --i) f.add_term(e(rng), BigInt(c(rng)));
  return f;
}

}  // namespace

TEST(LaurentPoly, Basics) {
  const IntPoly f{{-2, 3}, {1, -1}};
  EXPECT_EQ(f.mindeg(), -2);
  EXPECT_EQ(f.maxdeg(), 1);
  EXPECT_EQ(f.span(), 3);
  EXPECT_EQ(f.coeff(-1), 0);
  EXPECT_EQ(f.coeff(1), -1);
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ((f - f).span(), 0);
}

TEST(LaurentPoly, Multiply) {
  const IntPoly a{{0, 1}, {1, 1}}, b{{0, -1}, {1, 1}};
  EXPECT_EQ(a * b, (IntPoly{{0, -1}, {2, 1}}));
  const IntPoly c{{-1, 1}, {1, 1}};
  EXPECT_EQ(c * c, (IntPoly{{-2, 1}, {0, 2}, {2, 1}}));
}

TEST(LaurentPoly, RingAxioms) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(LaurentPoly, Substitutions) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng);
    EXPECT_EQ(a.substitute_inv_s().substitute_inv_s(), a);
    EXPECT_EQ(a.substitute_neg_s().substitute_neg_s(), a);
    EXPECT_EQ((a * b).substitute_inv_s(), a.substitute_inv_s() * b.substitute_inv_s());
    EXPECT_EQ((a * b).substitute_neg_s(), a.substitute_neg_s() * b.substitute_neg_s());
  }
}

TEST(LaurentPoly, Evaluate) {
  const IntPoly f{{-1, 2}, {0, -3}, {2, 1}};
  EXPECT_DOUBLE_EQ(f.eval(2.0), 2.0 / 2 - 3 + 4);
  const Complex z = to_complex_poly(f).eval(Complex(0, 1));
  EXPECT_NEAR(z.real(), -4, 1e-15);
  EXPECT_NEAR(z.imag(), -2, 1e-15);
}

TEST(LaurentPoly, Derivative) {
  const IntPoly f{{-2, 1}, {0, 7}, {3, 2}};
  EXPECT_EQ(f.derivative(), (IntPoly{{-3, -2}, {2, 6}}));
}

TEST(NormalizeUnit, CanonicalForm) {
  const IntPoly f{{-3, -2}, {-1, 5}};
  const auto n = normalize_unit(f);
  EXPECT_EQ(n.mindeg(), 0);
  EXPECT_GT(n.leading(), 0);
  EXPECT_EQ(n, (IntPoly{{0, 2}, {2, -5}}).scale(BigInt(-1)));
  EXPECT_THROW(normalize_unit(IntPoly{}), Error);
}

TEST(NormalizeUnit, UnitEquivalence) {
  std::mt19937_64 rng(13);
  const IntPoly minus_s3{{3, -1}};
  for (int i = 0; i < 100; ++i) {
    const auto a = random_poly(rng);
    if (a.is_zero()) continue;
    EXPECT_EQ(normalize_unit(normalize_unit(a)), normalize_unit(a));
    EXPECT_TRUE(unit_equivalent(a, a * minus_s3));
    EXPECT_TRUE(unit_equivalent(a, a.shift(-5)));
  }
  EXPECT_FALSE(unit_equivalent(IntPoly{{0, 2}}, IntPoly{{0, 1}}));
}

TEST(DivideExact, RoundTrip) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng);
    if (b.is_zero()) continue;
    EXPECT_EQ(divide_exact(a * b, b), a);
  }
  EXPECT_THROW(divide_exact(IntPoly{{0, 1}, {1, 1}}, IntPoly{{0, 2}, {1, 1}}), Error);
}

TEST(Chebyshev, SmallDegrees) {
  EXPECT_EQ(chebyshev_T(0), IntPoly(BigInt(1)));
  EXPECT_EQ(chebyshev_T(1), (IntPoly{{1, 1}}));
  EXPECT_EQ(chebyshev_T(2), (IntPoly{{0, -1}, {2, 2}}));
  EXPECT_EQ(chebyshev_T(3), (IntPoly{{1, -3}, {3, 4}}));
  EXPECT_EQ(chebyshev_U(2), (IntPoly{{0, -1}, {2, 4}}));
}

TEST(Chebyshev, CosineIdentity) {
  for (int q = 0; q <= 12; ++q) {
    const auto T = chebyshev_T(q);
    for (double th : {0.1, 0.7, 1.3, 2.9}) EXPECT_NEAR(T.eval(std::cos(th)), std::cos(q * th), 1e-11);
  }
}

TEST(Chebyshev, Composition) {
  // T_m(T_n) = T_mn
  const auto T2 = chebyshev_T(2), T3 = chebyshev_T(3);
  IntPoly comp;
  for (const auto& [e, c] : T2.terms()) {
    IntPoly pw(BigInt(1));
    for (int i = 0; i < e; ++i) pw *= T3;
    comp += pw.scale(c);
  }
  EXPECT_EQ(comp, chebyshev_T(6));
}

TEST(Rational, Conversions) {
  const RatPoly half{{0, Rational(1, 2)}, {1, Rational(2)}};
  IntPoly out;
  EXPECT_FALSE(to_integer_poly(half, out));
  EXPECT_TRUE(to_integer_poly(half.scale(Rational(2)), out));
  EXPECT_EQ(out, (IntPoly{{0, 1}, {1, 4}}));
  EXPECT_EQ(to_rational_poly(out), half.scale(Rational(2)));
  const auto c = to_complex_poly(out);
  EXPECT_EQ(c.coeff(1), Complex(4, 0));
}
