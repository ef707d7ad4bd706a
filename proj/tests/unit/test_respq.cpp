#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "csnorm/errors.hpp"
#include "csnorm/respq.hpp"

using namespace csnorm;

namespace {

IntPoly dense(std::initializer_list<int> c) {
  IntPoly f;
  int e = 0;
  for (int x : c) f.add_term(e++, BigInt(x));
  return f;
}

}  // namespace

TEST(Sylvester, LinearFactorSubstitutes) {
  // res_t(t - s, t^2 - s^3) = +-(s^2 - s^3)
  BivarPoly f, g;
  f.add_term(0, 1, 1);
  f.add_term(1, 0, -1);
  g.add_term(0, 2, 1);
  g.add_term(3, 0, -1);
  EXPECT_TRUE(unit_equivalent(sylvester_resultant_t(f, g), dense({0, 0, 1, -1})));
}

TEST(Sylvester, CommonFactorGivesZero) {
  BivarPoly f, g;
  f.add_term(0, 1, 1);
  f.add_term(1, 0, -1);  // t - s
  g.add_term(0, 2, 1);
  g.add_term(2, 0, -1);  // t^2 - s^2
  EXPECT_TRUE(sylvester_resultant_t(f, g).is_zero());
}

TEST(K2, Coefficients) {
  const auto k2 = k2_poly();
  EXPECT_EQ(k2.t_degree(), 2);
  EXPECT_EQ(k2.t_coeff(2), (IntPoly{{4, 1}}));
  EXPECT_EQ(k2.t_coeff(1), (IntPoly{{0, -1}, {2, 4}, {4, -1}}));
  EXPECT_EQ(k2.t_coeff(0), IntPoly(BigInt(1)));
}

// Frozen from an independent computer-algebra resultant of k1, k2,
// normalized to mindeg 0 and positive leading coefficient.
TEST(Res, FrozenOracleValues) {
  EXPECT_EQ(build_res(1, 1).normalized(), dense({1, -1, -4, -1, 1}));
  EXPECT_EQ(build_res(-1, 1).normalized(), dense({1, -1, 0, 4, 0, -1, 1}));
  EXPECT_EQ(build_res(2, 1).normalized(), dense({1, 0, -6, 0, 1}));
  EXPECT_EQ(build_res(5, 1).normalized(), dense({1, -1, 0, 4, 0, -1, 1}));
  EXPECT_EQ(build_res(3, 2).normalized(), dense({1, 0, -8, -1, 16, -1, -8, 0, 1}));
  EXPECT_EQ(build_res(-3, 2).normalized(), dense({1, 0, 0, -1, 0, 8, 0, -16, 0, 8, 0, -1, 0, 0, 1}));
  EXPECT_EQ(build_res(7, 2).normalized(), dense({1, -1, -8, 0, 16, 0, -8, -1, 1}));
}

TEST(Res, ConstantOnDegenerateSlopes) {
  for (auto [p, q] : {std::pair<int, int>{0, 1}, {4, 1}}) {
    const auto r = build_res(p, q);
    EXPECT_TRUE(r.is_constant());
    EXPECT_EQ(r.normalized(), IntPoly(BigInt(4)));
  }
}

TEST(Res, FormalQZeroOracle) {
  // (s^p - 1)^2
  EXPECT_TRUE(unit_equivalent(res_oracle(1, 0), dense({1, -2, 1})));
  EXPECT_TRUE(unit_equivalent(res_oracle(-1, 0), dense({1, -2, 1})));
}

TEST(Res, YConventionSelected) {
  const auto& y = selected_y_convention();
  EXPECT_EQ(y.kind, YConvention::HalfFourMinus);
  EXPECT_FALSE(y.seeds.empty());
  for (auto [p, q] : {std::pair<int, int>{1, 1}, {5, 2}}) {
    EXPECT_TRUE(unit_equivalent(res_closed_form(p, q, YConvention::HalfFourMinus), res_oracle(p, q)));
    bool differs = true;
    try {
      differs = !unit_equivalent(res_closed_form(p, q, YConvention::TwoMinus), res_oracle(p, q));
    } catch (const Error&) {
    }
    EXPECT_TRUE(differs);
  }
}

TEST(Res, RejectsBadInput) {
  EXPECT_THROW(build_res(2, 4), Error);
  EXPECT_THROW(build_res(3, 0), Error);
  EXPECT_THROW(build_res(1, -1), Error);
}

TEST(Res, ClosedFormMatchesResultantOnRandomPairs) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> dp(-40, 40), dq(1, 12);
  int checked = 0;
  while (checked < 40) {
    const int p = dp(rng), q = dq(rng);
    if (std::gcd(p, q) != 1) continue;
    ++checked;
    EXPECT_TRUE(unit_equivalent(res_poly(p, q), res_oracle(p, q))) << p << "/" << q;
  }
}

TEST(Res, SpanFormula) {
  for (std::int64_t q = 1; q <= 8; ++q)
    for (std::int64_t p = -25; p <= 25; ++p) {
      if (std::gcd(p, q) != 1 || p == 0 || p == 4 * q) continue;
      EXPECT_EQ(res_poly(p, q).span(), res_span_formula(p, q)) << p << "/" << q;
    }
}

TEST(Res, TrivialRootOrders) {
  EXPECT_EQ(expected_trivial_root_orders(1, 2), (TrivialRootOrders{2, 0}));
  EXPECT_EQ(expected_trivial_root_orders(5, 1), (TrivialRootOrders{0, 2}));
  EXPECT_EQ(expected_trivial_root_orders(2, 1), (TrivialRootOrders{0, 0}));
  for (std::int64_t q = 1; q <= 8; ++q)
    for (std::int64_t p = -25; p <= 25; ++p) {
      if (std::gcd(p, q) != 1 || p == 0 || p == 4 * q) continue;
      EXPECT_EQ(trivial_root_orders(res_poly(p, q)), expected_trivial_root_orders(p, q)) << p << "/" << q;
    }
}

TEST(Res, Symmetries) {
  for (std::int64_t q = 1; q <= 6; ++q)
    for (std::int64_t p = -15; p <= 15; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const auto res = build_res(p, q);
      const auto sym = check_symmetries(res);
      EXPECT_TRUE(sym.inversion);
      EXPECT_TRUE(sym.reflection);
      EXPECT_TRUE(sym.real_coefficients);
      EXPECT_EQ(sym.negation_expected, p % 2 == 0);
      if (p % 2 == 0) EXPECT_TRUE(sym.negation);
    }
}

TEST(Res, ReflectionPairs) {
  EXPECT_TRUE(unit_equivalent(res_poly(-1, 1), res_poly(5, 1)));
  EXPECT_TRUE(unit_equivalent(res_poly(1, 1), res_poly(3, 1)));
  EXPECT_TRUE(unit_equivalent(res_poly(-7, 3), res_poly(19, 3)));
}

TEST(Res, RootBound) {
  EXPECT_EQ(nontrivial_root_bound(-1, 1), 4);
  EXPECT_EQ(nontrivial_root_bound(1, 1), 2);
  EXPECT_EQ(nontrivial_root_bound(5, 1), 4);
  EXPECT_EQ(nontrivial_root_bound(65, 16), 64);
  EXPECT_EQ(nontrivial_root_bound(2, 1), 4);
  EXPECT_EQ(nontrivial_root_bound(-2, 3), 16);
  EXPECT_EQ(nontrivial_root_bound(6, 1), 8);
}
