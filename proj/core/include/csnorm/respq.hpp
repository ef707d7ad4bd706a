#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "csnorm/polynomials.hpp"

namespace csnorm {

// Substitution y(s) used inside the Chebyshev term of the closed form.
enum class YConvention {
  HalfFourMinus,  // y = (-s^2 + 4 - s^-2) / 2
  TwoMinus,       // y = -s^2 + 2 - s^-2
};

struct YConventionInfo {
  YConvention kind;
  std::string formula;
  // (p,q) pairs on which the closed form was checked against the resultant
  std::vector<std::pair<std::int64_t, std::int64_t>> seeds;
  // conventions that failed the check, with a short reason
  std::vector<std::string> rejected;
};

std::string y_formula(YConvention c);

// The convention that reproduces the Sylvester resultant on a fixed seed set.
// Computed once and cached.
const YConventionInfo& selected_y_convention();

BivarPoly k1_poly(std::int64_t p, std::int64_t q);  // s^p t^q - 1
BivarPoly k2_poly();                                // s^4 t^2 + (-s^4 + 4 s^2 - 1) t + 1

// s^(p-2q) + (-1)^(q+1) 2 T_q(y(s)) + s^(-p+2q); throws
// ResultantIdentityMismatch if the result is not integral.
IntPoly res_closed_form(std::int64_t p, std::int64_t q, YConvention y);
// Sylvester resultant of k1, k2 in t. For the formal q = 0 case this is
// (s^p - 1)^2.
IntPoly res_oracle(std::int64_t p, std::int64_t q);

struct ResPoly {
  std::int64_t p = 0;
  std::int64_t q = 0;
  IntPoly closed_form;
  IntPoly oracle_form;
  YConventionInfo y_convention;

  IntPoly normalized() const { return normalize_unit(closed_form); }
  int span() const { return closed_form.span(); }
  // True for p/q in {0, 4}: a nonzero constant, so no roots at all.
  bool is_constant() const { return closed_form.span() == 0; }
};

// Builds both forms and checks they agree up to a unit.
ResPoly build_res(std::int64_t p, std::int64_t q);
// Closed form only, with the cached convention; no resultant.
IntPoly res_poly(std::int64_t p, std::int64_t q);

// 2 max(|p - 2q|, 2q)
std::int64_t res_span_formula(std::int64_t p, std::int64_t q);

struct TrivialRootOrders {
  int at_plus1 = 0;
  int at_minus1 = 0;
  friend bool operator==(const TrivialRootOrders&, const TrivialRootOrders&) = default;
};

// Orders of vanishing at +1 and -1 from exact derivatives.
TrivialRootOrders trivial_root_orders(const ResPoly& r);
TrivialRootOrders trivial_root_orders(const IntPoly& f);
// (2,0) for q even, (0,2) for p and q odd, (0,0) for p even.
TrivialRootOrders expected_trivial_root_orders(std::int64_t p, std::int64_t q);

struct SymmetryReport {
  bool inversion = false;          // res(1/s) == res(s) up to units
  bool negation = false;           // res(-s) == res(s) up to units
  bool negation_expected = false;  // p even
  bool reflection = false;         // res_{p,q} == res_{-p+4q,q} up to units
  bool real_coefficients = true;   // integral coefficients; roots closed under conjugation
};

// Throws SymmetryViolation naming the first failing identity.
SymmetryReport check_symmetries(const ResPoly& r);

// Upper bound on the number of distinct roots outside {0, +1, -1}.
std::int64_t nontrivial_root_bound(std::int64_t p, std::int64_t q);

}  // namespace csnorm
