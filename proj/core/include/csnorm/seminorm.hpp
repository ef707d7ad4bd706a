#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "csnorm/polynomials.hpp"
#include "csnorm/slopes.hpp"
#include "csnorm/types.hpp"

namespace csnorm {

// ||gamma|| = sum_j a_j * distance(gamma, beta_j) for p odd.
struct SeminormProfile {
  std::int64_t p = 0;
  std::int64_t q = 1;
  RangeTag range = RangeTag::NegInf0;
  std::array<Slope, 3> beta{Slope::infinity(), Slope::infinity(), Slope::infinity()};
  std::array<std::int64_t, 3> a{};
  std::int64_t s_min = 0;
};

// Validation for non-coprime or q <= 0, ScopeError for p even or p/q = 3.
SeminormProfile seminorm_profile(std::int64_t p, std::int64_t q);
std::int64_t evaluate_norm(const SeminormProfile& profile, const Slope& gamma);

// True when W(p/q, sigma) is not small Seifert: p/q = 6, 4, 3 for sigma = 1, 2, 3.
bool seifert_slope_excluded(std::int64_t p, std::int64_t q, int sigma);
// s + 2|p-6q| - 2, s + 3|p-4q| - 3, s + 4|p-3q| - 4.
std::int64_t seifert_norm(std::int64_t p, std::int64_t q, int sigma);
std::array<std::int64_t, 3> seifert_norms(std::int64_t p, std::int64_t q);

// PSL2(C) characters of the Seifert filling sigma, one row per gcd(6,p)
// (sigma = 1, 3) or gcd(4,p) (sigma = 2). Defined for every p.
struct PslCounts {
  int sigma = 1;
  std::int64_t key_gcd = 1;
  std::int64_t total = 0;
  std::int64_t irreducible = 0;  // includes the dihedral ones
  std::int64_t dihedral = 0;
  std::int64_t reducible = 0;
  std::int64_t nonabelian_reducible = 0;
};
PslCounts psl_character_counts(std::int64_t p, std::int64_t q, int sigma);

// Non-abelian SL2(C) characters for p odd. Non-dihedral characters lift
// twice, dihedral ones once.
struct SeifertCharacterCounts {
  PslCounts psl;
  std::int64_t irreducible_nondihedral = 0;
  std::int64_t dihedral = 0;
  std::int64_t nonabelian_reducible = 0;
  std::int64_t A = 0;               // sum of the three above
  std::int64_t A_closed_form = 0;   // |p-6q|-1, (3/2)(|p-4q|-1), 2(|p-3q|-1)
  std::int64_t norm_from_A = 0;     // s + 2A
};
// Throws CountMismatch unless A equals its closed form and s + 2A equals
// seifert_norm.
SeifertCharacterCounts seifert_character_counts(std::int64_t p, std::int64_t q, int sigma);

// Twisted Alexander polynomial in t of the non-abelian reducible characters:
// t - 1 when s^2 != 1, q t^2 + (p - 2q) t + q when s^2 = 1.
IntPoly twisted_alexander(std::int64_t p, std::int64_t q, bool s_squared_is_one);

// u^2 = (-p + 2q +- sqrt(p(p - 4q))) / (2q), checked against the twisted
// Alexander polynomial. DegenerateCase for p = 0.
std::pair<Complex, Complex> nonabelian_reducible_u2(std::int64_t p, std::int64_t q);

// The linear system from the Seifert slopes 1, 2, 3 and the meridian, in the
// unknowns (a1, a2, a3, s), solved exactly.
struct LinearSystemSolution {
  std::int64_t p = 0;
  std::int64_t q = 1;
  RangeTag range = RangeTag::NegInf0;
  std::array<std::array<Rational, 4>, 4> matrix;
  std::array<Rational, 4> rhs;
  int rank = 0;
  std::array<Rational, 4> x;  // a1, a2, a3, s

  // Rank 3 only: s = bound - z, with bound the p-rep class count.
  bool used_bound = false;
  std::int64_t bound = 0;
  std::array<Rational, 4> z_direction;     // d(a1, a2, a3, s) / dz
  std::int64_t z_modulus = 0;              // z must be a multiple of this for even integer a_j
  std::vector<std::int64_t> admissible_z;  // 0 <= z <= bound with a_j, s even and >= 0
  // When z = 0 is not the only admissible value (p/q > 6 and 2 < p/q < 3),
  // it is taken from the system of (-p + 4q, q), whose res is unit-equivalent.
  bool reflected = false;
  std::int64_t reflected_p = 0;
  std::vector<std::string> ledger;
};

// SystemInconsistent if the equations contradict each other, RankUnexpected
// if the rank differs from 4 on (3,4) and (4,6) or from 3 elsewhere,
// VerificationFailure if z = 0 cannot be concluded or the result differs
// from seminorm_profile.
LinearSystemSolution solve_linear_system(std::int64_t p, std::int64_t q);

struct DetectionReport {
  std::array<bool, 3> detected{};   // a_j > 0
  std::array<bool, 3> predicted{};  // beta_1 unless p = 2q +- 1; beta_2 always; beta_3 iff q > 1
  bool consistent() const { return detected == predicted; }
};
DetectionReport detected_slopes(std::int64_t p, std::int64_t q);

}  // namespace csnorm
