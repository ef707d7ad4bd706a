#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csnorm/polynomials.hpp"
#include "csnorm/respq.hpp"

namespace csnorm {

struct RootTolerances {
  double cluster_rel = 1e-7;  // roots closer than this (relative) are one cluster
  double real_imag = 1e-8;    // |Im| or |Re| <= real_imag * (1 + |s|)
  double unit_circle = 1e-8;  // ||s| - 1| <= unit_circle
  double trivial = 1e-8;      // |s -+ 1| <= trivial
  double residual = 1e-10;    // |f(s)| / sum |c_i| |s|^i after polishing
};

struct RootFlags {
  bool trivial_pm1 = false;
  bool real = false;
  bool imaginary = false;
  bool unit_circle = false;
};

struct Root {
  Complex value;
  HpComplex precise;  // polished value
  int multiplicity = 1;
  RootFlags flags;
  double residual = 0;  // backward error at the polished value
};

struct RootSet {
  std::vector<Root> roots;  // sorted by (Re, Im)
  RootTolerances tol;
  int source_mindeg = 0;
  int source_span = 0;
  std::string source;  // free-form label, e.g. "res_{5,1}"
  int iterations = 0;     // extended-precision Aberth sweeps
  int hp_iterations = 0;  // 50-digit Aberth sweeps

  int total_multiplicity() const;
  double max_residual() const;
  // Smallest distance between two distinct clusters; +inf if fewer than two.
  double min_separation() const;
};

// All roots of f (zero roots excluded since s^k is a unit). Aberth-Ehrlich
// in extended precision, clustering, then Newton polishing in 50 digits
// against the exact coefficients.
RootSet find_roots(const IntPoly& f, const RootTolerances& tol = {}, const std::string& label = {});
RootSet find_roots(const CPoly& f, const RootTolerances& tol = {}, const std::string& label = {});

// Drops the clusters at +1 and -1 after checking their multiplicities.
RootSet nontrivial_roots(const RootSet& rs, const TrivialRootOrders& expected);

struct ClassificationCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct ClassificationReport {
  int nontrivial = 0;  // with multiplicity
  int distinct = 0;
  int real = 0;
  int positive_real = 0;
  int imaginary = 0;
  int unit_circle = 0;
  int expected_real = 0;
  int expected_positive_real = 0;
  int expected_imaginary = 0;
  double min_unit_circle_gap = 0;  // min over non-trivial roots of ||s| - 1|
  std::vector<ClassificationCheck> checks;
  bool ok() const;
};

// Counts real, imaginary and unit-circle roots among the non-trivial ones
// and compares with the counts expected for (p, q). Throws LemmaViolation if
// any check fails.
ClassificationReport classify(const RootSet& rs, std::int64_t p, std::int64_t q);
// Same, without throwing.
ClassificationReport classify_report(const RootSet& rs, std::int64_t p, std::int64_t q);

// Polishes an approximate root of f with Newton's method in 50 digits.
HpComplex polish_root(const IntPoly& f, const HpComplex& z, int multiplicity = 1);

}  // namespace csnorm
