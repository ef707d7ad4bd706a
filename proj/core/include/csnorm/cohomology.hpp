#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "csnorm/polynomials.hpp"
#include "csnorm/types.hpp"

namespace csnorm {

// Dense complex matrix, row-major, tagged with what it presents.
struct NumMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Complex> data;
  std::string source;

  NumMatrix() = default;
  NumMatrix(int r, int c, std::string src) : rows(r), cols(c), data(static_cast<std::size_t>(r * c)), source(std::move(src)) {}
  Complex& operator()(int r, int c) { return data[static_cast<std::size_t>(r * cols + c)]; }
  const Complex& operator()(int r, int c) const { return data[static_cast<std::size_t>(r * cols + c)]; }
};

// Singular values, largest first.
std::vector<double> singular_values(const NumMatrix& m);
// Number of singular values above rel_threshold * largest.
int numeric_rank(const NumMatrix& m, double rel_threshold = 1e-8);

// Coboundaries u_{e1}, u_{e2}, u_{e3} at the partially diagonal p-rep with
// parameters (s, a), as rows in C^6 = (x1, x2, x3, y1, y2, y3).
NumMatrix coboundary_matrix(const Complex& s, const Complex& a);

// Fourth row of the reducible presentation matrix, from the relation of the
// unfilled group. Derived uses the cocycle computation at a = 1:
// (0, -2(s^2-1), 0, -2(s^2-1)^2, s^-2 (s^2-1)^2 (s^4-s^2-1), 0).
// Scaled carries an extra s^-2 in the fourth entry.
enum class RelationRow { Derived, Scaled };

// 5x6 presentation of H^1 at a reducible p-rep (s^p = 1, s != +-1). Throws
// RankMismatch unless the numeric rank is 5.
NumMatrix reducible_presentation_matrix(const Complex& s, std::int64_t p, std::int64_t q,
                                        RelationRow row = RelationRow::Derived);
// Same matrix without the rank assertion.
NumMatrix reducible_presentation_matrix_unchecked(const Complex& s, std::int64_t p, std::int64_t q,
                                                  RelationRow row = RelationRow::Derived);

struct DetPReport {
  Complex numeric;             // det of P with the derived relation row
  Complex numeric_scaled_row;  // det of P using the Scaled relation row
  Complex closed_form;         // (4p/q) s^-4 (s^2-1)^2 (s^4-2s^2+2)
  Complex unit;                // -s^4: P fixes its rows only up to scaling
  double rel_error = 0;        // |numeric - unit * closed_form| relative to |unit * closed_form|
  double rel_error_scaled_row = 0;
};

// 6x6 matrix P: the reducible presentation plus the row (0,0,0,0,1,0) of
// the trace derivative. Throws ClosedFormMismatch if rel_error > tol.
NumMatrix matrix_P_reducible(const Complex& s, std::int64_t p, std::int64_t q,
                             RelationRow row = RelationRow::Derived);
DetPReport det_P_reducible(const Complex& s, std::int64_t p, std::int64_t q, double tol = 1e-8);
Complex det(const NumMatrix& m);

// p(p-4q) s^4 + (-6p^2 + 24pq - 32q^2) s^2 + p(p-4q)
IntPoly d1_poly(std::int64_t p, std::int64_t q);
// The four roots from the closed form, checked against d1_poly. DegenerateCase
// when p(p-4q) = 0.
std::array<Complex, 4> d1_roots(std::int64_t p, std::int64_t q);

struct D1Classification {
  std::array<Complex, 4> roots;
  int real = 0;
  int imaginary = 0;
  bool expect_real = false;       // p > 4q or p < 0
  bool expect_imaginary = false;  // 0 < p < 4q
  double max_residual = 0;        // |d1(root)| / sum |c_i||root|^i
  bool ok() const { return expect_real ? real == 4 : imaginary == 4; }
};
D1Classification d1_classify(std::int64_t p, std::int64_t q, double tol = 1e-9);

// Degree-40 polynomial from the Groebner basis computation, entered coefficient by coefficient.
const IntPoly& d2_poly();

struct D2Check {
  double min_distance = 0;  // between roots of d2 and non-trivial roots of res_{p,q}
  Complex closest_d2_root;
  Complex closest_res_root;
  double d1_min_distance = 0;  // same for the roots of d1
};
// Throws CommonRootSuspected if either distance is <= threshold.
D2Check d2_check(std::int64_t p, std::int64_t q, double threshold = 1e-3);

}  // namespace csnorm
