#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csnorm/polynomials.hpp"
#include "csnorm/types.hpp"

namespace csnorm {

template <class T>
struct Mat2 {
  T a{1}, b{0}, c{0}, d{1};

  static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }
  T det() const { return a * d - b * c; }
  T trace() const { return a + d; }
  // Inverse of a determinant-one matrix.
  Mat2 sl2_inverse() const { return {d, -b, -c, a}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
  friend Mat2 operator-(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }

  Mat2 pow(std::int64_t e) const {
    Mat2 base = e < 0 ? sl2_inverse() : *this;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
    Mat2 r = identity();
    while (n > 0) {
      if (n & 1) r = r * base;
      base = base * base;
      n >>= 1;
    }
    return r;
  }
};

template <class T>
double frobenius(const Mat2<T>& m) {
  using std::abs;
  auto sq = [](const auto& x) { return static_cast<double>(abs(x)) * static_cast<double>(abs(x)); };
  return std::sqrt(sq(m.a) + sq(m.b) + sq(m.c) + sq(m.d));
}

using CMat2 = Mat2<Complex>;
using HpMat2 = Mat2<HpComplex>;

inline CMat2 to_double(const HpMat2& m) { return {to_double(m.a), to_double(m.b), to_double(m.c), to_double(m.d)}; }

enum class Generator { Mu0, Mu1 };

struct Letter {
  Generator gen;
  int exp;
};

// Word in mu0, mu1. Adjacent letters with the same generator are merged and
// zero exponents dropped on construction.
class GroupWord {
 public:
  GroupWord() = default;
  GroupWord(std::initializer_list<Letter> letters);
  const std::vector<Letter>& letters() const { return letters_; }
  std::string str() const;

  static GroupWord relator_lhs();    // w1
  static GroupWord relator_rhs();    // w2
  static GroupWord lambda0();        // longitude of the filled component
  static GroupWord lambda0_short();  // equivalent spelling, using that lambda0 commutes with mu0
  static GroupWord lambda1();

 private:
  void push(Letter l);
  std::vector<Letter> letters_;
};

template <class T>
Mat2<T> evaluate_word(const GroupWord& w, const Mat2<T>& m0, const Mat2<T>& m1) {
  Mat2<T> r = Mat2<T>::identity();
  for (const auto& l : w.letters()) r = r * (l.gen == Generator::Mu0 ? m0 : m1).pow(l.exp);
  return r;
}

// Normal form rho(mu0) = [[s, c], [0, 1/s]], rho(mu1) = [[u, 0], [1, 1/u]].
template <class T>
Mat2<T> normal_mu0(const T& s, const T& c) {
  return {s, c, T(0), T(1) / s};
}
template <class T>
Mat2<T> normal_mu1(const T& u) {
  return {u, T(0), T(1), T(1) / u};
}

// Defining polynomial of the normal-form slice; rho(w1) - rho(w2) is a
// multiple of it.
Complex slice_f(const Complex& s, const Complex& u, const Complex& c);
HpComplex slice_f(const HpComplex& s, const HpComplex& u, const HpComplex& c);

template <class T>
struct EigenTupleT {
  T s, t, u, v;  // upper-left entries of mu0, lambda0, mu1, lambda1
};
using EigenTuple = EigenTupleT<Complex>;

template <class T>
struct EigenPolysT {
  T h1, h2, h3, g1, g2, g3;
};
using EigenPolys = EigenPolysT<Complex>;

EigenPolys eigenvariety_polys(const EigenTuple& e);
EigenPolysT<HpComplex> eigenvariety_polys(const EigenTupleT<HpComplex>& e);

// The root of k2(s, .) that also satisfies s^p t^q = 1 within k1_tol.
// Coincident roots of k2 are not ambiguous.
Complex solve_t(const Complex& s, std::int64_t p, std::int64_t q, double k1_tol = 1e-7);
HpComplex solve_t(const HpComplex& s, std::int64_t p, std::int64_t q, double k1_tol = 1e-7);

template <class T>
struct SliceParams {
  T s, u, c;
};

// (s, t, u, v) -> (s, u, c); SingularPoint for s = +-1 or s^2 = u^2.
SliceParams<Complex> inverse_eigenvalue_map(const EigenTuple& e);
SliceParams<HpComplex> inverse_eigenvalue_map(const EigenTupleT<HpComplex>& e);

enum class PRepKind { Reducible, Irreducible };

struct RepTolerances {
  double det = 1e-10;
  double relator = 1e-8;
  double filling = 1e-8;
  double trace = 1e-9;
  double eigen_polys = 1e-8;
  double slice_f = 1e-9;
  double lambda0_spellings = 1e-10;
};

struct PRepResiduals {
  double det_mu0 = 0;
  double det_mu1 = 0;
  double relator = 0;            // |rho(w1) - rho(w2)|
  double filling = 0;            // |rho(mu0)^p rho(lambda0)^q - I|
  double trace_mu1 = 0;          // |tr rho(mu1) - 2u|
  double trace_lambda1 = 0;      // |tr rho(lambda1) + 2|, irreducible only
  double lambda0_spellings = 0;  // both spellings of lambda0
  double lambda0_entry = 0;      // |rho(lambda0)_11 - t|
  double lambda0_identity = 0;   // |rho(lambda0) - I|, reducible only
  double slice_f = 0;            // |f(s, u, c)|
  double eigen_polys = 0;        // max |h_i| (irreducible) or max |g_i| (reducible)
};

struct PRep {
  PRepKind kind = PRepKind::Irreducible;
  int sign_u = 1;
  std::int64_t p = 0;
  std::int64_t q = 0;
  EigenTuple eigen{};
  Complex c{};
  CMat2 mu0, mu1;
  Complex trace_mu0{}, trace_lambda0{}, trace_mu0mu1{};
  PRepResiduals residuals;
};

// Builds a p-rep in normal form from an eigenvalue s and u = sign_u, then
// checks it. s is re-polished at working_digits() precision against res_{p,q} (irreducible)
// or s^p - 1 (reducible) before the matrices are built. The kind is
// inferred from which of the two s is closer to being a root of when not
// given.
PRep reconstruct_prep(const Complex& s, int sign_u, std::int64_t p, std::int64_t q,
                      std::optional<PRepKind> kind = std::nullopt, const RepTolerances& tol = {});

// Decimal digits used for the matrices at eigenvalue s: 50, 120, 250 or 500.
int working_digits(const Complex& s, std::int64_t p);

// Same construction without the final check; residuals are only reported.
PRep build_prep(const Complex& s, int sign_u, std::int64_t p, std::int64_t q, PRepKind kind);

// Names the residuals of rep that exceed tol; empty if none do.
std::vector<std::string> prep_failures(const PRep& rep, const RepTolerances& tol = {});

// Representations of the unfilled link group at s, u in {+-1}:
// rho(mu0) = [[s, -su + i eps], [0, s]], rho(mu1) = [[u, 0], [1, u]].
struct DiscreteFaithful {
  int s = 1, u = 1, eps = 1;
  CMat2 mu0, mu1, lambda0, lambda1;
  double relator = 0;
};
DiscreteFaithful discrete_faithful(int s, int u, int eps);
// |rho(mu0)^p rho(lambda0)^q - I| at a discrete faithful point.
double discrete_faithful_filling_residual(const DiscreteFaithful& df, std::int64_t p, std::int64_t q);

// Slice with rho(mu0) = diag(s, 1/s), rho(mu1) = sign [[a, -(a-1)^2], [1, 2-a]].
struct PartialDiagonalResiduals {
  Complex r1_factored;          // (a-1) r1_deflated
  Complex r1_deflated;          // -(s^2-1)^2 a^2 + (s^2-1)(s^2-3) a - 2
  Complex r2;                   // s^p (a/(2-a))^q - 1
  Complex t;                    // a / (2 - a)
  double relator = 0;           // |rho(w1) - rho(w2)|
  double lambda0_offdiag = 0;   // |rho(lambda0)_12| + |rho(lambda0)_21|
  double lambda0_entry = 0;     // |rho(lambda0)_11 - t|
};
PartialDiagonalResiduals partially_diagonal_check(const Complex& s, const Complex& a, std::int64_t p,
                                                  std::int64_t q, int sign = 1);
// At a = 2 the fields t, r2 and lambda0_entry are NaN.
// a = 2t / (1 + t), inverting t = a / (2 - a).
Complex partial_diagonal_a(const Complex& t);

struct PRepCounts {
  std::int64_t reducible = 0;
  std::int64_t irreducible = 0;
  std::int64_t total = 0;
  std::int64_t expected_total = 0;  // closed-form class count
  bool simple = true;               // every non-trivial root has multiplicity 1
};

// Closed-form number of conjugacy classes of p-reps, p/q not in {0, 4}.
std::int64_t prep_class_bound(std::int64_t p, std::int64_t q);
// |p| - 1 for p odd, |p| - 2 for p even.
std::int64_t reducible_prep_count(std::int64_t p);

// Reducible classes from the formula, irreducible classes from the distinct
// non-trivial roots of res_{p,q}. Throws CountMismatch if the total differs
// from prep_class_bound.
PRepCounts count_prep_classes(std::int64_t p, std::int64_t q);
// Same, reporting instead of throwing.
PRepCounts count_prep_classes_report(std::int64_t p, std::int64_t q);

}  // namespace csnorm
