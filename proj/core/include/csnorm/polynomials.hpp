#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "csnorm/errors.hpp"
#include "csnorm/types.hpp"

namespace csnorm {

// Laurent polynomial in one variable. Stored densely from mindeg upward with
// both ends nonzero; the empty vector is the zero polynomial.
template <class C>
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const C& c) {
    if (c != C(0)) coef_.push_back(c);
  }
  LaurentPoly(const std::map<int, C>& terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }
  LaurentPoly(std::initializer_list<std::pair<int, C>> terms) {
    for (const auto& [e, c] : terms) add_term(e, c);
  }
  static LaurentPoly monomial(const C& c, int e) {
    LaurentPoly r;
    r.add_term(e, c);
    return r;
  }

  bool is_zero() const { return coef_.empty(); }
  int mindeg() const { return lo_; }
  int maxdeg() const { return lo_ + static_cast<int>(coef_.size()) - 1; }
  int span() const { return is_zero() ? 0 : maxdeg() - mindeg(); }
  std::size_t size() const { return coef_.size(); }

  C coeff(int e) const {
    if (is_zero() || e < lo_ || e > maxdeg()) return C(0);
    return coef_[static_cast<std::size_t>(e - lo_)];
  }
  const C& leading() const { return coef_.back(); }
  const C& trailing() const { return coef_.front(); }

  std::map<int, C> terms() const {
    std::map<int, C> m;
    for (std::size_t i = 0; i < coef_.size(); ++i)
      if (coef_[i] != C(0)) m.emplace(lo_ + static_cast<int>(i), coef_[i]);
    return m;
  }

  void add_term(int e, const C& c) {
    if (c == C(0)) return;
    if (is_zero()) {
      lo_ = e;
      coef_.assign(1, c);
      return;
    }
    if (e < lo_) {
      coef_.insert(coef_.begin(), static_cast<std::size_t>(lo_ - e), C(0));
      lo_ = e;
    } else if (e > maxdeg()) {
      coef_.resize(static_cast<std::size_t>(e - lo_ + 1), C(0));
    }
    coef_[static_cast<std::size_t>(e - lo_)] += c;
    trim();
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int lo = std::min(lo_, o.lo_), hi = std::max(maxdeg(), o.maxdeg());
    std::vector<C> v(static_cast<std::size_t>(hi - lo + 1), C(0));
    for (std::size_t i = 0; i < coef_.size(); ++i) v[i + static_cast<std::size_t>(lo_ - lo)] = coef_[i];
    for (std::size_t i = 0; i < o.coef_.size(); ++i)
      v[i + static_cast<std::size_t>(o.lo_ - lo)] += o.coef_[i];
    coef_ = std::move(v);
    lo_ = lo;
    trim();
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
  LaurentPoly operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coef_) c = -c;
    return r;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.lo_ = a.lo_ + b.lo_;
    r.coef_.assign(a.coef_.size() + b.coef_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coef_.size(); ++i) {
      if (a.coef_[i] == C(0)) continue;
      for (std::size_t j = 0; j < b.coef_.size(); ++j)
        if (b.coef_[j] != C(0)) r.coef_[i + j] += a.coef_[i] * b.coef_[j];
    }
    r.trim();
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.lo_ == b.lo_ && a.coef_ == b.coef_;
  }

  LaurentPoly scale(const C& k) const {
    if (k == C(0)) return {};
    LaurentPoly r = *this;
    for (auto& c : r.coef_) c *= k;
    return r;
  }
  // Multiply by s^k.
  LaurentPoly shift(int k) const {
    LaurentPoly r = *this;
    if (!r.is_zero()) r.lo_ += k;
    return r;
  }
  // e -> -e
  LaurentPoly substitute_inv_s() const {
    LaurentPoly r;
    if (is_zero()) return r;
    r.coef_.assign(coef_.rbegin(), coef_.rend());
    r.lo_ = -maxdeg();
    return r;
  }
  // coefficient at e picks up (-1)^e
  LaurentPoly substitute_neg_s() const {
    LaurentPoly r = *this;
    for (std::size_t i = 0; i < r.coef_.size(); ++i)
      if ((lo_ + static_cast<int>(i)) % 2 != 0) r.coef_[i] = -r.coef_[i];
    return r;
  }
  LaurentPoly derivative() const {
    LaurentPoly r;
    for (std::size_t i = 0; i < coef_.size(); ++i) {
      const int e = lo_ + static_cast<int>(i);
      if (e != 0) r.add_term(e - 1, coef_[i] * C(e));
    }
    return r;
  }

  // Horner evaluation in any ring V that C converts into.
  template <class V>
  V eval(const V& s) const {
    V acc(0);
    if (is_zero()) return acc;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * s + V(*it);
    return lo_ >= 0 ? acc * ipow(s, lo_) : acc / ipow(s, -lo_);
  }

  template <class D, class F>
  LaurentPoly<D> map_coeffs(F&& f) const {
    std::map<int, D> m;
    for (std::size_t i = 0; i < coef_.size(); ++i) m[lo_ + static_cast<int>(i)] = f(coef_[i]);
    return LaurentPoly<D>(m);
  }

  // Dense coefficient vector from mindeg upward.
  const std::vector<C>& dense() const { return coef_; }

  template <class V>
  static V ipow(V base, int e) {
    V r(1);
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

 private:
  void trim() {
    std::size_t a = 0;
    while (a < coef_.size() && coef_[a] == C(0)) ++a;
    if (a == coef_.size()) {
      coef_.clear();
      lo_ = 0;
      return;
    }
    std::size_t b = coef_.size();
    while (coef_[b - 1] == C(0)) --b;
    coef_ = std::vector<C>(coef_.begin() + static_cast<std::ptrdiff_t>(a),
                           coef_.begin() + static_cast<std::ptrdiff_t>(b));
    lo_ += static_cast<int>(a);
  }

  int lo_ = 0;
  std::vector<C> coef_;
};

using IntPoly = LaurentPoly<BigInt>;
using RatPoly = LaurentPoly<Rational>;
using CPoly = LaurentPoly<Complex>;

template <class C>
LaurentPoly<C> add(const LaurentPoly<C>& a, const LaurentPoly<C>& b) { return a + b; }
template <class C>
LaurentPoly<C> mul(const LaurentPoly<C>& a, const LaurentPoly<C>& b) { return a * b; }
template <class C>
LaurentPoly<C> scale(const LaurentPoly<C>& a, const C& k) { return a.scale(k); }
template <class C>
LaurentPoly<C> substitute_inv_s(const LaurentPoly<C>& a) { return a.substitute_inv_s(); }
template <class C>
LaurentPoly<C> substitute_neg_s(const LaurentPoly<C>& a) { return a.substitute_neg_s(); }

// Canonical representative under multiplication by units +-s^k: mindeg 0 and
// positive leading coefficient. Defined for ordered coefficient rings.
template <class C>
LaurentPoly<C> normalize_unit(const LaurentPoly<C>& f) {
  if (f.is_zero()) throw Error(ErrorKind::DegenerateInput, "normalize_unit of the zero polynomial");
  LaurentPoly<C> r = f.shift(-f.mindeg());
  if (r.leading() < C(0)) r = -r;
  return r;
}

// f == g up to a unit +-s^k
template <class C>
bool unit_equivalent(const LaurentPoly<C>& f, const LaurentPoly<C>& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return normalize_unit(f) == normalize_unit(g);
}

// Exact quotient a / b in Z[s, 1/s]; throws DegenerateInput if b does not
// divide a.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

// Converts when every coefficient is an integer; returns false otherwise.
bool to_integer_poly(const RatPoly& f, IntPoly& out);
RatPoly to_rational_poly(const IntPoly& f);
CPoly to_complex_poly(const IntPoly& f);

IntPoly chebyshev_T(int q);
IntPoly chebyshev_U(int q);

// Integer polynomial in s and t, keyed by (s exponent, t exponent); t
// exponents are non-negative.
class BivarPoly {
 public:
  BivarPoly() = default;
  void add_term(int es, int et, const BigInt& c);
  int t_degree() const;  // -1 for the zero polynomial
  IntPoly t_coeff(int k) const;
  const std::map<std::pair<int, int>, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

 private:
  std::map<std::pair<int, int>, BigInt> terms_;
};

// Determinant of the Sylvester matrix of f and g viewed as polynomials in t
// with coefficients in Z[s, 1/s].
IntPoly sylvester_resultant_t(const BivarPoly& f, const BivarPoly& g);

// Determinant of a square matrix over Z[s, 1/s]; fraction-free elimination,
// or cofactor expansion when n <= cofactor_max.
IntPoly determinant(std::vector<std::vector<IntPoly>> m, int cofactor_max = 5);
IntPoly determinant_bareiss(std::vector<std::vector<IntPoly>> m);
IntPoly determinant_cofactor(const std::vector<std::vector<IntPoly>>& m);

}  // namespace csnorm
