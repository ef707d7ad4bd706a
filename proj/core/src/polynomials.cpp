#include "csnorm/polynomials.hpp"

#include <string>

namespace csnorm {

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DegenerateInput, "division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.span() < b.span()) throw Error(ErrorKind::DegenerateInput, "inexact polynomial division");
  std::vector<BigInt> r = a.dense();
  const std::vector<BigInt>& d = b.dense();
  const std::size_t nq = r.size() - d.size() + 1;
  std::vector<BigInt> quo(nq);
  const BigInt& lead = d.back();
  for (std::size_t k = nq; k-- > 0;) {
    BigInt& top = r[k + d.size() - 1];
    if (top == 0) continue;
    BigInt rem;
    BigInt c;
    boost::multiprecision::divide_qr(top, lead, c, rem);
    if (rem != 0) throw Error(ErrorKind::DegenerateInput, "inexact polynomial division");
    for (std::size_t j = 0; j < d.size(); ++j)
      if (d[j] != 0) r[k + j] -= c * d[j];
    quo[k] = std::move(c);
  }
  for (const auto& x : r)
    if (x != 0) throw Error(ErrorKind::DegenerateInput, "inexact polynomial division");
  IntPoly out;
  const int lo = a.mindeg() - b.mindeg();
  for (std::size_t k = 0; k < nq; ++k)
    if (quo[k] != 0) out.add_term(lo + static_cast<int>(k), quo[k]);
  return out;
}

bool to_integer_poly(const RatPoly& f, IntPoly& out) {
  IntPoly r;
  for (const auto& [e, c] : f.terms()) {
    if (denominator(c) != 1) return false;
    r.add_term(e, numerator(c));
  }
  out = std::move(r);
  return true;
}

RatPoly to_rational_poly(const IntPoly& f) {
  return f.map_coeffs<Rational>([](const BigInt& c) { return Rational(c); });
}

CPoly to_complex_poly(const IntPoly& f) {
  return f.map_coeffs<Complex>([](const BigInt& c) { return Complex(static_cast<double>(c), 0.0); });
}

namespace {

IntPoly chebyshev(int q, const IntPoly& first) {
  if (q < 0) throw Error(ErrorKind::Validation, "Chebyshev index must be non-negative");
  const IntPoly two_y = IntPoly::monomial(2, 1);
  IntPoly prev(BigInt(1)), cur = first;
  if (q == 0) return prev;
  for (int k = 1; k < q; ++k) {
    IntPoly next = two_y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

IntPoly chebyshev_T(int q) { return chebyshev(q, IntPoly::monomial(1, 1)); }
IntPoly chebyshev_U(int q) { return chebyshev(q, IntPoly::monomial(2, 1)); }

void BivarPoly::add_term(int es, int et, const BigInt& c) {
  if (et < 0) throw Error(ErrorKind::Validation, "negative t exponent");
  if (c == 0) return;
  auto& slot = terms_[{es, et}];
  slot += c;
  if (slot == 0) terms_.erase({es, et});
}

int BivarPoly::t_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

IntPoly BivarPoly::t_coeff(int k) const {
  IntPoly r;
  for (const auto& [e, c] : terms_)
    if (e.second == k) r.add_term(e.first, c);
  return r;
}

IntPoly determinant_cofactor(const std::vector<std::vector<IntPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPoly(BigInt(1));
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  IntPoly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<IntPoly>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<IntPoly> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    IntPoly term = m[0][j] * determinant_cofactor(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

IntPoly determinant_bareiss(std::vector<std::vector<IntPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPoly(BigInt(1));
  bool negate = false;
  IntPoly prev(BigInt(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return {};
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        IntPoly v = m[i][j] * m[k][k];
        if (!m[i][k].is_zero() && !m[k][j].is_zero()) v -= m[i][k] * m[k][j];
        m[i][j] = divide_exact(v, prev);
      }
      m[i][k] = IntPoly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

IntPoly determinant(std::vector<std::vector<IntPoly>> m, int cofactor_max) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw Error(ErrorKind::DegenerateInput, "determinant of a non-square matrix");
  if (static_cast<int>(m.size()) <= cofactor_max) return determinant_cofactor(m);
  return determinant_bareiss(std::move(m));
}

IntPoly sylvester_resultant_t(const BivarPoly& f, const BivarPoly& g) {
  const int m = f.t_degree(), n = g.t_degree();
  if (m <= 0 || n <= 0)
    throw Error(ErrorKind::DegenerateInput, "Sylvester resultant needs positive t-degree in both inputs");
  const int size = m + n;
  std::vector<std::vector<IntPoly>> mat(static_cast<std::size_t>(size),
                                        std::vector<IntPoly>(static_cast<std::size_t>(size)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) mat[i][i + k] = f.t_coeff(m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) mat[n + i][i + k] = g.t_coeff(n - k);
  return determinant(std::move(mat));
}

}  // namespace csnorm
