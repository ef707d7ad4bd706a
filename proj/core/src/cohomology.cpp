#include "csnorm/cohomology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <Eigen/Dense>

#include "csnorm/errors.hpp"
#include "csnorm/respq.hpp"
#include "csnorm/roots.hpp"

namespace csnorm {

namespace {

Eigen::MatrixXcd to_eigen(const NumMatrix& m) {
  Eigen::MatrixXcd e(m.rows, m.cols);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) e(r, c) = m(r, c);
  return e;
}

void set_row(NumMatrix& m, int r, std::initializer_list<Complex> v) {
  int c = 0;
  for (const auto& x : v) m(r, c++) = x;
}

// |f(z)| / sum |c_i| |z|^i
double backward_error(const IntPoly& f, const Complex& z) {
  Complex v = 0;
  double scale = 0;
  for (const auto& [e, c] : f.terms()) {
    const double cd = static_cast<double>(c);
    v += cd * std::pow(z, e);
    scale += std::abs(cd) * std::pow(std::abs(z), e);
  }
  return std::abs(v) / scale;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

std::vector<double> singular_values(const NumMatrix& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  const auto& sv = svd.singularValues();
  return {sv.data(), sv.data() + sv.size()};
}

int numeric_rank(const NumMatrix& m, double rel_threshold) {
  const auto sv = singular_values(m);
  if (sv.empty() || sv.front() == 0) return 0;
  int r = 0;
  for (double x : sv)
    if (x > rel_threshold * sv.front()) ++r;
  return r;
}

Complex det(const NumMatrix& m) {
  if (m.rows != m.cols) throw Error(ErrorKind::DegenerateInput, "determinant of a non-square matrix");
  return to_eigen(m).partialPivLu().determinant();
}

NumMatrix coboundary_matrix(const Complex& s, const Complex& a) {
  const Complex s2 = s * s, am1 = a - 1.0, am1sq = am1 * am1;
  NumMatrix b(3, 6, "coboundaries u_e1, u_e2, u_e3");
  set_row(b, 0, {0.0, 1.0 - s2, 0.0, a, 1.0 - a * a, 1.0});
  set_row(b, 1, {0.0, 0.0, 0.0, 2.0 * am1sq, -2.0 * a * am1sq, 2.0 * (a - 2.0)});
  set_row(b, 2, {0.0, 0.0, 1.0 - 1.0 / s2, (2.0 - a) * am1sq, am1sq * am1sq, -am1 * (a - 3.0)});
  return b;
}

NumMatrix reducible_presentation_matrix_unchecked(const Complex& s, std::int64_t p, std::int64_t q,
                                                  RelationRow row) {
  if (q <= 0) throw Error(ErrorKind::Validation, "q must be positive");
  const Complex s2 = s * s, s4 = s2 * s2, is2 = 1.0 / s2;
  const Complex pq = static_cast<double>(p) / static_cast<double>(q);
  NumMatrix m(5, 6, "H^1 presentation at a reducible p-rep");
  set_row(m, 0, {0.0, 1.0 - s2, 0.0, 1.0, 0.0, 1.0});
  set_row(m, 1, {0.0, 0.0, 0.0, 0.0, 0.0, -2.0});
  set_row(m, 2, {0.0, 0.0, 1.0 - s2, 0.0, 0.0, 0.0});
  const Complex d4 = row == RelationRow::Derived ? -2.0 * (s2 - 1.0) * (s2 - 1.0)
                                                 : 2.0 * is2 * (-s4 + 2.0 * s2 - 1.0);
  set_row(m, 3, {0.0, 2.0 * (1.0 - s2), 0.0, d4, is2 * (s4 - s2 - 1.0) * (s2 - 1.0) * (s2 - 1.0), 0.0});
  set_row(m, 4, {pq, 0.0, 0.0, 0.0, is2 * (s4 - 1.0), 0.0});
  return m;
}

NumMatrix reducible_presentation_matrix(const Complex& s, std::int64_t p, std::int64_t q, RelationRow row) {
  auto m = reducible_presentation_matrix_unchecked(s, p, q, row);
  const int r = numeric_rank(m);
  if (r != 5) throw Error(ErrorKind::RankMismatch, "presentation matrix has rank " + std::to_string(r) + ", expected 5");
  return m;
}

NumMatrix matrix_P_reducible(const Complex& s, std::int64_t p, std::int64_t q, RelationRow row) {
  const auto m5 = reducible_presentation_matrix_unchecked(s, p, q, row);
  NumMatrix m(6, 6, "P at a reducible p-rep");
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 6; ++c) m(r, c) = m5(r, c);
  // trace derivative 2(a-1) y1 + y2 - (a-1)^2 y3 at a = 1
  set_row(m, 5, {0.0, 0.0, 0.0, 0.0, 1.0, 0.0});
  return m;
}

DetPReport det_P_reducible(const Complex& s, std::int64_t p, std::int64_t q, double tol) {
  if (s == 0.0) throw Error(ErrorKind::DegenerateInput, "s = 0");
  DetPReport rep;
  const Complex s2 = s * s, s4 = s2 * s2;
  rep.numeric = det(matrix_P_reducible(s, p, q, RelationRow::Derived));
  rep.numeric_scaled_row = det(matrix_P_reducible(s, p, q, RelationRow::Scaled));
  rep.closed_form = (4.0 * static_cast<double>(p) / static_cast<double>(q)) / s4 * (s2 - 1.0) * (s2 - 1.0) *
                    (s4 - 2.0 * s2 + 2.0);
  rep.unit = -s4;
  const Complex expected = rep.unit * rep.closed_form;
  // For p = 0 both sides vanish; measure against the size of the entries.
  const double floor = 1e-12 * (1.0 + std::norm(s2)) * (1.0 + std::norm(s2));
  const double denom = std::max(std::abs(expected), floor);
  rep.rel_error = std::abs(rep.numeric - expected) / denom;
  rep.rel_error_scaled_row = std::abs(rep.numeric_scaled_row - rep.closed_form) / std::max(std::abs(rep.closed_form), floor);
  if (rep.rel_error > tol)
    throw Error(ErrorKind::ClosedFormMismatch, "det P differs from -s^4 times the closed form (relative error " +
                                                   fmt(rep.rel_error) + ")");
  return rep;
}

IntPoly d1_poly(std::int64_t p, std::int64_t q) {
  const BigInt outer = BigInt(p) * (p - 4 * q);
  const BigInt mid = BigInt(-6) * p * p + BigInt(24) * p * q - BigInt(32) * q * q;
  return IntPoly{{4, outer}, {2, mid}, {0, outer}};
}

std::array<Complex, 4> d1_roots(std::int64_t p, std::int64_t q) {
  const double dp = static_cast<double>(p), dq = static_cast<double>(q);
  const double A = dp * (dp - 4 * dq);
  if (A == 0) throw Error(ErrorKind::DegenerateCase, "p(p - 4q) = 0");
  const double u = dp - 2 * dq;
  const double base = 3 * u * u + 4 * dq * dq;
  const double shift = 2 * std::abs(u) * std::sqrt(2 * u * u + 8 * dq * dq);
  const Complex den = std::sqrt(Complex(A, 0));
  const Complex r1 = std::sqrt(Complex(base + shift, 0)) / den;
  const Complex r2 = std::sqrt(Complex(base - shift, 0)) / den;
  std::array<Complex, 4> roots{r1, -r1, r2, -r2};
  const auto f = d1_poly(p, q);
  for (const auto& z : roots)
    if (backward_error(f, z) > 1e-12)
      throw Error(ErrorKind::ClosedFormMismatch, "closed-form root of d1 is not a root");
  return roots;
}

D1Classification d1_classify(std::int64_t p, std::int64_t q, double tol) {
  D1Classification c;
  c.roots = d1_roots(p, q);
  c.expect_real = p > 4 * q || p < 0;
  c.expect_imaginary = 0 < p && p < 4 * q;
  const auto f = d1_poly(p, q);
  for (const auto& z : c.roots) {
    const double scale = std::max(1.0, std::abs(z));
    if (std::abs(z.imag()) <= tol * scale) ++c.real;
    if (std::abs(z.real()) <= tol * scale) ++c.imaginary;
    c.max_residual = std::max(c.max_residual, backward_error(f, z));
  }
  return c;
}

const IntPoly& d2_poly() {
  static const IntPoly d2 = [] {
    static constexpr long long coeffs[] = {
        22,       -438,     4185,    -24868,  101875, -304088, 683740, -1182928, 1598312, -1708564, 1466502,
        -1027864, 595850,   -286072, 115452,  -41808, 14586,   -4582,  1097,     -164,    11};
    IntPoly f;
    for (int i = 0; i < 21; ++i) f.add_term(40 - 2 * i, BigInt(coeffs[i]));
    return f;
  }();
  return d2;
}

D2Check d2_check(std::int64_t p, std::int64_t q, double threshold) {
  if (q <= 0 || std::gcd(p, q) != 1) throw Error(ErrorKind::Validation, "need coprime (p, q) with q > 0");
  if (p == 0 || p == 4 * q) throw Error(ErrorKind::DegenerateCase, "res_{p,q} is constant for p/q in {0,4}");
  static const RootSet d2_roots = find_roots(d2_poly(), {}, "d2");
  const auto res = nontrivial_roots(find_roots(res_poly(p, q)), expected_trivial_root_orders(p, q));
  D2Check out;
  out.min_distance = std::numeric_limits<double>::infinity();
  out.d1_min_distance = std::numeric_limits<double>::infinity();
  for (const auto& r : res.roots) {
    for (const auto& d : d2_roots.roots) {
      const double dist = std::abs(r.value - d.value);
      if (dist < out.min_distance) {
        out.min_distance = dist;
        out.closest_d2_root = d.value;
        out.closest_res_root = r.value;
      }
    }
    for (const auto& z : d1_roots(p, q)) out.d1_min_distance = std::min(out.d1_min_distance, std::abs(r.value - z));
  }
  if (out.min_distance <= threshold)
    throw Error(ErrorKind::CommonRootSuspected, "a root of d2 is within " + fmt(out.min_distance) + " of a root of res");
  if (out.d1_min_distance <= threshold)
    throw Error(ErrorKind::CommonRootSuspected, "a root of d1 is within " + fmt(out.d1_min_distance) + " of a root of res");
  return out;
}

}  // namespace csnorm
