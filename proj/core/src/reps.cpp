#include "csnorm/reps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

#include "csnorm/respq.hpp"
#include "csnorm/roots.hpp"

namespace csnorm {

namespace {

constexpr Letter m0(int e = 1) { return {Generator::Mu0, e}; }
constexpr Letter m1(int e = 1) { return {Generator::Mu1, e}; }

template <class T>
double mag(const T& x) {
  using std::abs;
  return static_cast<double>(abs(x));
}

template <class T>
T ipow(const T& x, std::int64_t e) {
  T base = e < 0 ? T(1) / x : x;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  T r(1);
  while (n > 0) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

template <class T>
T slice_f_impl(const T& s, const T& u, const T& c) {
  const T one(1);
  const T s2 = s * s, u2 = u * u, is2 = one / s2, iu2 = one / u2;
  return (s - one / s) * (u - one / u) + c * (is2 * iu2 - iu2 - is2 + T(4) - s2 - u2 + s2 * u2) +
         c * c * (T(2) / (s * u) - s / u - u / s + T(2) * s * u) + c * c * c;
}

template <class T>
EigenPolysT<T> eigen_polys_impl(const EigenTupleT<T>& e) {
  const T &s = e.s, &t = e.t, &u = e.u, &v = e.v;
  const T s2 = s * s, s4 = s2 * s2, s6 = s4 * s2;
  const T u2 = u * u, u4 = u2 * u2, u6 = u4 * u2;
  const T t2 = t * t, t3 = t2 * t, v2 = v * v, v3 = v2 * v;
  const T two(2), four(4), one(1);
  EigenPolysT<T> h;
  h.h1 = t - s2 * t + s2 * t2 - s4 * t2 - u2 - two * s2 * t * u2 + s4 * t * u2 - t2 * u2 + two * s2 * t2 * u2 +
         s4 * t3 * u2 + t * u4 - s2 * t * u4 + s2 * t2 * u4 - s4 * t2 * u4;
  h.h2 = s2 - v - s4 * v + u2 * v + two * s2 * u2 * v + s4 * u2 * v - s2 * u4 * v + s2 * v2 - u2 * v2 -
         two * s2 * u2 * v2 - s4 * u2 * v2 + u4 * v2 + s4 * u4 * v2 - s2 * u4 * v3;
  h.h3 = s4 * t - s6 * t - s2 * t * u2 + s4 * t * u2 + s6 * t2 * u2 - s2 * u2 * v + u4 * v + s2 * u4 * v -
         two * s4 * t * u4 * v - u6 * v + s2 * u6 * v2;
  h.g1 = (t - one) * (t * (t - one) * s4 + four * t * s2 + (one - t));
  h.g2 = s2 * (one - v) * (v + one) * (v + one);
  h.g3 = s2 * (t * (t - one) * s4 + two * t * (one - v) * s2 + (v2 - t));
  return h;
}

template <class T>
T solve_t_impl(const T& s, std::int64_t p, std::int64_t q, double k1_tol) {
  using std::sqrt;
  const T s2 = s * s, s4 = s2 * s2;
  const T b = -s4 + T(4) * s2 - T(1);
  const T root = sqrt(b * b - T(4) * s4);
  const T t1 = (-b + root) / (T(2) * s4);
  const T t2 = (-b - root) / (T(2) * s4);
  const T sp = ipow(s, p);
  const double r1 = mag(sp * ipow(t1, q) - T(1));
  const double r2 = mag(sp * ipow(t2, q) - T(1));
  const bool ok1 = r1 <= k1_tol, ok2 = r2 <= k1_tol;
  // Near a double root of k2 the square root amplifies rounding to about
  // sqrt(eps), so a loose threshold is needed here.
  const bool coincide = mag(t1 - t2) <= 1e-6 * (1 + mag(t1));
  if (ok1 && ok2 && !coincide) {
    std::ostringstream os;
    os << "both roots of k2 satisfy s^p t^q = 1 (residuals " << r1 << ", " << r2 << ")";
    throw Error(ErrorKind::AmbiguousT, os.str());
  }
  if (!ok1 && !ok2) {
    std::ostringstream os;
    os << "neither root of k2 satisfies s^p t^q = 1 (residuals " << r1 << ", " << r2 << ")";
    throw Error(ErrorKind::NoT, os.str());
  }
  if (ok1 && ok2) return (t1 + t2) / T(2);
  return ok1 ? t1 : t2;
}

template <class T>
SliceParams<T> inverse_map_impl(const EigenTupleT<T>& e) {
  const T s2 = e.s * e.s, u2 = e.u * e.u;
  if (mag(s2 - T(1)) <= 1e-12) throw Error(ErrorKind::SingularPoint, "inverse eigenvalue map undefined at s = +-1");
  if (mag(s2 - u2) <= 1e-12 * (1 + mag(s2)))
    throw Error(ErrorKind::SingularPoint, "inverse eigenvalue map undefined at s^2 = u^2");
  const T num = s2 * (e.t - T(1)) + u2 * (T(1) - e.v);
  const T den = (s2 - u2) / (e.s * e.u);
  return {e.s, e.u, num / den};
}

double backward(const IntPoly& f, const HpComplex& s) {
  using boost::multiprecision::abs;
  HpComplex acc(0);
  HpReal bound(0);
  const HpReal r = abs(s);
  const auto& c = f.dense();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * s + HpComplex(HpReal(c[i]), HpReal(0));
    bound = bound * r + abs(HpReal(c[i]));
  }
  return bound == 0 ? 0.0 : static_cast<double>(abs(acc) / bound);
}

IntPoly unity_poly(std::int64_t p) {
  return IntPoly::monomial(1, static_cast<int>(std::abs(p))) - IntPoly(BigInt(1));
}

}  // namespace

GroupWord::GroupWord(std::initializer_list<Letter> letters) {
  for (const auto& l : letters) push(l);
}

void GroupWord::push(Letter l) {
  if (l.exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == l.gen) {
    letters_.back().exp += l.exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back(l);
}

std::string GroupWord::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.gen == Generator::Mu0 ? "m0" : "m1";
    if (l.exp != 1) out += "^" + std::to_string(l.exp);
  }
  return out;
}

GroupWord GroupWord::relator_lhs() { return {m0(), m1(), m0(-1), m1(-1), m0(-1), m1(), m0(), m1()}; }
GroupWord GroupWord::relator_rhs() { return {m1(), m0(), m1(), m0(-1), m1(-1), m0(-1), m1(), m0()}; }
GroupWord GroupWord::lambda0() { return {m0(), m1(), m0(), m1(-1), m0(-1), m1(-1), m0(), m1(), m0(-2)}; }
GroupWord GroupWord::lambda0_short() { return {m1(), m0(), m1(-1), m0(-1), m1(-1), m0(), m1(), m0(-1)}; }
GroupWord GroupWord::lambda1() { return {m0(), m1(), m0(-1), m1(-1), m0(-1), m1(), m0(), m1(-1)}; }

Complex slice_f(const Complex& s, const Complex& u, const Complex& c) { return slice_f_impl(s, u, c); }
HpComplex slice_f(const HpComplex& s, const HpComplex& u, const HpComplex& c) { return slice_f_impl(s, u, c); }

EigenPolys eigenvariety_polys(const EigenTuple& e) { return eigen_polys_impl(e); }
EigenPolysT<HpComplex> eigenvariety_polys(const EigenTupleT<HpComplex>& e) { return eigen_polys_impl(e); }

Complex solve_t(const Complex& s, std::int64_t p, std::int64_t q, double k1_tol) {
  return solve_t_impl(s, p, q, k1_tol);
}
HpComplex solve_t(const HpComplex& s, std::int64_t p, std::int64_t q, double k1_tol) {
  return solve_t_impl(s, p, q, k1_tol);
}

SliceParams<Complex> inverse_eigenvalue_map(const EigenTuple& e) { return inverse_map_impl(e); }
SliceParams<HpComplex> inverse_eigenvalue_map(const EigenTupleT<HpComplex>& e) { return inverse_map_impl(e); }

namespace {

template <class Z>
Z polish_in(const IntPoly& f, Z z) {
  using R = typename boost::multiprecision::component_type<Z>::type;
  using std::abs;
  const auto& c = f.dense();
  const R tiny = pow(R(10), -(std::numeric_limits<R>::digits10 - 4));
  for (int it = 0; it < 100; ++it) {
    Z p(0), dp(0);
    for (std::size_t i = c.size(); i-- > 0;) {
      dp = dp * z + p;
      p = p * z + Z(R(c[i]));
    }
    if (dp == Z(0)) break;
    const Z step = p / dp;
    z -= step;
    if (abs(step) <= tiny * (1 + abs(z))) break;
  }
  return z;
}

template <class Z>
PRep build_prep_impl(const Complex& s_in, int sign_u, std::int64_t p, std::int64_t q, PRepKind kind) {
  using R = typename boost::multiprecision::component_type<Z>::type;
  const IntPoly target = kind == PRepKind::Irreducible ? res_poly(p, q) : unity_poly(p);
  const Z s = polish_in(target, Z(R(s_in.real()), R(s_in.imag())));
  auto dbl = [](const Z& z) { return Complex(static_cast<double>(z.real()), static_cast<double>(z.imag())); };
  auto dmat = [&](const Mat2<Z>& m) { return CMat2{dbl(m.a), dbl(m.b), dbl(m.c), dbl(m.d)}; };
  if (std::abs(dbl(s) - s_in) > 1e-6 * (1 + std::abs(s_in))) {
    std::ostringstream os;
    os << "s = " << s_in << " is not a root of " << (kind == PRepKind::Irreducible ? "res_{p,q}" : "s^p - 1");
    throw Error(ErrorKind::VerificationFailure, os.str());
  }

  const Z one(1), u(sign_u);
  EigenTupleT<Z> e{s, one, u, one};
  Z c(0);
  if (kind == PRepKind::Irreducible) {
    e.t = solve_t_impl(s, p, q, 1e-7);
    e.v = Z(-1);
    c = inverse_map_impl(e).c;
  }
  const Mat2<Z> mu0 = normal_mu0(s, c), mu1 = normal_mu1(u);
  const Mat2<Z> lam0 = evaluate_word(GroupWord::lambda0(), mu0, mu1);
  const Mat2<Z> lam0b = evaluate_word(GroupWord::lambda0_short(), mu0, mu1);
  const Mat2<Z> lam1 = evaluate_word(GroupWord::lambda1(), mu0, mu1);

  PRep rep;
  rep.kind = kind;
  rep.sign_u = sign_u;
  rep.p = p;
  rep.q = q;
  rep.eigen = {dbl(e.s), dbl(e.t), dbl(e.u), dbl(e.v)};
  rep.c = dbl(c);
  rep.mu0 = dmat(mu0);
  rep.mu1 = dmat(mu1);
  rep.trace_mu0 = dbl(mu0.trace());
  rep.trace_lambda0 = dbl(lam0.trace());
  rep.trace_mu0mu1 = dbl((mu0 * mu1).trace());

  auto& r = rep.residuals;
  r.det_mu0 = mag(mu0.det() - one);
  r.det_mu1 = mag(mu1.det() - one);
  r.relator = frobenius(evaluate_word(GroupWord::relator_lhs(), mu0, mu1) -
                        evaluate_word(GroupWord::relator_rhs(), mu0, mu1));
  r.filling = frobenius(mu0.pow(p) * lam0.pow(q) - Mat2<Z>::identity());
  r.trace_mu1 = mag(mu1.trace() - Z(2 * sign_u));
  r.lambda0_spellings = frobenius(lam0 - lam0b);
  r.lambda0_entry = mag(lam0.a - e.t);
  r.slice_f = mag(slice_f_impl(s, u, c));
  const auto polys = eigen_polys_impl(e);
  if (kind == PRepKind::Irreducible) {
    r.trace_lambda1 = mag(lam1.trace() + Z(2));
    r.eigen_polys = std::max({mag(polys.h1), mag(polys.h2), mag(polys.h3)});
  } else {
    r.lambda0_identity = frobenius(lam0 - Mat2<Z>::identity());
    r.eigen_polys = std::max({mag(polys.g1), mag(polys.g2), mag(polys.g3)});
  }
  return rep;
}

}  // namespace

int working_digits(const Complex& s, std::int64_t p) {
  // rho(mu0)^p and rho(lambda0)^q both have entries of size about
  // max(|s|, 1/|s|)^|p|, and their product has to cancel down to I.
  const double needed = 2.0 * static_cast<double>(std::abs(p)) * std::abs(std::log10(std::abs(s))) + 30;
  if (needed <= 50) return 50;
  if (needed <= 120) return 120;
  if (needed <= 250) return 250;
  return 500;
}

PRep build_prep(const Complex& s_in, int sign_u, std::int64_t p, std::int64_t q, PRepKind kind) {
  if (sign_u != 1 && sign_u != -1) throw Error(ErrorKind::Validation, "sign_u must be +1 or -1");
  if (q <= 0 || std::gcd(p, q) != 1) throw Error(ErrorKind::Validation, "need coprime (p, q) with q > 0");
  if (std::abs(s_in) < 1e-12) throw Error(ErrorKind::Validation, "s must be nonzero");
  if (std::abs(s_in - 1.0) <= 1e-8 || std::abs(s_in + 1.0) <= 1e-8)
    throw Error(ErrorKind::VerificationFailure,
                "s = +-1 does not give a p-rep: the representation is abelian or does not factor through the "
                "filling");
  using boost::multiprecision::cpp_complex;
  switch (working_digits(s_in, p)) {
    case 50: return build_prep_impl<HpComplex>(s_in, sign_u, p, q, kind);
    case 120: return build_prep_impl<cpp_complex<120>>(s_in, sign_u, p, q, kind);
    case 250: return build_prep_impl<cpp_complex<250>>(s_in, sign_u, p, q, kind);
    default: return build_prep_impl<cpp_complex<500>>(s_in, sign_u, p, q, kind);
  }
}

std::vector<std::string> prep_failures(const PRep& rep, const RepTolerances& tol) {
  std::vector<std::string> out;
  const auto& r = rep.residuals;
  auto check = [&](const char* name, double value, double limit) {
    if (!(value <= limit)) {
      std::ostringstream os;
      os << name << " residual " << value << " > " << limit;
      out.push_back(os.str());
    }
  };
  check("det mu0", r.det_mu0, tol.det);
  check("det mu1", r.det_mu1, tol.det);
  check("relator", r.relator, tol.relator);
  check("filling", r.filling, tol.filling);
  check("trace mu1", r.trace_mu1, tol.trace);
  check("lambda0 spellings", r.lambda0_spellings, tol.lambda0_spellings);
  check("lambda0 entry", r.lambda0_entry, tol.lambda0_spellings);
  check("slice f", r.slice_f, tol.slice_f);
  check("eigenvalue variety", r.eigen_polys, tol.eigen_polys);
  if (rep.kind == PRepKind::Irreducible)
    check("trace lambda1", r.trace_lambda1, tol.trace);
  else
    check("lambda0 identity", r.lambda0_identity, tol.filling);
  return out;
}

PRep reconstruct_prep(const Complex& s, int sign_u, std::int64_t p, std::int64_t q, std::optional<PRepKind> kind,
                      const RepTolerances& tol) {
  if (!kind) {
    const HpComplex hs = to_hp(s);
    const double irr = backward(res_poly(p, q), hs);
    const double red = backward(unity_poly(p), hs);
    kind = irr <= red ? PRepKind::Irreducible : PRepKind::Reducible;
  }
  PRep rep = build_prep(s, sign_u, p, q, *kind);
  const auto failures = prep_failures(rep, tol);
  if (!failures.empty()) {
    std::string msg;
    for (const auto& f : failures) msg += f + "; ";
    std::ostringstream os;
    os << msg << "at s = " << s << ", u = " << sign_u << ", p/q = " << p << "/" << q;
    throw Error(ErrorKind::VerificationFailure, os.str());
  }
  return rep;
}

DiscreteFaithful discrete_faithful(int s, int u, int eps) {
  DiscreteFaithful df;
  df.s = s;
  df.u = u;
  df.eps = eps;
  const Complex cs(s), cu(u);
  df.mu0 = {cs, -cs * cu + Complex(0, eps), 0, cs};
  df.mu1 = {cu, 0, 1, cu};
  df.lambda0 = evaluate_word(GroupWord::lambda0(), df.mu0, df.mu1);
  df.lambda1 = evaluate_word(GroupWord::lambda1(), df.mu0, df.mu1);
  df.relator = frobenius(evaluate_word(GroupWord::relator_lhs(), df.mu0, df.mu1) -
                         evaluate_word(GroupWord::relator_rhs(), df.mu0, df.mu1));
  return df;
}

double discrete_faithful_filling_residual(const DiscreteFaithful& df, std::int64_t p, std::int64_t q) {
  return frobenius(df.mu0.pow(p) * df.lambda0.pow(q) - CMat2::identity());
}

PartialDiagonalResiduals partially_diagonal_check(const Complex& s_in, const Complex& a_in, std::int64_t p,
                                                  std::int64_t q, int sign) {
  const HpComplex s = to_hp(s_in), a = to_hp(a_in), one(1), two(2);
  const HpComplex s2m1 = s * s - one;
  PartialDiagonalResiduals out;
  const HpComplex deflated = -s2m1 * s2m1 * a * a + s2m1 * (s * s - HpComplex(3)) * a - two;
  out.r1_deflated = to_double(deflated);
  out.r1_factored = to_double((a - one) * deflated);
  // t = a / (2 - a) is undefined at a = 2; the t-dependent fields are NaN there.
  const bool finite_t = mag(two - a) > 1e-30;
  const HpComplex t = finite_t ? a / (two - a) : HpComplex(0);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  out.t = finite_t ? to_double(t) : Complex(nan, nan);
  out.r2 = finite_t ? to_double(ipow(s, p) * ipow(t, q) - one) : Complex(nan, nan);
  const HpMat2 mu0{s, HpComplex(0), HpComplex(0), one / s};
  HpMat2 mu1{a, -(a - one) * (a - one), one, two - a};
  if (sign < 0) mu1 = -mu1;
  out.relator = frobenius(evaluate_word(GroupWord::relator_lhs(), mu0, mu1) -
                          evaluate_word(GroupWord::relator_rhs(), mu0, mu1));
  const HpMat2 lam0 = evaluate_word(GroupWord::lambda0(), mu0, mu1);
  out.lambda0_offdiag = mag(lam0.b) + mag(lam0.c);
  out.lambda0_entry = finite_t ? mag(lam0.a - t) : nan;
  return out;
}

Complex partial_diagonal_a(const Complex& t) { return 2.0 * t / (1.0 + t); }

std::int64_t reducible_prep_count(std::int64_t p) { return std::abs(p) - (p % 2 != 0 ? 1 : 2); }

std::int64_t prep_class_bound(std::int64_t p, std::int64_t q) {
  if (q <= 0) throw Error(ErrorKind::Validation, "q must be positive");
  if (p == 0 || p == 4 * q) throw Error(ErrorKind::DegenerateCase, "p/q in {0,4}");
  const std::int64_t ap = std::abs(p), k = p % 2 != 0 ? 3 : 2;
  if (p < 0) return 3 * ap + 4 * q - k;
  if (p < 4 * q) return ap + 4 * q - k;
  return 3 * ap - 4 * q - k;
}

PRepCounts count_prep_classes_report(std::int64_t p, std::int64_t q) {
  if (q <= 0 || std::gcd(p, q) != 1) throw Error(ErrorKind::Validation, "need coprime (p, q) with q > 0");
  if (p == 0 || p == 4 * q) throw Error(ErrorKind::DegenerateCase, "res_{p,q} is constant for p/q in {0,4}");
  const auto rs = find_roots(res_poly(p, q), {}, "res_{" + std::to_string(p) + "," + std::to_string(q) + "}");
  const auto nt = nontrivial_roots(rs, expected_trivial_root_orders(p, q));
  PRepCounts c;
  c.reducible = reducible_prep_count(p);
  c.irreducible = static_cast<std::int64_t>(nt.roots.size());
  c.total = c.reducible + c.irreducible;
  c.expected_total = prep_class_bound(p, q);
  c.simple = std::all_of(nt.roots.begin(), nt.roots.end(), [](const Root& r) { return r.multiplicity == 1; });
  return c;
}

PRepCounts count_prep_classes(std::int64_t p, std::int64_t q) {
  const auto c = count_prep_classes_report(p, q);
  if (c.total != c.expected_total) {
    std::ostringstream os;
    os << "p/q = " << p << "/" << q << ": " << c.total << " p-rep classes found, closed form gives "
       << c.expected_total << (c.simple ? "" : " (multiple non-trivial roots)");
    throw Error(ErrorKind::CountMismatch, os.str());
  }
  return c;
}

}  // namespace csnorm
