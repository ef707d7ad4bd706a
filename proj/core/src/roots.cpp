#include "csnorm/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace csnorm {

namespace {

using LdComplex = std::complex<long double>;

// Ascending coefficients of s^(-mindeg) f, so index 0 is nonzero.
struct DensePoly {
  std::vector<HpComplex> c;
  int degree() const { return static_cast<int>(c.size()) - 1; }
};

DensePoly dense_from(const IntPoly& f) {
  DensePoly d;
  for (const auto& x : f.dense()) d.c.emplace_back(HpReal(x), HpReal(0));
  return d;
}

DensePoly dense_from(const CPoly& f) {
  DensePoly d;
  for (const auto& x : f.dense()) d.c.push_back(to_hp(x));
  return d;
}

template <class Z, class R>
void horner(const std::vector<Z>& a, const Z& z, Z& p, Z& dp) {
  const std::size_t n = a.size() - 1;
  p = a[n];
  dp = Z(0);
  for (std::size_t i = n; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[i];
  }
}

template <class R>
R abs_bound(const std::vector<R>& absa, const R& r) {
  R acc(0);
  for (std::size_t i = absa.size(); i-- > 0;) acc = acc * r + absa[i];
  return acc;
}

// One Aberth-Ehrlich run; returns sweeps used, or -1 if not converged.
template <class Z, class R>
int aberth(const std::vector<Z>& a, std::vector<Z>& z, const R& stop, int max_sweeps) {
  using std::abs;
  const std::size_t n = z.size();
  std::vector<R> absa(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) absa[i] = abs(a[i]);
  std::vector<bool> done(n, false);
  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    bool all = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      Z p, dp;
      horner<Z, R>(a, z[k], p, dp);
      if (abs(p) <= stop * abs_bound(absa, R(abs(z[k])))) {
        done[k] = true;
        continue;
      }
      all = false;
      Z sum(0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum += Z(1) / (z[k] - z[j]);
      const Z ratio = p / dp;
      z[k] -= ratio / (Z(1) - ratio * sum);
    }
    if (all) return sweep;
  }
  return -1;
}

HpComplex polish(const std::vector<HpComplex>& a, HpComplex z, int m) {
  using boost::multiprecision::abs;
  const HpReal tiny("1e-46");
  for (int it = 0; it < 80; ++it) {
    HpComplex p, dp;
    horner<HpComplex, HpReal>(a, z, p, dp);
    if (p == HpComplex(0) || dp == HpComplex(0)) break;
    const HpComplex step = HpReal(m) * p / dp;
    z -= step;
    if (abs(step) <= tiny * (1 + abs(z))) break;
  }
  return z;
}

double backward_error(const std::vector<HpComplex>& a, const HpComplex& z) {
  using boost::multiprecision::abs;
  HpComplex p, dp;
  horner<HpComplex, HpReal>(a, z, p, dp);
  std::vector<HpReal> absa(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) absa[i] = abs(a[i]);
  const HpReal b = abs_bound(absa, HpReal(abs(z)));
  return b == 0 ? 0.0 : static_cast<double>(abs(p) / b);
}

bool lex_less(const Complex& a, const Complex& b) {
  const double scale = 1e-9 * (1 + std::max(std::abs(a), std::abs(b)));
  if (std::abs(a.real() - b.real()) > scale) return a.real() < b.real();
  return a.imag() < b.imag();
}

RootFlags flags_for(const Complex& s, const RootTolerances& tol) {
  RootFlags f;
  const double scale = 1 + std::abs(s);
  f.real = std::abs(s.imag()) <= tol.real_imag * scale;
  f.imaginary = std::abs(s.real()) <= tol.real_imag * scale;
  f.unit_circle = std::abs(std::abs(s) - 1) <= tol.unit_circle;
  f.trivial_pm1 = std::abs(s - 1.0) <= tol.trivial || std::abs(s + 1.0) <= tol.trivial;
  return f;
}

RootSet solve(const DensePoly& d, int mindeg, const RootTolerances& tol, const std::string& label) {
  RootSet rs;
  rs.tol = tol;
  rs.source_mindeg = mindeg;
  rs.source_span = d.degree();
  rs.source = label;
  const int n = d.degree();
  if (n < 0) throw Error(ErrorKind::DegenerateInput, "find_roots of the zero polynomial");
  if (n == 0) return rs;

  std::vector<LdComplex> a(d.c.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] = {static_cast<long double>(d.c[i].real()), static_cast<long double>(d.c[i].imag())};

  // Start on a circle of the geometric-mean radius with golden-angle jitter.
  const long double radius = std::pow(std::abs(a[0] / a[static_cast<std::size_t>(n)]), 1.0L / n);
  const long double golden = 2.39996322972865332L;
  const long double two_pi = 6.28318530717958647692L;
  std::vector<LdComplex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const long double jitter = std::fmod(golden * k, two_pi) / n * 0.25L;
    z[static_cast<std::size_t>(k)] = std::polar(radius, two_pi * k / n + jitter + 0.3L);
  }
  const long double stop = 64.0L * n * std::numeric_limits<long double>::epsilon();
  const int ld_sweeps = aberth<LdComplex, long double>(a, z, stop, 600);

  // The extended-precision pass only provides starting points: for large
  // coefficients the forward error can still be far above the cluster
  // tolerance, so every run continues in 50 digits.
  std::vector<HpComplex> approx(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) approx[k] = HpComplex(HpReal(z[k].real()), HpReal(z[k].imag()));
  const int hp_sweeps = aberth<HpComplex, HpReal>(d.c, approx, HpReal("1e-42") * n, 400);
  if (hp_sweeps < 0) {
    std::ostringstream os;
    os << "Aberth iteration did not converge for " << (label.empty() ? "polynomial" : label) << " of degree " << n
       << " (extended-precision sweeps: " << (ld_sweeps < 0 ? 600 : ld_sweeps) << ", 50-digit sweeps: 400)";
    throw Error(ErrorKind::ConvergenceFailure, os.str());
  }
  rs.iterations = (ld_sweeps < 0 ? 600 : ld_sweeps);
  rs.hp_iterations = hp_sweeps;

  // Single-linkage clustering at relative tolerance.
  std::vector<Complex> approx_d(approx.size());
  for (std::size_t k = 0; k < approx.size(); ++k) approx_d[k] = to_double(approx[k]);
  std::vector<std::size_t> parent(approx.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < approx_d.size(); ++i)
    for (std::size_t j = i + 1; j < approx_d.size(); ++j) {
      const double scale = std::max({1.0, std::abs(approx_d[i]), std::abs(approx_d[j])});
      if (std::abs(approx_d[i] - approx_d[j]) <= tol.cluster_rel * scale) parent[find(i)] = find(j);
    }
  std::vector<std::vector<std::size_t>> groups;
  {
    std::vector<long> slot(approx.size(), -1);
    for (std::size_t i = 0; i < approx.size(); ++i) {
      const std::size_t r = find(i);
      if (slot[r] < 0) {
        slot[r] = static_cast<long>(groups.size());
        groups.emplace_back();
      }
      groups[static_cast<std::size_t>(slot[r])].push_back(i);
    }
  }

  for (const auto& g : groups) {
    HpComplex centre(0);
    for (auto i : g) centre += approx[i];
    centre /= HpReal(static_cast<long>(g.size()));
    Root r;
    r.multiplicity = static_cast<int>(g.size());
    r.precise = polish(d.c, centre, r.multiplicity);
    r.value = to_double(r.precise);
    r.residual = backward_error(d.c, r.precise);
    rs.roots.push_back(r);
  }

  // Clusters that polished onto the same point are merged.
  std::sort(rs.roots.begin(), rs.roots.end(), [](const Root& a, const Root& b) { return lex_less(a.value, b.value); });
  std::vector<Root> merged;
  for (const auto& r : rs.roots) {
    bool joined = false;
    for (auto& m : merged) {
      const double scale = std::max({1.0, std::abs(m.value), std::abs(r.value)});
      if (std::abs(m.value - r.value) <= tol.cluster_rel * scale) {
        m.multiplicity += r.multiplicity;
        joined = true;
        break;
      }
    }
    if (!joined) merged.push_back(r);
  }
  for (auto& r : merged) r.flags = flags_for(r.value, tol);
  rs.roots = std::move(merged);

  if (rs.max_residual() > tol.residual) {
    std::ostringstream os;
    os << "residual " << rs.max_residual() << " exceeds " << tol.residual << " after polishing"
       << (label.empty() ? "" : " for " + label);
    throw Error(ErrorKind::ConvergenceFailure, os.str());
  }
  return rs;
}

}  // namespace

int RootSet::total_multiplicity() const {
  int t = 0;
  for (const auto& r : roots) t += r.multiplicity;
  return t;
}

double RootSet::max_residual() const {
  double m = 0;
  for (const auto& r : roots) m = std::max(m, r.residual);
  return m;
}

double RootSet::min_separation() const {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) m = std::min(m, std::abs(roots[i].value - roots[j].value));
  return m;
}

RootSet find_roots(const IntPoly& f, const RootTolerances& tol, const std::string& label) {
  if (f.is_zero()) throw Error(ErrorKind::DegenerateInput, "find_roots of the zero polynomial");
  return solve(dense_from(f), f.mindeg(), tol, label);
}

RootSet find_roots(const CPoly& f, const RootTolerances& tol, const std::string& label) {
  if (f.is_zero()) throw Error(ErrorKind::DegenerateInput, "find_roots of the zero polynomial");
  return solve(dense_from(f), f.mindeg(), tol, label);
}

HpComplex polish_root(const IntPoly& f, const HpComplex& z, int multiplicity) {
  return polish(dense_from(f).c, z, multiplicity);
}

RootSet nontrivial_roots(const RootSet& rs, const TrivialRootOrders& expected) {
  RootSet out = rs;
  out.roots.clear();
  int at_plus = 0, at_minus = 0;
  for (const auto& r : rs.roots) {
    if (r.flags.trivial_pm1) {
      (r.value.real() > 0 ? at_plus : at_minus) += r.multiplicity;
      continue;
    }
    out.roots.push_back(r);
  }
  if (at_plus != expected.at_plus1 || at_minus != expected.at_minus1) {
    std::ostringstream os;
    os << "multiplicity at +1/-1 is " << at_plus << "/" << at_minus << ", expected " << expected.at_plus1 << "/"
       << expected.at_minus1;
    throw Error(ErrorKind::TrivialRootMismatch, os.str());
  }
  out.source_span = rs.source_span - at_plus - at_minus;
  return out;
}

bool ClassificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ClassificationCheck& c) { return c.ok; });
}

ClassificationReport classify_report(const RootSet& rs, std::int64_t p, std::int64_t q) {
  ClassificationReport rep;
  rep.min_unit_circle_gap = std::numeric_limits<double>::infinity();
  for (const auto& r : rs.roots) {
    if (r.flags.trivial_pm1) continue;
    rep.nontrivial += r.multiplicity;
    ++rep.distinct;
    if (r.flags.real) {
      rep.real += r.multiplicity;
      if (r.value.real() > 0) rep.positive_real += r.multiplicity;
    }
    if (r.flags.imaginary) rep.imaginary += r.multiplicity;
    if (r.flags.unit_circle) rep.unit_circle += r.multiplicity;
    rep.min_unit_circle_gap = std::min(rep.min_unit_circle_gap, std::abs(std::abs(r.value) - 1.0));
  }
  const bool outer = p < 0 || p > 4 * q;  // p > 4q > 0 or p < 0
  const bool inner = p > 0 && p < 4 * q;
  const bool p_even = p % 2 == 0;
  if (inner) {
    rep.expected_real = p_even ? 4 : 2;
    rep.expected_positive_real = 2;
  }
  if (outer && p % 4 == 0) rep.expected_imaginary = 4;

  auto add = [&](std::string name, bool ok, std::string detail) {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
  };
  add("real roots", rep.real == rep.expected_real && rep.positive_real == rep.expected_positive_real,
      std::to_string(rep.real) + " real (" + std::to_string(rep.positive_real) + " positive), expected " +
          std::to_string(rep.expected_real) + " (" + std::to_string(rep.expected_positive_real) + ")");
  add("imaginary roots", rep.imaginary == rep.expected_imaginary,
      std::to_string(rep.imaginary) + " imaginary, expected " + std::to_string(rep.expected_imaginary));
  add("unit circle", rep.unit_circle == 0, std::to_string(rep.unit_circle) + " non-trivial roots on |s| = 1");
  return rep;
}

ClassificationReport classify(const RootSet& rs, std::int64_t p, std::int64_t q) {
  auto rep = classify_report(rs, p, q);
  if (!rep.ok()) {
    std::string msg;
    for (const auto& c : rep.checks)
      if (!c.ok) msg += c.name + ": " + c.detail + "; ";
    throw Error(ErrorKind::LemmaViolation, msg + "at " + std::to_string(p) + "/" + std::to_string(q));
  }
  return rep;
}

}  // namespace csnorm
