#include "csnorm/respq.hpp"

#include <cstdlib>
#include <numeric>

namespace csnorm {

namespace {

void validate_pq(std::int64_t p, std::int64_t q) {
  if (q < 0) throw Error(ErrorKind::Validation, "q must be non-negative");
  if (std::gcd(p, q) != 1)
    throw Error(ErrorKind::Validation, std::to_string(p) + "/" + std::to_string(q) + " is not primitive");
}

RatPoly y_of_s(YConvention c) {
  if (c == YConvention::HalfFourMinus)
    return RatPoly({{-2, Rational(-1, 2)}, {0, Rational(2)}, {2, Rational(-1, 2)}});
  return RatPoly({{-2, Rational(-1)}, {0, Rational(2)}, {2, Rational(-1)}});
}

// T(y(s)) by Horner in y
RatPoly compose(const IntPoly& t, const RatPoly& y) {
  RatPoly acc;
  for (int e = t.maxdeg(); e >= 0; --e) {
    acc = acc * y;
    acc += RatPoly(Rational(t.coeff(e)));
  }
  return acc;
}

int order_at(const IntPoly& f, int sign) {
  IntPoly g = f;
  int order = 0;
  while (!g.is_zero()) {
    BigInt v = 0;
    for (const auto& [e, c] : g.terms()) v += (sign < 0 && e % 2 != 0) ? BigInt(-c) : c;
    if (v != 0) break;
    ++order;
    g = g.derivative();
  }
  return order;
}

bool matches_oracle(std::int64_t p, std::int64_t q, YConvention c, std::string& why) {
  IntPoly closed;
  try {
    closed = res_closed_form(p, q, c);
  } catch (const Error&) {
    why = "non-integral closed form at " + std::to_string(p) + "/" + std::to_string(q);
    return false;
  }
  if (!unit_equivalent(closed, res_oracle(p, q))) {
    why = "differs from the resultant at " + std::to_string(p) + "/" + std::to_string(q);
    return false;
  }
  return true;
}

}  // namespace

std::string y_formula(YConvention c) {
  return c == YConvention::HalfFourMinus ? "y = (-s^2 + 4 - s^-2)/2" : "y = -s^2 + 2 - s^-2";
}

const YConventionInfo& selected_y_convention() {
  static const YConventionInfo info = [] {
    const std::vector<std::pair<std::int64_t, std::int64_t>> seeds = {
        {1, 1}, {2, 1}, {-1, 1}, {5, 1}, {7, 2}, {1, 2}, {-3, 2}, {3, 4}};
    std::vector<std::string> rejected;
    for (YConvention c : {YConvention::HalfFourMinus, YConvention::TwoMinus}) {
      std::string why;
      bool ok = true;
      for (const auto& [p, q] : seeds)
        if (!matches_oracle(p, q, c, why)) {
          ok = false;
          break;
        }
      if (ok) return YConventionInfo{c, y_formula(c), seeds, rejected};
      rejected.push_back(y_formula(c) + ": " + why);
    }
    std::string all;
    for (const auto& r : rejected) all += r + "; ";
    throw Error(ErrorKind::ResultantIdentityMismatch, "no y-substitution reproduces the resultant: " + all);
  }();
  return info;
}

BivarPoly k1_poly(std::int64_t p, std::int64_t q) {
  BivarPoly k;
  k.add_term(static_cast<int>(p), static_cast<int>(q), 1);
  k.add_term(0, 0, -1);
  return k;
}

BivarPoly k2_poly() {
  BivarPoly k;
  k.add_term(4, 2, 1);
  k.add_term(4, 1, -1);
  k.add_term(2, 1, 4);
  k.add_term(0, 1, -1);
  k.add_term(0, 0, 1);
  return k;
}

IntPoly res_closed_form(std::int64_t p, std::int64_t q, YConvention y) {
  validate_pq(p, q);
  const int d = static_cast<int>(p - 2 * q);
  RatPoly f = compose(chebyshev_T(static_cast<int>(q)), y_of_s(y)).scale(Rational(q % 2 == 0 ? -2 : 2));
  f.add_term(d, Rational(1));
  f.add_term(-d, Rational(1));
  IntPoly out;
  if (!to_integer_poly(f, out))
    throw Error(ErrorKind::ResultantIdentityMismatch, "closed form has non-integral coefficients");
  return out;
}

IntPoly res_oracle(std::int64_t p, std::int64_t q) {
  validate_pq(p, q);
  if (q == 0) {
    IntPoly a = IntPoly::monomial(1, static_cast<int>(p)) - IntPoly(BigInt(1));
    return a * a;
  }
  return sylvester_resultant_t(k1_poly(p, q), k2_poly());
}

ResPoly build_res(std::int64_t p, std::int64_t q) {
  validate_pq(p, q);
  if (q == 0 && std::abs(p) != 1)
    throw Error(ErrorKind::Validation, "q = 0 is only accepted as the formal case p = +-1");
  const auto& conv = selected_y_convention();
  ResPoly r;
  r.p = p;
  r.q = q;
  r.y_convention = conv;
  r.closed_form = res_closed_form(p, q, conv.kind);
  r.oracle_form = res_oracle(p, q);
  if (!unit_equivalent(r.closed_form, r.oracle_form))
    throw Error(ErrorKind::ResultantIdentityMismatch,
                "closed form and resultant differ at " + std::to_string(p) + "/" + std::to_string(q));
  return r;
}

IntPoly res_poly(std::int64_t p, std::int64_t q) {
  return res_closed_form(p, q, selected_y_convention().kind);
}

std::int64_t res_span_formula(std::int64_t p, std::int64_t q) {
  return 2 * std::max(std::abs(p - 2 * q), 2 * q);
}

TrivialRootOrders trivial_root_orders(const IntPoly& f) { return {order_at(f, 1), order_at(f, -1)}; }

TrivialRootOrders trivial_root_orders(const ResPoly& r) { return trivial_root_orders(r.closed_form); }

TrivialRootOrders expected_trivial_root_orders(std::int64_t p, std::int64_t q) {
  if (q % 2 == 0) return {2, 0};
  if (p % 2 != 0) return {0, 2};
  return {0, 0};
}

SymmetryReport check_symmetries(const ResPoly& r) {
  SymmetryReport rep;
  const IntPoly f = r.closed_form;
  rep.inversion = unit_equivalent(f.substitute_inv_s(), f);
  rep.negation = unit_equivalent(f.substitute_neg_s(), f);
  rep.negation_expected = r.p % 2 == 0;
  rep.reflection = unit_equivalent(res_poly(-r.p + 4 * r.q, r.q), f);
  const std::string at = " at " + std::to_string(r.p) + "/" + std::to_string(r.q);
  if (!rep.inversion) throw Error(ErrorKind::SymmetryViolation, "res(1/s) != res(s)" + at);
  if (rep.negation != rep.negation_expected)
    throw Error(ErrorKind::SymmetryViolation,
                std::string(rep.negation ? "res(-s) == res(s) with p odd" : "res(-s) != res(s) with p even") + at);
  if (!rep.reflection) throw Error(ErrorKind::SymmetryViolation, "res_{p,q} != res_{-p+4q,q}" + at);
  return rep;
}

std::int64_t nontrivial_root_bound(std::int64_t p, std::int64_t q) {
  if (q <= 0) throw Error(ErrorKind::Validation, "q must be positive");
  if (p == 0 || p == 4 * q) throw Error(ErrorKind::DegenerateCase, "res is constant for p/q in {0,4}");
  const std::int64_t ap = std::abs(p);
  const std::int64_t odd = (p % 2 != 0) ? 2 : 0;
  if (p < 0) return 2 * ap + 4 * q - odd;
  if (p < 4 * q) return 4 * q - odd;
  return 2 * ap - 4 * q - odd;
}

}  // namespace csnorm
