#include "csnorm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "csnorm/cohomology.hpp"
#include "csnorm/errors.hpp"
#include "csnorm/respq.hpp"
#include "csnorm/seminorm.hpp"

namespace csnorm {

namespace {

const double kPi = std::acos(-1.0);

// Collects named checks; the first failing one becomes the suite reason.
class Checks {
 public:
  explicit Checks(SuiteResult& r) : r_(r) {}
  void expect(bool ok, const std::string& what) {
    if (!ok && r_.status != SuiteStatus::Fail) {
      r_.status = SuiteStatus::Fail;
      r_.reason = what;
    }
  }

 private:
  SuiteResult& r_;
};

bool constant_res(std::int64_t p, std::int64_t q) { return p == 0 || p == 4 * q; }

// Non-trivial p-th roots of unity.
std::vector<Complex> unity_roots(std::int64_t p) {
  std::vector<Complex> out;
  const std::int64_t n = std::abs(p);
  for (std::int64_t k = 1; k < n; ++k) {
    if (2 * k == n) continue;  // -1
    out.push_back(std::polar(1.0, 2 * kPi * static_cast<double>(k) / static_cast<double>(n)));
  }
  return out;
}

RootSet nontrivial_res_roots(std::int64_t p, std::int64_t q, const VerifyOptions& opt) {
  const auto label = "res_{" + std::to_string(p) + "," + std::to_string(q) + "}";
  return nontrivial_roots(find_roots(res_poly(p, q), opt.roots, label), expected_trivial_root_orders(p, q));
}

void suite_resultant(SuiteResult& r, const VerifyOptions&) {
  Checks c(r);
  const auto res = build_res(r.p, r.q);
  r.details["y"] = res.y_convention.formula;
  r.details["span"] = res.span();
  r.details["normalized"] = to_json(res.normalized());
  r.details["identity"] = unit_equivalent(res.closed_form, res.oracle_form);
  c.expect(unit_equivalent(res.closed_form, res.oracle_form), "closed form differs from the Sylvester resultant");
  if (res.is_constant()) {
    r.details["note"] = "res is the constant " + res.closed_form.coeff(res.closed_form.mindeg()).str() +
                        ", a unit over Q; no non-trivial roots";
  } else {
    r.details["span_formula"] = res_span_formula(r.p, r.q);
    c.expect(res.span() == res_span_formula(r.p, r.q), "span differs from 2 max(|p-2q|, 2q)");
  }
}

void suite_symmetries(SuiteResult& r, const VerifyOptions&) {
  Checks c(r);
  const auto res = build_res(r.p, r.q);
  const auto sym = check_symmetries(res);
  r.details["inversion"] = sym.inversion;
  r.details["negation"] = sym.negation;
  r.details["reflection"] = sym.reflection;
  r.details["real_coefficients"] = sym.real_coefficients;
  if (res.is_constant()) return;
  const auto got = trivial_root_orders(res), want = expected_trivial_root_orders(r.p, r.q);
  r.details["trivial_orders"] = {got.at_plus1, got.at_minus1};
  r.details["expected_trivial_orders"] = {want.at_plus1, want.at_minus1};
  c.expect(got == want, "orders of vanishing at +-1 differ from the parity rule");
}

void suite_roots(SuiteResult& r, const VerifyOptions& opt) {
  if (constant_res(r.p, r.q)) {
    r.status = SuiteStatus::Skipped;
    r.reason = "res is constant for p/q in {0,4}; no roots";
    return;
  }
  Checks c(r);
  const auto nt = nontrivial_res_roots(r.p, r.q, opt);
  const auto cls = classify_report(nt, r.p, r.q);
  const auto bound = nontrivial_root_bound(r.p, r.q);
  const bool odd = r.p % 2 != 0;
  const int distinct = static_cast<int>(nt.roots.size());
  const bool simple = std::all_of(nt.roots.begin(), nt.roots.end(), [](const Root& x) { return x.multiplicity == 1; });
  r.details["distinct"] = distinct;
  r.details["total_multiplicity"] = nt.total_multiplicity();
  r.details["bound"] = bound;
  r.details["simple"] = simple;
  r.details["min_separation"] = std::isfinite(nt.min_separation()) ? Json(nt.min_separation()) : Json(nullptr);
  r.details["max_residual"] = nt.max_residual();
  r.details["classification"] = to_json(cls);
  c.expect(nt.total_multiplicity() == bound, "non-trivial roots with multiplicity differ from the bound");
  c.expect(cls.ok(), "root classification differs from the expected counts");
  c.expect(cls.min_unit_circle_gap > opt.min_unit_circle_gap, "a non-trivial root lies on the unit circle");
  if (odd) {
    c.expect(distinct == bound, "distinct non-trivial roots differ from the bound");
    c.expect(simple, "a non-trivial root is not simple");
    c.expect(nt.roots.size() < 2 || nt.min_separation() > opt.min_separation, "two non-trivial roots are too close");
  } else {
    r.details["note"] = "p even: simplicity reported, not required";
  }
}

void suite_preps(SuiteResult& r, const VerifyOptions& opt) {
  if (constant_res(r.p, r.q)) {
    r.status = SuiteStatus::Skipped;
    r.reason = "p/q in {0,4}: res is constant, so there are no irreducible p-reps";
    r.details["res_normalized"] = to_json(build_res(r.p, r.q).normalized());
    r.details["res_unit_over_Q"] = true;
    r.details["irreducible"] = 0;
    return;
  }
  Checks c(r);
  const auto nt = nontrivial_res_roots(r.p, r.q, opt);
  PRepResiduals worst;
  int built = 0;
  auto track = [&](const PRep& rep) {
    ++built;
    const auto f = prep_failures(rep, opt.reps);
    if (!f.empty()) {
      std::ostringstream os;
      os << "p-rep at s = " << rep.eigen.s << ", u = " << rep.sign_u << " fails " << f.front();
      c.expect(false, os.str());
    }
    const auto& x = rep.residuals;
    worst.relator = std::max(worst.relator, x.relator);
    worst.filling = std::max(worst.filling, x.filling);
    worst.trace_mu1 = std::max(worst.trace_mu1, x.trace_mu1);
    worst.trace_lambda1 = std::max(worst.trace_lambda1, x.trace_lambda1);
    worst.slice_f = std::max(worst.slice_f, x.slice_f);
    worst.eigen_polys = std::max(worst.eigen_polys, x.eigen_polys);
    worst.det_mu0 = std::max(worst.det_mu0, x.det_mu0);
    worst.lambda0_spellings = std::max(worst.lambda0_spellings, x.lambda0_spellings);
  };
  for (const auto& root : nt.roots)
    for (int u : {1, -1}) track(build_prep(root.value, u, r.p, r.q, PRepKind::Irreducible));
  for (const auto& s : unity_roots(r.p))
    for (int u : {1, -1}) track(build_prep(s, u, r.p, r.q, PRepKind::Reducible));
  r.details["reps_built"] = built;
  r.details["worst"] = {{"relator", worst.relator},         {"filling", worst.filling},
                        {"trace_mu1", worst.trace_mu1},     {"trace_lambda1", worst.trace_lambda1},
                        {"slice_f", worst.slice_f},         {"eigen_polys", worst.eigen_polys},
                        {"det", worst.det_mu0},             {"lambda0_spellings", worst.lambda0_spellings}};

  const auto counts = count_prep_classes_report(r.p, r.q);
  r.details["counts"] = to_json(counts);
  c.expect(counts.total == counts.expected_total, "p-rep class count differs from the closed form");
  if (r.p % 2 != 0 && r.p != 3 * r.q) {
    const auto s_min = seminorm_profile(r.p, r.q).s_min;
    r.details["s_min"] = s_min;
    c.expect(s_min == counts.total, "minimal norm differs from the number of p-rep classes");
  } else {
    r.details["s_min"] = nullptr;
    r.details["note"] = "minimal norm not compared: outside the proven range";
  }

  Json df = Json::array();
  for (int s : {1, -1})
    for (int u : {1, -1})
      for (int e : {1, -1}) {
        const auto d = discrete_faithful(s, u, e);
        const double fill = discrete_faithful_filling_residual(d, r.p, r.q);
        df.push_back({{"s", s}, {"u", u}, {"eps", e}, {"relator", d.relator}, {"filling", fill}});
        c.expect(d.relator <= opt.reps.relator, "discrete faithful point violates the relator");
        c.expect(fill > opt.discrete_faithful_gap, "discrete faithful point satisfies the filling relation");
      }
  r.details["discrete_faithful"] = std::move(df);
}

void suite_seifert(SuiteResult& r, const VerifyOptions&) {
  Checks c(r);
  const auto pr = seminorm_profile(r.p, r.q);
  const auto norms = seifert_norms(r.p, r.q);
  Json rows = Json::array();
  for (int sigma = 1; sigma <= 3; ++sigma) {
    const auto eval = evaluate_norm(pr, Slope::make(sigma, 1));
    const auto counts = seifert_character_counts(r.p, r.q, sigma);
    Json row = to_json(counts);
    row["closed_form"] = norms[sigma - 1];
    row["evaluated"] = eval;
    rows.push_back(std::move(row));
    c.expect(eval == norms[sigma - 1], "norm at slope " + std::to_string(sigma) + " differs from the Seifert formula");
  }
  r.details["slopes"] = std::move(rows);
  const auto det = detected_slopes(r.p, r.q);
  r.details["detected"] = det.detected;
  c.expect(det.consistent(), "detected boundary slopes disagree with the detection criteria");
  const auto u2 = nonabelian_reducible_u2(r.p, r.q);
  r.details["u2"] = {to_json(u2.first), to_json(u2.second)};
}

void suite_linear(SuiteResult& r, const VerifyOptions&) { r.details = to_json(solve_linear_system(r.p, r.q)); }

void suite_cohomology(SuiteResult& r, const VerifyOptions& opt) {
  Checks c(r);
  Json red = Json::array();
  double worst_det = 0;
  for (const auto& s : unity_roots(r.p)) {
    const int rank = numeric_rank(reducible_presentation_matrix_unchecked(s, r.p, r.q));
    const auto d = det_P_reducible(s, r.p, r.q);
    worst_det = std::max(worst_det, d.rel_error);
    red.push_back({{"s", to_json(s)}, {"rank", rank}, {"det_rel_error", d.rel_error}});
    c.expect(rank == 5, "reducible presentation matrix does not have rank 5");
  }
  r.details["reducible"] = std::move(red);
  r.details["det_P_worst_rel_error"] = worst_det;

  if (constant_res(r.p, r.q)) {
    r.details["note"] = "res is constant; irreducible checks skipped";
    return;
  }
  int min_rank = 3;
  const auto nt = nontrivial_res_roots(r.p, r.q, opt);
  for (const auto& root : nt.roots) {
    const auto a = partial_diagonal_a(solve_t(root.value, r.p, r.q));
    min_rank = std::min(min_rank, numeric_rank(coboundary_matrix(root.value, a)));
  }
  r.details["coboundary_min_rank"] = min_rank;
  c.expect(min_rank == 3, "coboundary matrix has rank below 3 at a p-rep");
  const auto d1 = d1_classify(r.p, r.q);
  r.details["d1"] = to_json(d1);
  c.expect(d1.ok(), "roots of d1 are not all real or all imaginary as predicted");
  r.details["d2"] = to_json(d2_check(r.p, r.q, opt.common_root_distance));
}

}  // namespace

std::string status_name(SuiteStatus s) {
  switch (s) {
    case SuiteStatus::Pass: return "pass";
    case SuiteStatus::Fail: return "fail";
    case SuiteStatus::Skipped: return "skipped";
  }
  return "unknown";
}

int VerificationReport::passed() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](auto& e) { return e.status == SuiteStatus::Pass; }));
}
int VerificationReport::failed() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](auto& e) { return e.status == SuiteStatus::Fail; }));
}
int VerificationReport::skipped() const {
  return static_cast<int>(
      std::count_if(entries.begin(), entries.end(), [](auto& e) { return e.status == SuiteStatus::Skipped; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"resultant", "symmetries", "roots",     "preps",
                                                 "seifert",   "linear",     "cohomology"};
  return names;
}

std::vector<std::string> parse_suites(const std::vector<std::string>& requested) {
  const auto& all = suite_names();
  std::vector<bool> want(all.size(), false);
  for (const auto& name : requested) {
    if (name == "all") {
      std::fill(want.begin(), want.end(), true);
      continue;
    }
    const auto it = std::find(all.begin(), all.end(), name);
    if (it == all.end()) throw Error(ErrorKind::Validation, "unknown suite '" + name + "'");
    want[static_cast<std::size_t>(it - all.begin())] = true;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (want[i]) out.push_back(all[i]);
  return out;
}

SuiteResult run_suite(const std::string& suite, std::int64_t p, std::int64_t q, const VerifyOptions& opt) {
  if (q <= 0 || std::gcd(p, q) != 1) throw Error(ErrorKind::Validation, "need coprime (p, q) with q > 0");
  SuiteResult r;
  r.suite = suite;
  r.p = p;
  r.q = q;
  try {
    if (suite == "resultant") suite_resultant(r, opt);
    else if (suite == "symmetries") suite_symmetries(r, opt);
    else if (suite == "roots") suite_roots(r, opt);
    else if (suite == "preps") suite_preps(r, opt);
    else if (suite == "seifert") suite_seifert(r, opt);
    else if (suite == "linear") suite_linear(r, opt);
    else if (suite == "cohomology") suite_cohomology(r, opt);
    else throw Error(ErrorKind::Validation, "unknown suite '" + suite + "'");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Validation) throw;
    r.status = e.kind() == ErrorKind::Scope ? SuiteStatus::Skipped : SuiteStatus::Fail;
    r.reason = e.what();
  }
  return r;
}

VerificationReport verify(std::int64_t p, std::int64_t q, const std::vector<std::string>& suites,
                          const VerifyOptions& opt) {
  VerificationReport rep;
  for (const auto& s : parse_suites(suites)) rep.entries.push_back(run_suite(s, p, q, opt));
  return rep;
}

Json to_json(const SuiteResult& r) {
  Json j;
  j["suite"] = r.suite;
  j["p"] = r.p;
  j["q"] = r.q;
  j["status"] = status_name(r.status);
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["details"] = r.details;
  return j;
}

Json to_json(const VerificationReport& rep) {
  Json j;
  j["schema"] = kSchemaVersion;
  Json entries = Json::array();
  for (const auto& e : rep.entries) entries.push_back(to_json(e));
  j["entries"] = std::move(entries);
  j["summary"] = {{"pass", rep.passed()}, {"fail", rep.failed()}, {"skipped", rep.skipped()}};
  return j;
}

}  // namespace csnorm
