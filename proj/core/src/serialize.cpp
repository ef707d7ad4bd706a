#include "csnorm/serialize.hpp"

#include <cmath>
#include <sstream>

#include "csnorm/errors.hpp"

namespace csnorm {

namespace {

Json slope_list(const std::array<Slope, 3>& b) {
  Json j = Json::array();
  for (const auto& s : b) j.push_back(s.str());
  return j;
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

Json to_json(const IntPoly& f) {
  Json j = Json::object();
  for (const auto& [e, c] : f.terms()) j[std::to_string(e)] = c.str();
  return j;
}

IntPoly int_poly_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Validation, "polynomial JSON must be an object");
  IntPoly f;
  for (const auto& [k, v] : j.items()) {
    try {
      f.add_term(std::stoi(k), BigInt(v.get<std::string>()));
    } catch (const std::exception& e) {
      throw Error(ErrorKind::Validation, "bad polynomial term '" + k + "': " + e.what());
    }
  }
  return f;
}

Json to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const CMat2& m) {
  return Json::array({Json::array({to_json(m.a), to_json(m.b)}), Json::array({to_json(m.c), to_json(m.d)})});
}

Json to_json(const SeminormProfile& pr) {
  Json j;
  j["p"] = pr.p;
  j["q"] = pr.q;
  j["range"] = std::string(range_name(pr.range));
  j["beta"] = slope_list(pr.beta);
  j["a"] = pr.a;
  j["s_min"] = pr.s_min;
  return j;
}

Json to_json(const Root& r) {
  Json j;
  j["re"] = r.value.real();
  j["im"] = r.value.imag();
  j["multiplicity"] = r.multiplicity;
  j["trivial"] = r.flags.trivial_pm1;
  j["real"] = r.flags.real;
  j["imaginary"] = r.flags.imaginary;
  j["unit_circle"] = r.flags.unit_circle;
  j["residual"] = r.residual;
  return j;
}

Json to_json(const RootSet& rs) {
  Json j;
  j["source"] = rs.source;
  j["count"] = rs.roots.size();
  j["total_multiplicity"] = rs.total_multiplicity();
  j["max_residual"] = rs.max_residual();
  j["min_separation"] = finite_or_null(rs.min_separation());
  Json roots = Json::array();
  for (const auto& r : rs.roots) roots.push_back(to_json(r));
  j["roots"] = std::move(roots);
  return j;
}

Json to_json(const ClassificationReport& rep) {
  Json j;
  j["nontrivial"] = rep.nontrivial;
  j["distinct"] = rep.distinct;
  j["real"] = rep.real;
  j["positive_real"] = rep.positive_real;
  j["imaginary"] = rep.imaginary;
  j["unit_circle"] = rep.unit_circle;
  j["min_unit_circle_gap"] = finite_or_null(rep.min_unit_circle_gap);
  Json checks = Json::array();
  for (const auto& c : rep.checks) checks.push_back({{"check", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  j["ok"] = rep.ok();
  return j;
}

Json to_json(const PRep& rep) {
  Json j;
  j["kind"] = rep.kind == PRepKind::Irreducible ? "irreducible" : "reducible";
  j["sign_u"] = rep.sign_u;
  j["s"] = to_json(rep.eigen.s);
  j["t"] = to_json(rep.eigen.t);
  j["u"] = to_json(rep.eigen.u);
  j["v"] = to_json(rep.eigen.v);
  j["c"] = to_json(rep.c);
  j["mu0"] = to_json(rep.mu0);
  j["mu1"] = to_json(rep.mu1);
  j["trace_mu0"] = to_json(rep.trace_mu0);
  j["trace_lambda0"] = to_json(rep.trace_lambda0);
  j["trace_mu0mu1"] = to_json(rep.trace_mu0mu1);
  const auto& r = rep.residuals;
  j["residuals"] = {{"det_mu0", r.det_mu0},
                    {"det_mu1", r.det_mu1},
                    {"relator", r.relator},
                    {"filling", r.filling},
                    {"trace_mu1", r.trace_mu1},
                    {"trace_lambda1", r.trace_lambda1},
                    {"lambda0_spellings", r.lambda0_spellings},
                    {"lambda0_entry", r.lambda0_entry},
                    {"lambda0_identity", r.lambda0_identity},
                    {"slice_f", r.slice_f},
                    {"eigen_polys", r.eigen_polys}};
  return j;
}

Json to_json(const PRepCounts& c) {
  return {{"reducible", c.reducible}, {"irreducible", c.irreducible}, {"total", c.total},
          {"expected_total", c.expected_total}, {"simple", c.simple}};
}

Json to_json(const LinearSystemSolution& sol) {
  Json j;
  j["p"] = sol.p;
  j["q"] = sol.q;
  j["range"] = std::string(range_name(sol.range));
  Json m = Json::array();
  for (int r = 0; r < 4; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 4; ++c) row.push_back(to_string(sol.matrix[r][c]));
    m.push_back(std::move(row));
  }
  j["matrix"] = std::move(m);
  Json rhs = Json::array(), x = Json::array();
  for (int r = 0; r < 4; ++r) {
    rhs.push_back(to_string(sol.rhs[r]));
    x.push_back(to_string(sol.x[r]));
  }
  j["rhs"] = std::move(rhs);
  j["rank"] = sol.rank;
  j["solution"] = std::move(x);
  if (sol.used_bound) {
    Json dz = Json::array();
    for (const auto& d : sol.z_direction) dz.push_back(to_string(d));
    j["bound"] = sol.bound;
    j["z_direction"] = std::move(dz);
    j["z_modulus"] = sol.z_modulus;
    j["admissible_z"] = sol.admissible_z;
  }
  if (sol.reflected) j["reflected_p"] = sol.reflected_p;
  j["ledger"] = sol.ledger;
  return j;
}

Json to_json(const SeifertCharacterCounts& c) {
  Json j;
  j["sigma"] = c.psl.sigma;
  j["gcd"] = c.psl.key_gcd;
  j["psl"] = {{"total", c.psl.total},
              {"irreducible", c.psl.irreducible},
              {"dihedral", c.psl.dihedral},
              {"reducible", c.psl.reducible},
              {"nonabelian_reducible", c.psl.nonabelian_reducible}};
  j["sl2"] = {{"irreducible_nondihedral", c.irreducible_nondihedral},
              {"dihedral", c.dihedral},
              {"nonabelian_reducible", c.nonabelian_reducible}};
  j["A"] = c.A;
  j["norm"] = c.norm_from_A;
  return j;
}

Json to_json(const DetPReport& d) {
  return {{"numeric", to_json(d.numeric)},
          {"closed_form", to_json(d.closed_form)},
          {"unit", to_json(d.unit)},
          {"rel_error", d.rel_error},
          {"numeric_scaled_row", to_json(d.numeric_scaled_row)},
          {"rel_error_scaled_row", d.rel_error_scaled_row}};
}

Json to_json(const D1Classification& d) {
  Json roots = Json::array();
  for (const auto& z : d.roots) roots.push_back(to_json(z));
  return {{"roots", std::move(roots)}, {"real", d.real},         {"imaginary", d.imaginary},
          {"expect_real", d.expect_real}, {"max_residual", d.max_residual}, {"ok", d.ok()}};
}

Json to_json(const D2Check& d) {
  return {{"min_distance", d.min_distance},
          {"closest_d2_root", to_json(d.closest_d2_root)},
          {"closest_res_root", to_json(d.closest_res_root)},
          {"d1_min_distance", finite_or_null(d.d1_min_distance)}};
}

}  // namespace csnorm
