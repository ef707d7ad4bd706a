#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "csnorm/errors.hpp"
#include "csnorm/reps.hpp"
#include "csnorm/respq.hpp"
#include "csnorm/roots.hpp"
#include "csnorm/seminorm.hpp"

namespace csnorm::cli {

namespace {

void require_pair(std::int64_t p, std::int64_t q) {
  if (q <= 0) throw Error(ErrorKind::Validation, "q must be positive");
  if (std::gcd(p, q) != 1) throw Error(ErrorKind::Validation, "p and q must be coprime");
}

std::string dump(Json j) {
  Json out;
  out["schema"] = kSchemaVersion;
  for (auto& [k, v] : j.items()) out[k] = std::move(v);
  return out.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  f << body;
  f.close();
  if (!f) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

std::string poly_text(const IntPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& terms = f.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    const BigInt mag = neg ? BigInt(-c) : c;
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    const bool unit = mag == 1 && e != 0;
    if (!unit) out += mag.str();
    if (e != 0) {
      if (!unit) out += "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

Output cmd_norm(std::int64_t p, std::int64_t q, const std::optional<std::string>& slope) {
  require_pair(p, q);
  const auto profile = seminorm_profile(p, q);
  Json j = to_json(profile);
  if (slope) {
    const auto gamma = Slope::parse(*slope);
    j["slope"] = gamma.str();
    j["norm_value"] = evaluate_norm(profile, gamma);
  }
  return {dump(std::move(j)), kOk};
}

Output cmd_respq(std::int64_t p, std::int64_t q, bool text) {
  require_pair(p, q);
  const auto res = build_res(p, q);
  const auto norm = res.normalized();
  if (text) {
    std::ostringstream os;
    os << "res_{" << p << "," << q << "}(s) = " << poly_text(norm) << "\n";
    if (res.is_constant()) os << "constant: a unit over Q, no roots\n";
    return {os.str(), kOk};
  }
  Json j;
  j["p"] = p;
  j["q"] = q;
  j["y"] = res.y_convention.formula;
  j["span"] = res.span();
  j["constant"] = res.is_constant();
  j["polynomial"] = to_json(norm);
  return {dump(std::move(j)), kOk};
}

Output cmd_roots(std::int64_t p, std::int64_t q, bool include_trivial, const std::string& plot_path,
                 const VerifyOptions& opt) {
  require_pair(p, q);
  const auto f = res_poly(p, q);
  const auto label = "res_{" + std::to_string(p) + "," + std::to_string(q) + "}";
  Json j;
  j["p"] = p;
  j["q"] = q;
  if (f.span() == 0) {
    j["roots"] = Json::array();
    j["note"] = "res is constant for p/q in {0,4}";
    return {dump(std::move(j)), kOk};
  }
  const auto all = find_roots(f, opt.roots, label);
  const auto rs = include_trivial ? all : nontrivial_roots(all, expected_trivial_root_orders(p, q));
  j["include_trivial"] = include_trivial;
  j["bound"] = nontrivial_root_bound(p, q);
  auto rj = to_json(rs);
  for (auto& [k, v] : rj.items()) j[k] = std::move(v);
  if (!plot_path.empty()) {
    std::string csv = "re,im\n";
    for (const auto& r : rs.roots)
      for (int m = 0; m < r.multiplicity; ++m) csv += fmt_double(r.value.real()) + "," + fmt_double(r.value.imag()) + "\n";
    write_file(plot_path, csv);
  }
  return {dump(std::move(j)), kOk};
}

Output cmd_preps(std::int64_t p, std::int64_t q, const VerifyOptions& opt) {
  require_pair(p, q);
  Json classes = Json::array();
  bool ok = true;
  auto add = [&](const Complex& s, int u, PRepKind kind) {
    const auto rep = build_prep(s, u, p, q, kind);
    auto j = to_json(rep);
    const auto failures = prep_failures(rep, opt.reps);
    j["failures"] = failures;
    ok = ok && failures.empty();
    classes.push_back(std::move(j));
  };
  const auto f = res_poly(p, q);
  if (f.span() != 0) {
    const auto nt = nontrivial_roots(find_roots(f, opt.roots), expected_trivial_root_orders(p, q));
    // one of s, 1/s per class
    for (const auto& r : nt.roots)
      if (std::abs(r.value) > 1)
        for (int u : {1, -1}) add(r.value, u, PRepKind::Irreducible);
  }
  const double pi = std::acos(-1.0);
  const std::int64_t n = std::abs(p);
  for (std::int64_t k = 1; 2 * k < n; ++k)
    for (int u : {1, -1}) add(std::polar(1.0, 2 * pi * static_cast<double>(k) / static_cast<double>(n)), u, PRepKind::Reducible);
  Json j;
  j["p"] = p;
  j["q"] = q;
  j["count"] = classes.size();
  j["classes"] = std::move(classes);
  return {dump(std::move(j)), ok ? kOk : kVerification};
}

Output cmd_verify(std::int64_t p, std::int64_t q, const std::vector<std::string>& suites, const VerifyOptions& opt) {
  require_pair(p, q);
  const auto report = verify(p, q, suites, opt);
  return {dump(to_json(report)), report.ok() ? kOk : kVerification};
}

Output cmd_sweep(const SweepRange& range, const std::vector<std::string>& suites, const std::string& out_path,
                 unsigned jobs, const VerifyOptions& opt) {
  if (range.p_min > range.p_max || range.q_min > range.q_max || range.q_min < 1)
    throw Error(ErrorKind::Validation, "empty or invalid sweep range");
  const auto names = parse_suites(suites);
  std::vector<std::pair<std::int64_t, std::int64_t>> cells;
  for (std::int64_t q = range.q_min; q <= range.q_max; ++q)
    for (std::int64_t p = range.p_min; p <= range.p_max; ++p)
      if (std::gcd(p, q) == 1 && (!range.odd_only || p % 2 != 0)) cells.emplace_back(p, q);

  std::vector<std::string> rows(cells.size());
  std::vector<char> failed(cells.size(), 0);
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) try {
      const auto [p, q] = cells[i];
      std::string row = std::to_string(p) + "," + std::to_string(q);
      try {
        const auto pr = seminorm_profile(p, q);
        row += "," + std::string(range_name(pr.range));
        for (auto a : pr.a) row += "," + std::to_string(a);
        row += "," + std::to_string(pr.s_min);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Scope) throw;
        row += ",,,,,";
      }
      for (const auto& s : names) {
        const auto r = run_suite(s, p, q, opt);
        row += "," + status_name(r.status);
        if (r.status == SuiteStatus::Fail) failed[i] = 1;
      }
      rows[i] = row + "\n";
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cells.size())));
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::string csv = "p,q,range,a1,a2,a3,s_min";
  for (const auto& s : names) csv += "," + s;
  csv += "\n";
  for (const auto& r : rows) csv += r;
  const bool any_failed = std::any_of(failed.begin(), failed.end(), [](char c) { return c != 0; });
  const int code = any_failed ? kVerification : kOk;
  if (out_path == "-") return {csv, code};
  write_file(out_path, csv);
  return {"", code};
}

}  // namespace csnorm::cli
