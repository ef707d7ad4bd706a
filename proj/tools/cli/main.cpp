#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "commands.hpp"
#include "csnorm/errors.hpp"

using namespace csnorm;
using namespace csnorm::cli;

namespace {

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Validation:
    case ErrorKind::DegenerateSlope:
    case ErrorKind::DegenerateInput: return kValidation;
    case ErrorKind::Scope: return kScope;
    case ErrorKind::Io: return kIo;
    default: return kVerification;
  }
}

void add_pair(CLI::App* cmd, std::int64_t& p, std::int64_t& q) {
  cmd->add_option("p", p, "numerator of the filling slope")->required();
  cmd->add_option("q", q, "denominator of the filling slope, q > 0")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seminorm engine, resultants and p-rep checks for Dehn fillings of one Whitehead link cusp"};
  app.require_subcommand(1);

  double root_tol = VerifyOptions{}.roots.residual;
  double residual_tol = VerifyOptions{}.reps.relator;
  app.add_option("--root-tol", root_tol, "backward-error tolerance for polished roots")->capture_default_str();
  app.add_option("--residual-tol", residual_tol, "relator, filling and eigenvariety residual tolerance")
      ->capture_default_str();

  std::int64_t p = 0, q = 1;

  auto* norm = app.add_subcommand("norm", "seminorm profile of W(p/q)");
  add_pair(norm, p, q);
  std::optional<std::string> slope;
  norm->add_option("--slope", slope, "evaluate the norm at a slope, e.g. 3/2 or inf");

  auto* respq = app.add_subcommand("respq", "unit-normalized polynomial res_{p,q}");
  add_pair(respq, p, q);
  bool text = false;
  respq->add_flag("--text", text, "human-readable output");

  auto* roots = app.add_subcommand("roots", "roots of res_{p,q}");
  add_pair(roots, p, q);
  std::string plot;
  bool include_trivial = false;
  roots->add_option("--plot", plot, "write (re, im) CSV for a scatter plot");
  roots->add_flag("--all", include_trivial, "keep the roots at +1 and -1");

  auto* preps = app.add_subcommand("preps", "reconstructed p-reps, one per conjugacy class");
  add_pair(preps, p, q);

  auto* ver = app.add_subcommand("verify", "run verification suites");
  add_pair(ver, p, q);
  std::vector<std::string> suites{"all"};
  ver->add_option("--suite", suites, "suites to run, or all")->delimiter(',')->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "profile and suite status for every coprime (p, q) in a box");
  SweepRange range;
  std::string out = "-";
  std::vector<std::string> sweep_suites{"resultant", "symmetries", "seifert", "linear"};
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  sweep->add_option("--p-min", range.p_min)->capture_default_str();
  sweep->add_option("--p-max", range.p_max)->capture_default_str();
  sweep->add_option("--q-min", range.q_min)->capture_default_str();
  sweep->add_option("--q-max", range.q_max)->capture_default_str();
  sweep->add_flag("--odd-only", range.odd_only, "skip even p");
  sweep->add_option("--suites", sweep_suites, "suites per cell, or all")->delimiter(',')->capture_default_str();
  sweep->add_option("--out", out, "CSV path, - for stdout")->capture_default_str();
  sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  VerifyOptions opt;
  opt.roots.residual = root_tol;
  opt.reps.relator = opt.reps.filling = opt.reps.eigen_polys = residual_tol;

  Output result;
  try {
    if (*norm) result = cmd_norm(p, q, slope);
    else if (*respq) result = cmd_respq(p, q, text);
    else if (*roots) result = cmd_roots(p, q, include_trivial, plot, opt);
    else if (*preps) result = cmd_preps(p, q, opt);
    else if (*ver) result = cmd_verify(p, q, suites, opt);
    else result = cmd_sweep(range, sweep_suites, out, jobs, opt);
  } catch (const Error& e) {
    std::cerr << "csnorm: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "csnorm: " << e.what() << "\n";
    return kVerification;
  }
  std::cout << result.text;
  std::cout.flush();
  if (!std::cout) return kIo;
  return result.exit_code;
}
