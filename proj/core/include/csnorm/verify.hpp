#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csnorm/reps.hpp"
#include "csnorm/roots.hpp"
#include "csnorm/serialize.hpp"

namespace csnorm {

enum class SuiteStatus { Pass, Fail, Skipped };
std::string status_name(SuiteStatus s);

struct VerifyOptions {
  RootTolerances roots;
  RepTolerances reps;
  double min_separation = 1e-6;    // between distinct non-trivial roots, p odd
  double min_unit_circle_gap = 1e-6;
  double common_root_distance = 1e-3;
  double discrete_faithful_gap = 1e-3;
};

struct SuiteResult {
  std::string suite;
  std::int64_t p = 0;
  std::int64_t q = 1;
  SuiteStatus status = SuiteStatus::Pass;
  std::string reason;  // first failure, or why the suite was skipped
  Json details = Json::object();
};

struct VerificationReport {
  std::vector<SuiteResult> entries;
  int passed() const;
  int failed() const;
  int skipped() const;
  bool ok() const { return failed() == 0; }
};

// resultant, symmetries, roots, preps, seifert, linear, cohomology
const std::vector<std::string>& suite_names();
// Expands "all" and rejects unknown names; keeps the canonical order.
std::vector<std::string> parse_suites(const std::vector<std::string>& requested);

// Runs one suite. Out-of-scope inputs give Skipped; any other library error
// becomes Fail with its message. Validation errors propagate.
SuiteResult run_suite(const std::string& suite, std::int64_t p, std::int64_t q, const VerifyOptions& opt = {});
VerificationReport verify(std::int64_t p, std::int64_t q, const std::vector<std::string>& suites,
                          const VerifyOptions& opt = {});

Json to_json(const SuiteResult& r);
Json to_json(const VerificationReport& rep);

}  // namespace csnorm
