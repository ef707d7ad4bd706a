#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csnorm/verify.hpp"

namespace csnorm::cli {

// Each command returns its full stdout text so nothing is printed when it
// fails part way.
struct Output {
  std::string text;
  int exit_code = 0;
};

enum Exit { kOk = 0, kValidation = 1, kVerification = 2, kScope = 3, kIo = 4 };

Output cmd_norm(std::int64_t p, std::int64_t q, const std::optional<std::string>& slope);
Output cmd_respq(std::int64_t p, std::int64_t q, bool text);
Output cmd_roots(std::int64_t p, std::int64_t q, bool include_trivial, const std::string& plot_path,
                 const VerifyOptions& opt);
Output cmd_preps(std::int64_t p, std::int64_t q, const VerifyOptions& opt);
Output cmd_verify(std::int64_t p, std::int64_t q, const std::vector<std::string>& suites, const VerifyOptions& opt);

struct SweepRange {
  std::int64_t p_min = -9, p_max = 9, q_min = 1, q_max = 4;
  bool odd_only = false;
};
// CSV to out_path, or returned as text when out_path is "-".
Output cmd_sweep(const SweepRange& range, const std::vector<std::string>& suites, const std::string& out_path,
                 unsigned jobs, const VerifyOptions& opt);

// Text form of a Laurent polynomial, highest degree first.
std::string poly_text(const IntPoly& f, const std::string& var = "s");

}  // namespace csnorm::cli
