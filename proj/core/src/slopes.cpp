#include "csnorm/slopes.hpp"

#include <charconv>
#include <cstdlib>
#include <numeric>

#include "csnorm/errors.hpp"

namespace csnorm {

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorKind::Validation, "not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

Slope Slope::make(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw Error(ErrorKind::Validation, "slope 0/0");
  if (std::gcd(p, q) != 1)
    throw Error(ErrorKind::Validation,
                "slope " + std::to_string(p) + "/" + std::to_string(q) + " is not primitive");
  if (q == 0) return infinity();
  if (q < 0) return Slope(-p, -q);
  return Slope(p, q);
}

Slope Slope::reduce(std::int64_t num, std::int64_t den) {
  if (num == 0 && den == 0) throw Error(ErrorKind::DegenerateSlope, "0/0");
  std::int64_t g = std::gcd(num, den);
  return make(num / g, den / g);
}

Slope Slope::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "1/0") return infinity();
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return make(parse_int(text), 1);
  return make(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Slope::value() const {
  if (is_infinite()) throw Error(ErrorKind::Validation, "infinite slope has no rational value");
  return Rational(p_, q_);
}

std::string Slope::str() const {
  if (is_infinite()) return "inf";
  return std::to_string(p_) + "/" + std::to_string(q_);
}

std::int64_t distance(const Slope& a, const Slope& b) {
  return std::abs(a.p() * b.q() - a.q() * b.p());
}

std::string_view range_name(RangeTag tag) {
  switch (tag) {
    case RangeTag::NegInf0: return "(-inf,0)";
    case RangeTag::Zero2: return "(0,2)";
    case RangeTag::Two4: return "(2,4)";
    case RangeTag::FourInf: return "(4,inf)";
    case RangeTag::At0: return "0";
    case RangeTag::At2: return "2";
    case RangeTag::At4: return "4";
  }
  return "?";
}

SlopeRange classify_range(const Slope& r) {
  if (r.is_infinite()) throw Error(ErrorKind::Validation, "classify_range needs a finite slope");
  const auto p = r.p(), q = r.q();
  if (p < 0) return {RangeTag::NegInf0};
  if (p == 0) return {RangeTag::At0};
  if (p < 2 * q) return {RangeTag::Zero2};
  if (p == 2 * q) return {RangeTag::At2};
  if (p < 4 * q) return {RangeTag::Two4};
  if (p == 4 * q) return {RangeTag::At4};
  return {RangeTag::FourInf};
}

BoundarySlopes boundary_slopes(std::int64_t p, std::int64_t q) {
  if (q <= 0) throw Error(ErrorKind::Validation, "boundary_slopes needs q > 0");
  const Slope r = Slope::make(p, q);
  std::int64_t num = 0, den = 0;
  switch (classify_range(r).tag) {
    case RangeTag::NegInf0:
    case RangeTag::At0:
      num = 4 * q, den = p;
      break;
    case RangeTag::Zero2:
    case RangeTag::At2:
      num = 2 * p + 4 * q, den = p;
      break;
    case RangeTag::Two4:
    case RangeTag::At4:
      num = -p + 6 * q, den = q;
      break;
    case RangeTag::FourInf:
      num = 4 * q, den = p - 2 * q;
      break;
  }
  return {{Slope::make(4, 1), Slope::reduce(num, den), Slope::make(0, 1)}, num, den};
}

std::array<std::int64_t, 3> distance_row(std::int64_t p, std::int64_t q, const Slope& gamma) {
  const auto b = boundary_slopes(p, q);
  return {distance(gamma, b.beta[0]), distance(gamma, b.beta[1]), distance(gamma, b.beta[2])};
}

const std::vector<SlopePairRow>& whitehead_slope_pairs() {
  static const std::vector<SlopePairRow> rows = {
      {"0", "0 or empty", ""},
      {"4", "2 or empty", ""},
      {"empty", "0", ""},
      {"2 or empty", "4", ""},
      {"[-inf,0]", "4/r = 4q/p", "[-inf,0]"},
      {"[0,2]", "4/r + 2 = (2p+4q)/p", "[4,inf]"},
      {"[2,4]", "6 - r = (-p+6q)/q", "[2,4]"},
      {"[4,inf]", "4/(r-2) = 4q/(p-2q)", "[0,2]"},
  };
  return rows;
}

}  // namespace csnorm
