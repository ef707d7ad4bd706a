#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csnorm/types.hpp"

namespace csnorm {

// A slope p/q on a boundary torus. Canonical form has q > 0, or (1,0) for
// the meridian at infinity.
class Slope {
 public:
  // Validating constructor: rejects (0,0) and non-coprime pairs. Sign is
  // normalized so that q > 0; (+-1, 0) becomes infinity.
  static Slope make(std::int64_t p, std::int64_t q);
  // Reduces num/den to lowest terms. Only (0,0) is rejected.
  static Slope reduce(std::int64_t num, std::int64_t den);
  static Slope infinity() { return Slope(1, 0); }
  // Accepts "p/q", "p" and "inf".
  static Slope parse(std::string_view text);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  bool is_infinite() const { return q_ == 0; }
  Rational value() const;
  std::string str() const;

  friend bool operator==(const Slope&, const Slope&) = default;

 private:
  Slope(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}
  std::int64_t p_;
  std::int64_t q_;
};

// Geometric intersection number |p1 q2 - q1 p2|.
std::int64_t distance(const Slope& a, const Slope& b);

enum class RangeTag { NegInf0, Zero2, Two4, FourInf, At0, At2, At4 };

struct SlopeRange {
  RangeTag tag;
  bool is_boundary() const {
    return tag == RangeTag::At0 || tag == RangeTag::At2 || tag == RangeTag::At4;
  }
};

std::string_view range_name(RangeTag tag);
SlopeRange classify_range(const Slope& r);

struct BoundarySlopes {
  std::array<Slope, 3> beta;
  // beta_2 before reduction to lowest terms, e.g. 4q/p with p = -2 gives (4,-2).
  std::int64_t raw_num;
  std::int64_t raw_den;
};

// Candidate boundary slopes of the once-filled manifold; beta_1 = 4 and
// beta_3 = 0 always. Endpoints use the formula of the interval to their left;
// the neighbouring formulas agree there.
BoundarySlopes boundary_slopes(std::int64_t p, std::int64_t q);

std::array<std::int64_t, 3> distance_row(std::int64_t p, std::int64_t q, const Slope& gamma);

// Boundary slope pairs of the right-handed Whitehead link with the first
// slope fixed to r. Documentation data only; nothing is derived from it.
struct SlopePairRow {
  std::string r_on_t0;
  std::string partner_on_t1;
  std::string partner_range;
};
const std::vector<SlopePairRow>& whitehead_slope_pairs();

}  // namespace csnorm
