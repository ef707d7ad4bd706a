#include "csnorm/seminorm.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "csnorm/errors.hpp"
#include "csnorm/reps.hpp"
#include "csnorm/respq.hpp"

namespace csnorm {

namespace {

void require_coprime(std::int64_t p, std::int64_t q) {
  if (q <= 0) throw Error(ErrorKind::Validation, "q must be positive");
  if (std::gcd(p, q) != 1) throw Error(ErrorKind::Validation, "p and q must be coprime");
}

void require_engine_scope(std::int64_t p, std::int64_t q) {
  require_coprime(p, q);
  if (p % 2 == 0) throw Error(ErrorKind::Scope, "p even is outside the proven range of the norm formula");
  if (p == 3 * q) throw Error(ErrorKind::Scope, "p/q = 3 is excluded");
}

void require_sigma(int sigma) {
  if (sigma < 1 || sigma > 3) throw Error(ErrorKind::Validation, "Seifert slope must be 1, 2 or 3");
}

std::int64_t half(std::int64_t x) {
  if (x % 2 != 0) throw Error(ErrorKind::CountMismatch, "odd value where an even count is expected");
  return x / 2;
}

std::string str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

bool even_nonneg_integer(const Rational& r) {
  if (r < 0 || denominator(r) != 1) return false;
  return numerator(r) % 2 == 0;
}

// Row reduction of the augmented system [m | rhs]. Returns the rank of m,
// and sets consistent to false when the augmented rank is larger.
template <std::size_t R>
int reduce(std::array<std::array<Rational, 5>, R>& m, bool& consistent) {
  int rank = 0;
  for (int col = 0; col < 4 && rank < static_cast<int>(R); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(R); ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    const Rational lead = m[rank][col];
    for (auto& x : m[rank]) x /= lead;
    for (int r = 0; r < static_cast<int>(R); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (int c = 0; c < 5; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  consistent = true;
  for (int r = rank; r < static_cast<int>(R); ++r)
    if (m[r][4] != 0) consistent = false;
  return rank;
}

// Unique solution of a full-rank reduced system.
template <std::size_t R>
std::array<Rational, 4> read_solution(const std::array<std::array<Rational, 5>, R>& m) {
  std::array<Rational, 4> x;
  for (int r = 0; r < 4; ++r) x[r] = m[r][4];
  return x;
}

}  // namespace

SeminormProfile seminorm_profile(std::int64_t p, std::int64_t q) {
  require_engine_scope(p, q);
  SeminormProfile pr;
  pr.p = p;
  pr.q = q;
  pr.range = classify_range(Slope::make(p, q)).tag;
  pr.beta = boundary_slopes(p, q).beta;
  switch (pr.range) {
    case RangeTag::NegInf0:
      pr.a = {-p + 2 * q - 1, 2, 2 * q - 2};
      pr.s_min = -3 * p + 4 * q - 3;
      break;
    case RangeTag::Zero2:
      pr.a = {-p + 2 * q - 1, 2, 2 * q - 2};
      pr.s_min = p + 4 * q - 3;
      break;
    case RangeTag::Two4:
      pr.a = {p - 2 * q - 1, 4, 2 * q - 2};
      pr.s_min = p + 4 * q - 3;
      break;
    case RangeTag::FourInf:
      pr.a = {p - 2 * q - 1, 2, 2 * q - 2};
      pr.s_min = 3 * p - 4 * q - 3;
      break;
    default:
      // p/q in {0, 2, 4} forces p even
      throw Error(ErrorKind::Scope, "p/q on a range boundary");
  }
  if (evaluate_norm(pr, Slope::infinity()) != pr.s_min)
    throw Error(ErrorKind::VerificationFailure, "||mu|| differs from the minimal norm for " + std::to_string(p) +
                                                    "/" + std::to_string(q));
  return pr;
}

std::int64_t evaluate_norm(const SeminormProfile& profile, const Slope& gamma) {
  std::int64_t n = 0;
  for (int j = 0; j < 3; ++j) n += profile.a[j] * distance(gamma, profile.beta[j]);
  return n;
}

bool seifert_slope_excluded(std::int64_t p, std::int64_t q, int sigma) {
  require_sigma(sigma);
  static constexpr std::int64_t fibre[] = {6, 4, 3};
  return p == fibre[sigma - 1] * q;
}

std::int64_t seifert_norm(std::int64_t p, std::int64_t q, int sigma) {
  require_sigma(sigma);
  const auto s = seminorm_profile(p, q).s_min;
  if (seifert_slope_excluded(p, q, sigma))
    throw Error(ErrorKind::Scope, "filling " + std::to_string(sigma) + " is not small Seifert at this p/q");
  switch (sigma) {
    case 1: return s + 2 * std::abs(p - 6 * q) - 2;
    case 2: return s + 3 * std::abs(p - 4 * q) - 3;
    default: return s + 4 * std::abs(p - 3 * q) - 4;
  }
}

std::array<std::int64_t, 3> seifert_norms(std::int64_t p, std::int64_t q) {
  return {seifert_norm(p, q, 1), seifert_norm(p, q, 2), seifert_norm(p, q, 3)};
}

PslCounts psl_character_counts(std::int64_t p, std::int64_t q, int sigma) {
  require_coprime(p, q);
  require_sigma(sigma);
  if (seifert_slope_excluded(p, q, sigma))
    throw Error(ErrorKind::Scope, "filling " + std::to_string(sigma) + " is not small Seifert at this p/q");
  PslCounts c;
  c.sigma = sigma;
  const std::int64_t ap = std::abs(p);
  if (sigma == 1) {
    const std::int64_t d = std::abs(p - 6 * q);
    c.key_gcd = std::gcd(std::int64_t{6}, p);
    switch (c.key_gcd) {
      case 1:
      case 3: c = {1, c.key_gcd, half(ap + d), half(d - 1), 0, half(ap + 1), 0}; break;
      case 2: c = {1, 2, half(ap + d) + 1, half(d), 1, half(ap) + 1, 0}; break;
      case 6: c = {1, 6, half(ap + d), half(d) - 1, 1, half(ap) + 1, 1}; break;
      default: throw Error(ErrorKind::Scope, "no table row for this gcd");
    }
  } else if (sigma == 2) {
    const std::int64_t d = std::abs(p - 4 * q);
    c.key_gcd = std::gcd(std::int64_t{4}, p);
    switch (c.key_gcd) {
      case 1: c = {2, 1, ap + d, d - 1, half(d - 1), ap + 1, 0}; break;
      case 2: c = {2, 2, ap + d + 2, d, half(d) + 1, ap + 2, 0}; break;
      case 4: c = {2, 4, ap + d + 1, d - 1, half(d) + 1, ap + 2, 1}; break;
      default: throw Error(ErrorKind::Scope, "no table row for this gcd");
    }
  } else {
    const std::int64_t d = std::abs(p - 3 * q);
    c.key_gcd = std::gcd(std::int64_t{6}, p);
    switch (c.key_gcd) {
      case 1: c = {3, 1, 3 * half(ap - 1) + d, d - 1, 0, 3 * half(ap - 1) + 1, 0}; break;
      case 3: c = {3, 3, 3 * half(ap - 1) + d - 1, d - 2, 0, 3 * half(ap - 1) + 1, 1}; break;
      case 2: c = {3, 2, 3 * half(ap) + d, d - 1, 0, 3 * half(ap) + 1, 0}; break;
      case 6: c = {3, 6, 3 * half(ap) + d - 1, d - 2, 0, 3 * half(ap) + 1, 1}; break;
      default: throw Error(ErrorKind::Scope, "no table row for this gcd");
    }
  }
  return c;
}

SeifertCharacterCounts seifert_character_counts(std::int64_t p, std::int64_t q, int sigma) {
  require_engine_scope(p, q);
  SeifertCharacterCounts out;
  out.psl = psl_character_counts(p, q, sigma);
  // p odd: no lifting obstruction, two lifts per character except dihedral.
  out.irreducible_nondihedral = 2 * (out.psl.irreducible - out.psl.dihedral);
  out.dihedral = out.psl.dihedral;
  out.nonabelian_reducible = 2 * out.psl.nonabelian_reducible;
  out.A = out.irreducible_nondihedral + out.dihedral + out.nonabelian_reducible;
  switch (sigma) {
    case 1: out.A_closed_form = std::abs(p - 6 * q) - 1; break;
    case 2: out.A_closed_form = 3 * half(std::abs(p - 4 * q) - 1); break;
    default: out.A_closed_form = 2 * (std::abs(p - 3 * q) - 1); break;
  }
  out.norm_from_A = seminorm_profile(p, q).s_min + 2 * out.A;
  if (out.A != out.A_closed_form)
    throw Error(ErrorKind::CountMismatch, "lifted character count " + std::to_string(out.A) +
                                              " differs from closed form " + std::to_string(out.A_closed_form));
  if (out.norm_from_A != seifert_norm(p, q, sigma))
    throw Error(ErrorKind::CountMismatch, "s + 2A differs from the Seifert norm");
  return out;
}

IntPoly twisted_alexander(std::int64_t p, std::int64_t q, bool s_squared_is_one) {
  if (!s_squared_is_one) return IntPoly{{1, BigInt(1)}, {0, BigInt(-1)}};
  return IntPoly{{2, BigInt(q)}, {1, BigInt(p - 2 * q)}, {0, BigInt(q)}};
}

std::pair<Complex, Complex> nonabelian_reducible_u2(std::int64_t p, std::int64_t q) {
  require_coprime(p, q);
  if (p == 0) throw Error(ErrorKind::DegenerateCase, "p/q = 0 has no non-abelian reducible characters of this kind");
  const double dp = static_cast<double>(p), dq = static_cast<double>(q);
  const Complex root = std::sqrt(Complex(dp * (dp - 4 * dq), 0.0));
  const Complex u1 = (-dp + 2 * dq + root) / (2 * dq);
  const Complex u2 = (-dp + 2 * dq - root) / (2 * dq);
  for (const Complex& u : {u1, u2}) {
    const Complex r = dq * u * u + (dp - 2 * dq) * u + dq;
    const double scale = dq * std::norm(u) + std::abs(dp - 2 * dq) * std::abs(u) + dq;
    if (std::abs(r) > 1e-12 * scale)
      throw Error(ErrorKind::VerificationFailure, "u^2 is not a root of the twisted Alexander polynomial");
  }
  return {u1, u2};
}

LinearSystemSolution solve_linear_system(std::int64_t p, std::int64_t q) {
  const auto profile = seminorm_profile(p, q);
  LinearSystemSolution sol;
  sol.p = p;
  sol.q = q;
  sol.range = profile.range;

  const Slope gammas[4] = {Slope::make(1, 1), Slope::make(2, 1), Slope::make(3, 1), Slope::infinity()};
  const std::int64_t offsets[4] = {2 * std::abs(p - 6 * q) - 2, 3 * std::abs(p - 4 * q) - 3,
                                   4 * std::abs(p - 3 * q) - 4, 0};
  for (int r = 0; r < 4; ++r) {
    const auto d = distance_row(p, q, gammas[r]);
    for (int j = 0; j < 3; ++j) sol.matrix[r][j] = Rational(d[j]);
    sol.matrix[r][3] = Rational(-1);
    sol.rhs[r] = Rational(offsets[r]);
  }

  std::array<std::array<Rational, 5>, 4> aug;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) aug[r][c] = sol.matrix[r][c];
    aug[r][4] = sol.rhs[r];
  }
  bool consistent = true;
  sol.rank = reduce(aug, consistent);
  if (!consistent) throw Error(ErrorKind::SystemInconsistent, "Seifert-norm equations contradict each other");

  // Rank 4 exactly on (3,4) and (4,6).
  const bool full = (3 * q < p && p < 4 * q) || (4 * q < p && p < 6 * q);
  if (sol.rank != (full ? 4 : 3))
    throw Error(ErrorKind::RankUnexpected, "rank " + std::to_string(sol.rank) + ", expected " + (full ? "4" : "3"));

  if (sol.rank == 4) {
    sol.x = read_solution(aug);
    sol.ledger.push_back("rank 4: unique solution");
  } else {
    sol.used_bound = true;
    sol.bound = prep_class_bound(p, q);
    auto solve_at = [&](std::int64_t z) {
      std::array<std::array<Rational, 5>, 5> m;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 5; ++c) m[r][c] = c < 4 ? sol.matrix[r][c] : sol.rhs[r];
      m[4] = {Rational(0), Rational(0), Rational(0), Rational(1), Rational(sol.bound - z)};
      bool ok = true;
      const int rk = reduce(m, ok);
      if (!ok || rk != 4) throw Error(ErrorKind::SystemInconsistent, "system with s = bound - z is not uniquely solvable");
      return read_solution(m);
    };
    const auto x0 = solve_at(0), x1 = solve_at(1);
    for (int j = 0; j < 4; ++j) sol.z_direction[j] = x1[j] - x0[j];

    std::int64_t modulus = 1;
    for (const auto& d : sol.z_direction) {
      if (d == 0) continue;
      const auto den = static_cast<std::int64_t>(denominator(d));
      const auto num = static_cast<std::int64_t>(numerator(d) % 2 == 0 ? 2 : 1);
      modulus = std::lcm(modulus, 2 * den / num);
    }
    sol.z_modulus = modulus;
    for (std::int64_t z = 0; z <= sol.bound; ++z) {
      bool ok = true;
      for (int j = 0; j < 4 && ok; ++j) ok = even_nonneg_integer(x0[j] + Rational(z) * sol.z_direction[j]);
      if (ok) sol.admissible_z.push_back(z);
    }
    std::ostringstream os;
    os << "rank 3: s = " << sol.bound << " - z; d/dz(a1,a2,a3,s) = (" << str(sol.z_direction[0]) << ", "
       << str(sol.z_direction[1]) << ", " << str(sol.z_direction[2]) << ", " << str(sol.z_direction[3])
       << "); even integrality needs z divisible by " << sol.z_modulus << "; admissible z:";
    for (auto z : sol.admissible_z) os << ' ' << z;
    sol.ledger.push_back(os.str());

    if (sol.admissible_z.empty() || sol.admissible_z.front() != 0)
      throw Error(ErrorKind::VerificationFailure, "z = 0 is not admissible");
    if (sol.admissible_z.size() == 1) {
      sol.ledger.push_back("z = 0 is the only admissible value");
    } else if (p > 2 * q) {
      // Parity and sign constraints leave another z (always for p/q > 6, and
      // on (2,3) too). res at p/q is unit-equivalent to res at 4 - p/q, whose
      // range does force z = 0, so the roots are simple and s is the bound.
      sol.reflected = true;
      sol.reflected_p = -p + 4 * q;
      const auto mirror = solve_linear_system(sol.reflected_p, q);
      if (mirror.reflected || mirror.x[3] != Rational(prep_class_bound(sol.reflected_p, q)))
        throw Error(ErrorKind::VerificationFailure, "reflected system does not attain its bound");
      if (!unit_equivalent(res_poly(p, q), res_poly(sol.reflected_p, q)))
        throw Error(ErrorKind::VerificationFailure, "res is not unit-equivalent to its reflection");
      sol.ledger.push_back("res unit-equivalent to res at " + std::to_string(sol.reflected_p) + "/" +
                           std::to_string(q) + ", whose system attains its bound; so z = 0");
    } else {
      throw Error(ErrorKind::VerificationFailure, "z-argument does not single out z = 0");
    }
    sol.x = x0;
  }

  for (int j = 0; j < 3; ++j)
    if (sol.x[j] != Rational(profile.a[j]))
      throw Error(ErrorKind::VerificationFailure, "a" + std::to_string(j + 1) + " = " + str(sol.x[j]) +
                                                      " differs from the closed form " + std::to_string(profile.a[j]));
  if (sol.x[3] != Rational(profile.s_min))
    throw Error(ErrorKind::VerificationFailure, "s = " + str(sol.x[3]) + " differs from the closed form");
  return sol;
}

DetectionReport detected_slopes(std::int64_t p, std::int64_t q) {
  const auto pr = seminorm_profile(p, q);
  DetectionReport d;
  for (int j = 0; j < 3; ++j) d.detected[j] = pr.a[j] > 0;
  d.predicted = {p != 2 * q + 1 && p != 2 * q - 1, true, q > 1};
  return d;
}

}  // namespace csnorm
