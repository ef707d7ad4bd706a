#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "csnorm/cohomology.hpp"
#include "csnorm/polynomials.hpp"
#include "csnorm/reps.hpp"
#include "csnorm/respq.hpp"
#include "csnorm/roots.hpp"
#include "csnorm/seminorm.hpp"

namespace csnorm {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

// {"exp": "coef", ...} in increasing exponent order; coefficients are
// decimal strings so large integers survive.
Json to_json(const IntPoly& f);
IntPoly int_poly_from_json(const Json& j);

Json to_json(const Complex& z);  // [re, im]
Json to_json(const CMat2& m);    // [[a, b], [c, d]] of [re, im]
Json to_json(const SeminormProfile& pr);
Json to_json(const Root& r);
Json to_json(const RootSet& rs);
Json to_json(const ClassificationReport& rep);
Json to_json(const PRep& rep);
Json to_json(const PRepCounts& c);
Json to_json(const LinearSystemSolution& sol);
Json to_json(const SeifertCharacterCounts& c);
Json to_json(const DetPReport& d);
Json to_json(const D1Classification& d);
Json to_json(const D2Check& d);

}  // namespace csnorm
