#pragma once

#include <json.hpp>

#include "monopath/difference_constraints.hpp"
#include "monopath/numeric.hpp"
#include "monopath/polynomial.hpp"
#include "monopath/verify.hpp"

namespace monopath::cli {

using Json = nlohmann::json;

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json to_json(const BigInt& value);
// Rationals are always "p/q" (or "p") strings.
Json to_json(const Rational& value);
Json to_json(const RationalVector& v);
Json to_json(const std::vector<Rational>& v);
// Coefficients, constant term first.
Json to_json(const Polynomial& p);
Json to_json(const SuiteReport& report, bool with_timing);

// One entry per certificate edge: value(u) - value(v) <= / < offset, with
// variables named prefix + 1-based index.
Json certificate_json(const DifferenceConstraintSystem& system,
                      const std::vector<std::size_t>& certificate, const std::string& prefix);

}  // namespace monopath::cli
