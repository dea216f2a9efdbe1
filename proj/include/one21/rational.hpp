// Exact rational arithmetic used everywhere in the library, backed by GMP
// through boost::multiprecision. All capacities, LP data and schedule
// durations are Rational; no floating point enters any feasibility or
// optimality decision.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace one21 {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Canonical fraction accessors (denominator > 0, gcd(|num|, den) = 1).
inline Integer numer(const Rational& q) { return numerator(q); }
inline Integer denom(const Rational& q) { return denominator(q); }

// num/den in canonical form; throws std::invalid_argument when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "p/q" and plain decimals like "-3.25"; all parsed exactly.
std::optional<Rational> try_parse_rational(std::string_view text);
Rational parse_rational(const std::string& text);  // throws std::invalid_argument

// "p" or "p/q", matching the parser.
std::string format_rational(const Rational& value);

// Short decimal rendering for reports (value printed exactly elsewhere).
std::string format_decimal(const Rational& value, int significant_digits = 6);

// Every finite double is an exact dyadic rational; throws on NaN/inf.
Rational rational_from_double(double value);

double to_double(const Rational& value);

// Largest multiple of a power of ten that does not exceed value, with step
// 10^-k <= max_error. Truncation from below: result <= value <= result + max_error.
Rational truncate_below(const Rational& value, const Rational& max_error);

}  // namespace one21
