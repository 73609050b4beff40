#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace rsl {

// Exact scalar field for every coefficient in the library. cpp_rational keeps
// the canonical form (coprime numerator/denominator, denominator > 0) on every
// operation.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

int sign_of(const Rational& r);

// "p/q", with "/q" omitted when q == 1. The inverse of parse_rational.
std::string str(const Rational& r);

// Accepts "p" or "p/q" with optional leading '-', q > 0 after normalization.
// Throws Error(SchemaError) on anything else.
Rational parse_rational(std::string_view s);

Int floor_int(const Rational& r);
Int ceil_int(const Rational& r);

// The unique rational with smallest denominator strictly inside (lo, hi)
// (smallest numerator magnitude among equals). Requires lo < hi.
Rational simplest_in_open(const Rational& lo, const Rational& hi);

}  // namespace rsl
