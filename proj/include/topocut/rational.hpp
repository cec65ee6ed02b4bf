#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace topocut {

// Exact arbitrary-precision rational scalar. cpp_rational keeps values in
// lowest terms with a positive denominator, which is exactly the invariant
// the certificate formats rely on. No floating point enters any predicate.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Rational& value) { return value.sign(); }
inline int sign_of(const Integer& value) { return value.sign(); }

// Parses "p", "-p", or "p/q". Throws Error(SchemaError) on malformed input
// or zero denominator.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& value);

}  // namespace topocut
