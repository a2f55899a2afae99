#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace strata {

// Exact arithmetic throughout the library. Areas, Euler characteristics and
// dimension counts are rational identities, so floating point is banned.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Narrowing conversions used at module boundaries; throw on overflow or on a
// non-integral rational.
long long to_int64(const Integer& n);
long long rational_to_int64(const Rational& q);

// "0", "2", "-1/8", ...
std::string rational_str(const Rational& q);

}  // namespace strata
