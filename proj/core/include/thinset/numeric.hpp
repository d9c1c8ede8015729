#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace thinset {

// Element values and horizons fit comfortably in 64 bits; everything derived
// from them (reciprocal sums, density ratios, certificate bounds) is computed
// over unbounded integers / exact rationals.
using i64 = std::int64_t;
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational ratio(const Int& num, const Int& den);
Rational ratio(i64 num, i64 den);

// Renders a rational as "p/q" (q always printed, "0/1" for zero).
std::string to_pq(const Rational& value);

// Accepts "p/q" or a plain integer.
Rational parse_rational(const std::string& text);

// floor(log2 n) for n >= 1.
int floor_log2(i64 n);

// floor(sqrt n) for n >= 0.
i64 isqrt(i64 n);

Int int_pow(const Int& base, i64 exp);

}  // namespace thinset
