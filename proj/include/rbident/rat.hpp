#pragma once
// Exact rational arithmetic. All numeric computation in the library runs on
// arbitrary-precision rationals; no floating point exists anywhere.
#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace rbident {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Serializes as "p/q" with the "/q" omitted when q == 1. Always reduced,
// denominator positive (cpp_rational maintains both invariants).
std::string ratToString(const Rat& r);

// Parses "p", "-p", "p/q" (optional whitespace at the ends). Throws
// std::invalid_argument on malformed input or zero denominator.
Rat ratFromString(const std::string& text);

// Binomial coefficient as an exact rational; 0 outside 0 <= k <= n.
Rat binomial(long long n, long long k);

}  // namespace rbident
