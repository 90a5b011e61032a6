#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace motzkin {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;  // reduced, denominator > 0

BigInt binomial(long long n, long long k);
BigInt int_pow(const BigInt& base, unsigned exp);

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// Exact rational -> BigInt; throws if not integral.
BigInt to_integer(const Rat& r);

std::string to_string(const BigInt& n);
std::string to_string(const Rat& r);  // "a" or "a/b"

}  // namespace motzkin
