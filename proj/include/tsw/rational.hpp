#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace tsw {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p", "-p" or "p/q" (q > 0 after sign normalization).
Rational parseRational(std::string_view text);

// "p/q", or just "p" for integers.
std::string formatRational(const Rational& r);

// Smallest integer >= r.
BigInt ceilRational(const Rational& r);

// r as long long; throws std::overflow_error if out of range.
long long toLongLong(const BigInt& v);

}  // namespace tsw
