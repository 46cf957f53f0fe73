#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace braid3 {

// Exact arithmetic used throughout the library: arbitrary-precision
// integers and rationals. No floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string to_ratio_string(const Rational& r);

BigInt rational_floor(const Rational& r);

bool fits_int64(const BigInt& n);

// Throws Error("internal_error") if the value does not fit.
std::int64_t to_int64_checked(const BigInt& n);

}  // namespace braid3
