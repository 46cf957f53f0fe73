#include "braid3/numeric.hpp"

#include <limits>

#include "braid3/errors.hpp"

namespace braid3 {

std::string to_ratio_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt rational_floor(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);  // always > 0
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) --q;
  return q;
}

bool fits_int64(const BigInt& n) {
  return n >= std::numeric_limits<std::int64_t>::min() &&
         n <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t to_int64_checked(const BigInt& n) {
  if (!fits_int64(n)) {
    throw Error("internal_error", "integer too large for a 64-bit field: " + n.str());
  }
  return n.convert_to<std::int64_t>();
}

}  // namespace braid3
