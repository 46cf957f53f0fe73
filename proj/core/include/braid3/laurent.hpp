#pragma once

#include <map>
#include <string>

#include "braid3/numeric.hpp"

namespace braid3 {

// Integer Laurent polynomial in one variable t. Invariant: no zero
// coefficient is ever stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // the zero polynomial
  static LaurentPoly constant(BigInt c);
  static LaurentPoly monomial(BigInt c, int exponent);
  static LaurentPoly from_coefficients(std::map<int, BigInt> coefficients);

  bool is_zero() const { return coefficients_.empty(); }
  const std::map<int, BigInt>& coefficients() const { return coefficients_; }
  BigInt coefficient(int exponent) const;

  int min_exponent() const;  // require nonzero polynomial
  int max_exponent() const;
  int breadth() const { return max_exponent() - min_exponent(); }

  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly shifted(int k) const;              // multiply by t^k
  LaurentPoly reciprocal_substitution() const;   // t -> t^-1
  LaurentPoly derivative() const;
  bool is_symmetric() const;                     // p(t) == p(t^-1)

  // Exact evaluation at an integer. Negative exponents require |x| == 1.
  BigInt evaluate(const BigInt& x) const;

  // Exact division in the Laurent ring; throws Error("exact_division_error")
  // when the divisor does not divide this polynomial.
  LaurentPoly divided_exactly_by(const LaurentPoly& divisor) const;

  // Report rendering, monomials in ascending exponent order:
  //   "2*t^-2 - 5*t^-1 + 7 - 5*t + 2*t^2"
  // Unit coefficients drop the "1*", the zero polynomial renders as "0".
  std::string str() const;

 private:
  std::map<int, BigInt> coefficients_;
};

// The unique +-t^k multiple q of p with q(t) = q(t^-1) and q(1) = 1.
// Throws Error("normalization_error") if p(1) is not +-1 or no unit
// multiple of p is symmetric.
LaurentPoly normalize_symmetric(const LaurentPoly& p);

}  // namespace braid3
