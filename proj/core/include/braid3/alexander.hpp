#pragma once

#include <array>

#include "braid3/laurent.hpp"
#include "braid3/numeric.hpp"
#include "braid3/word.hpp"

namespace braid3 {

// 2x2 matrix over the Laurent ring; carrier of the reduced Burau
// representation of the 3-strand braid group.
struct LaurentMatrix2 {
  std::array<std::array<LaurentPoly, 2>, 2> m;

  static LaurentMatrix2 identity();
  LaurentMatrix2 operator*(const LaurentMatrix2& rhs) const;
  LaurentPoly det() const;
  friend bool operator==(const LaurentMatrix2&, const LaurentMatrix2&) = default;
};

struct AlexanderData {
  LaurentPoly delta;    // symmetrized: delta(t) = delta(t^-1), delta(1) = 1
  BigInt a2;            // (1/2) * delta''(1)
  int genus_lower = 0;  // deg delta, a Seifert genus lower bound
  BigInt determinant;   // |delta(-1)|
};

// Generator images (one of the standard conventions):
//   sigma_1 -> [[-t, 1], [0, 1]]     sigma_2 -> [[1, 0], [t, -t]]
// The empty word maps to the identity.
LaurentMatrix2 burau_reduced(const BraidWord& w);

// Self-test: the generator images satisfy the braid relation and are
// invertible over the Laurent ring. Run automatically before the first
// Alexander computation.
bool burau_representation_ok();

// Alexander polynomial of the braid closure, computed exactly:
// det(burau_reduced(w) - I) is divisible by 1 + t + t^2 in the Laurent
// ring; the quotient, normalized symmetric, is delta. Requires a knot
// closure (band words are converted through band_to_artin first).
AlexanderData alexander_poly(const BraidWord& w);
AlexanderData alexander_poly(const BandWord& w);
AlexanderData alexander_poly(const AnyWord& w);

// (1/2) * sum c_n * n * (n-1); throws Error("non_integral_a2") when the sum
// is odd (possible only if the symmetry precondition is violated).
BigInt a2_from_delta(const LaurentPoly& delta);

}  // namespace braid3
