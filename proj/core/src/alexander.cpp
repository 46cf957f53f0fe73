#include "braid3/alexander.hpp"

#include <mutex>

#include "braid3/errors.hpp"

namespace braid3 {

namespace {

LaurentPoly lp(std::map<int, BigInt> c) {
  return LaurentPoly::from_coefficients(std::move(c));
}

const LaurentMatrix2& generator_image(const ArtinLetter& l) {
  static const LaurentMatrix2 s1{{{{lp({{1, -1}}), lp({{0, 1}})},
                                   {LaurentPoly{}, lp({{0, 1}})}}}};
  static const LaurentMatrix2 s1_inv{{{{lp({{-1, -1}}), lp({{-1, 1}})},
                                       {LaurentPoly{}, lp({{0, 1}})}}}};
  static const LaurentMatrix2 s2{{{{lp({{0, 1}}), LaurentPoly{}},
                                   {lp({{1, 1}}), lp({{1, -1}})}}}};
  static const LaurentMatrix2 s2_inv{{{{lp({{0, 1}}), LaurentPoly{}},
                                       {lp({{0, 1}}), lp({{-1, -1}})}}}};
  if (l.index == 1) return l.sign > 0 ? s1 : s1_inv;
  return l.sign > 0 ? s2 : s2_inv;
}

void ensure_representation_ok() {
  static std::once_flag flag;
  static bool ok = false;
  std::call_once(flag, [] { ok = burau_representation_ok(); });
  if (!ok) {
    throw Error("internal_error", "Burau representation self-test failed");
  }
}

}  // namespace

LaurentMatrix2 LaurentMatrix2::identity() {
  return LaurentMatrix2{{{{LaurentPoly::constant(1), LaurentPoly{}},
                          {LaurentPoly{}, LaurentPoly::constant(1)}}}};
}

LaurentMatrix2 LaurentMatrix2::operator*(const LaurentMatrix2& rhs) const {
  LaurentMatrix2 out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.m[i][j] = m[i][0] * rhs.m[0][j] + m[i][1] * rhs.m[1][j];
    }
  }
  return out;
}

LaurentPoly LaurentMatrix2::det() const {
  return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

LaurentMatrix2 burau_reduced(const BraidWord& w) {
  LaurentMatrix2 out = LaurentMatrix2::identity();
  for (const auto& l : w.letters) out = out * generator_image(l);
  return out;
}

bool burau_representation_ok() {
  const BraidWord lhs{{{1, 1}, {2, 1}, {1, 1}}};
  const BraidWord rhs{{{2, 1}, {1, 1}, {2, 1}}};
  if (!(burau_reduced(lhs) == burau_reduced(rhs))) return false;
  for (int index : {1, 2}) {
    const BraidWord pair{{{index, 1}, {index, -1}}};
    if (!(burau_reduced(pair) == LaurentMatrix2::identity())) return false;
  }
  return true;
}

AlexanderData alexander_poly(const BraidWord& w) {
  ensure_representation_ok();
  if (!is_knot(w)) {
    throw Error("not_a_knot", "closure has " +
                                  std::to_string(component_count(w)) +
                                  " components");
  }

  LaurentMatrix2 b = burau_reduced(w);
  b.m[0][0] = b.m[0][0] - LaurentPoly::constant(1);
  b.m[1][1] = b.m[1][1] - LaurentPoly::constant(1);
  const LaurentPoly numerator = b.det();

  // det(B - I) = +-t^k (1 + t + t^2) delta for 3-braid closures; the
  // division is exact and the unit is fixed by symmetric normalization.
  const LaurentPoly cyclotomic = lp({{0, 1}, {1, 1}, {2, 1}});
  const LaurentPoly quotient = numerator.divided_exactly_by(cyclotomic);

  AlexanderData data;
  data.delta = normalize_symmetric(quotient);
  data.a2 = a2_from_delta(data.delta);
  data.genus_lower = data.delta.max_exponent();
  data.determinant = abs(data.delta.evaluate(-1));
  return data;
}

AlexanderData alexander_poly(const BandWord& w) {
  return alexander_poly(band_to_artin(w));
}

AlexanderData alexander_poly(const AnyWord& w) {
  return std::visit([](const auto& v) { return alexander_poly(v); }, w);
}

BigInt a2_from_delta(const LaurentPoly& delta) {
  BigInt total = 0;
  for (const auto& [e, c] : delta.coefficients()) {
    total += c * e * (e - 1);
  }
  if (total % 2 != 0) {
    throw Error("non_integral_a2",
                "delta''(1) is odd; the input is not a symmetric knot polynomial");
  }
  return total / 2;
}

}  // namespace braid3
