#include "braid3/laurent.hpp"

#include <utility>

#include "braid3/errors.hpp"

namespace braid3 {

LaurentPoly LaurentPoly::constant(BigInt c) { return monomial(std::move(c), 0); }

LaurentPoly LaurentPoly::monomial(BigInt c, int exponent) {
  LaurentPoly p;
  if (c != 0) p.coefficients_.emplace(exponent, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(std::map<int, BigInt> coefficients) {
  LaurentPoly p;
  p.coefficients_ = std::move(coefficients);
  for (auto it = p.coefficients_.begin(); it != p.coefficients_.end();) {
    it = it->second == 0 ? p.coefficients_.erase(it) : std::next(it);
  }
  return p;
}

BigInt LaurentPoly::coefficient(int exponent) const {
  const auto it = coefficients_.find(exponent);
  return it == coefficients_.end() ? BigInt(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (is_zero()) throw Error("internal_error", "min_exponent of the zero polynomial");
  return coefficients_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (is_zero()) throw Error("internal_error", "max_exponent of the zero polynomial");
  return coefficients_.rbegin()->first;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  std::map<int, BigInt> out = coefficients_;
  for (const auto& [e, c] : rhs.coefficients_) out[e] += c;
  return from_coefficients(std::move(out));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  std::map<int, BigInt> out = coefficients_;
  for (const auto& [e, c] : rhs.coefficients_) out[e] -= c;
  return from_coefficients(std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
  std::map<int, BigInt> out;
  for (const auto& [e, c] : coefficients_) out.emplace(e, -c);
  return from_coefficients(std::move(out));
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  std::map<int, BigInt> out;
  for (const auto& [e1, c1] : coefficients_) {
    for (const auto& [e2, c2] : rhs.coefficients_) {
      out[e1 + e2] += c1 * c2;
    }
  }
  return from_coefficients(std::move(out));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  std::map<int, BigInt> out;
  for (const auto& [e, c] : coefficients_) out.emplace(e + k, c);
  return from_coefficients(std::move(out));
}

LaurentPoly LaurentPoly::reciprocal_substitution() const {
  std::map<int, BigInt> out;
  for (const auto& [e, c] : coefficients_) out.emplace(-e, c);
  return from_coefficients(std::move(out));
}

LaurentPoly LaurentPoly::derivative() const {
  std::map<int, BigInt> out;
  for (const auto& [e, c] : coefficients_) {
    if (e != 0) out[e - 1] += c * e;
  }
  return from_coefficients(std::move(out));
}

bool LaurentPoly::is_symmetric() const {
  for (const auto& [e, c] : coefficients_) {
    if (coefficient(-e) != c) return false;
  }
  return true;
}

BigInt LaurentPoly::evaluate(const BigInt& x) const {
  if (is_zero()) return 0;
  if (min_exponent() < 0 && x != 1 && x != -1) {
    throw Error("internal_error",
                "evaluation with negative exponents requires x = +-1");
  }
  BigInt total = 0;
  for (const auto& [e, c] : coefficients_) {
    if (x == 1) {
      total += c;
    } else if (x == -1) {
      total += (e % 2 == 0) ? c : -c;
    } else {
      BigInt p = 1;
      for (int k = 0; k < e; ++k) p *= x;
      total += c * p;
    }
  }
  return total;
}

LaurentPoly LaurentPoly::divided_exactly_by(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) {
    throw Error("exact_division_error", "division by the zero polynomial");
  }
  if (is_zero()) return {};

  // Clear units so both are ordinary polynomials, divide from the top.
  const int shift_p = min_exponent();
  const int shift_q = divisor.min_exponent();
  std::map<int, BigInt> rem;
  for (const auto& [e, c] : coefficients_) rem.emplace(e - shift_p, c);
  const int deg_q = divisor.max_exponent() - shift_q;
  const BigInt& lead_q = divisor.coefficients().rbegin()->second;

  std::map<int, BigInt> quot;
  while (!rem.empty()) {
    const int deg_r = rem.rbegin()->first;
    const BigInt lead_r = rem.rbegin()->second;
    if (deg_r < deg_q || lead_r % lead_q != 0) {
      throw Error("exact_division_error", "polynomial division is not exact");
    }
    const BigInt factor = lead_r / lead_q;
    const int offset = deg_r - deg_q;
    quot.emplace(offset, factor);
    for (const auto& [e, c] : divisor.coefficients()) {
      const int ee = e - shift_q + offset;
      auto it = rem.find(ee);
      const BigInt v = (it == rem.end() ? BigInt(0) : it->second) - factor * c;
      if (v == 0) {
        if (it != rem.end()) rem.erase(it);
      } else {
        rem[ee] = v;
      }
    }
  }

  std::map<int, BigInt> out;
  for (auto& [e, c] : quot) out.emplace(e + shift_p - shift_q, std::move(c));
  return from_coefficients(std::move(out));
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : coefficients_) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.str();
    } else {
      if (mag != 1) {
        out += mag.str();
        out += '*';
      }
      out += 't';
      if (e != 1) {
        out += '^';
        out += std::to_string(e);
      }
    }
  }
  return out;
}

LaurentPoly normalize_symmetric(const LaurentPoly& p) {
  if (p.is_zero()) {
    throw Error("normalization_error", "cannot normalize the zero polynomial");
  }
  const BigInt at_one = p.evaluate(1);
  if (at_one != 1 && at_one != -1) {
    throw Error("normalization_error",
                "value at t=1 is " + at_one.str() + ", expected +-1");
  }
  LaurentPoly q = at_one == 1 ? p : -p;
  const int lo = q.min_exponent();
  const int hi = q.max_exponent();
  if ((lo + hi) % 2 != 0) {
    throw Error("normalization_error",
                "no unit multiple is symmetric (odd exponent span)");
  }
  q = q.shifted(-(lo + hi) / 2);
  if (!q.is_symmetric()) {
    throw Error("normalization_error", "no unit multiple is symmetric");
  }
  return q;
}

}  // namespace braid3
