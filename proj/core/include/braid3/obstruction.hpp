#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braid3/numeric.hpp"

namespace braid3 {

struct GenusBounds {
  BigInt lower;      // from deg delta (Seifert bound)
  Rational upper;    // from the best band word, (length - 2) / 2
  bool certified = false;  // lower == upper

  void validate() const;  // throws Error("inconsistent_bounds")
};

// Surgery slope p/q, q > 0, gcd(p, q) = 1.
struct Slope {
  BigInt p;
  BigInt q;
  std::string str() const;
};

// Unordered pair {+r, -r} of candidate slopes.
struct SlopePair {
  Slope positive;
  Slope negated() const;
};

enum class VerdictResult { NoPcs, Residual, Inconclusive };
enum class VerdictReason { BoyerLines, Hanselman };

const char* to_string(VerdictResult v);
const char* to_string(VerdictReason r);

struct ObstructionReport {
  VerdictResult result = VerdictResult::Inconclusive;
  std::optional<VerdictReason> reason;  // set for NoPcs
  std::vector<SlopePair> residual;      // nonempty for Residual
  BigInt a2;
  GenusBounds genus;
  Rational thickness_upper;
  std::optional<Rational> ratio;  // (th + 2g)/(2g(g-1)) when evaluated
  std::optional<BigInt> q_max;
  std::vector<std::string> notes;
};

// (5/3)(g + 1): thickness bound of a 3-braid knot of genus g.
Rational thickness_bound_from_genus(const Rational& genus);

// Exact value of (th + 2g) / (2g(g-1)). Requires g >= 2; throws
// Error("genus_too_small") otherwise.
Rational hanselman_ratio(const Rational& th, const BigInt& genus);

// floor of hanselman_ratio; q_max = 0 means no {+-1/q} candidate survives.
BigInt hanselman_qmax(const Rational& th, const BigInt& genus);

// Decision ladder:
//   1. a2 != 0                      -> NoPcs / BoyerLines.
//   2. genus lower bound >= 2: evaluate q_max at the lower bound (sound:
//      the ratio is non-increasing in genus for fixed th). If the lower
//      bound is >= 3 and q_max = 0  -> NoPcs / Hanselman.
//   3. otherwise Residual with candidates {+-1/q} for 1 <= q <= q_max,
//      plus {+-2} iff 2 lies within the genus bounds; if the genus could
//      be <= 1 the {+-1/q} family is unbounded -> Inconclusive.
ObstructionReport verdict(const BigInt& a2, const GenusBounds& gb,
                          const Rational& th_upper);

}  // namespace braid3
