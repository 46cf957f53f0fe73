#include "braid3/obstruction.hpp"

#include "braid3/errors.hpp"

namespace braid3 {

namespace {

const char* kCensusNote =
    "Not verified by this tool: literature exclusions (prime knots with at "
    "most 11 crossings, Ito; composite knots, Tao) may rule out residual "
    "candidates.";

const char* kUncertifiedNote =
    "Genus uncertified: the slope bound was evaluated at the genus lower "
    "bound, which is sound because the bound is non-increasing in genus.";

}  // namespace

void GenusBounds::validate() const {
  if (Rational(lower) > upper) {
    throw Error("inconsistent_bounds",
                "genus lower bound exceeds the upper bound");
  }
  if (certified &&
      (Rational(lower) != upper ||
       boost::multiprecision::denominator(upper) != 1)) {
    throw Error("inconsistent_bounds",
                "certified genus bounds must be equal integers");
  }
}

std::string Slope::str() const {
  if (q == 1) return p.str();
  return p.str() + "/" + q.str();
}

Slope SlopePair::negated() const { return Slope{-positive.p, positive.q}; }

const char* to_string(VerdictResult v) {
  switch (v) {
    case VerdictResult::NoPcs:
      return "NO_PCS";
    case VerdictResult::Residual:
      return "RESIDUAL";
    case VerdictResult::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

const char* to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::BoyerLines:
      return "BOYER_LINES";
    case VerdictReason::Hanselman:
      return "HANSELMAN";
  }
  return "?";
}

Rational thickness_bound_from_genus(const Rational& genus) {
  if (genus < 0) {
    throw Error("genus_too_small", "genus must be nonnegative");
  }
  return Rational(5, 3) * (genus + 1);
}

Rational hanselman_ratio(const Rational& th, const BigInt& genus) {
  if (genus < 2) {
    throw Error("genus_too_small",
                "the slope inequality requires genus >= 2, got " + genus.str());
  }
  if (th < 0) {
    throw Error("internal_error", "negative thickness bound");
  }
  return (th + 2 * Rational(genus)) / (2 * Rational(genus) * Rational(genus - 1));
}

BigInt hanselman_qmax(const Rational& th, const BigInt& genus) {
  return rational_floor(hanselman_ratio(th, genus));
}

ObstructionReport verdict(const BigInt& a2, const GenusBounds& gb,
                          const Rational& th_upper) {
  gb.validate();

  ObstructionReport report;
  report.a2 = a2;
  report.genus = gb;
  report.thickness_upper = th_upper;

  if (a2 != 0) {
    report.result = VerdictResult::NoPcs;
    report.reason = VerdictReason::BoyerLines;
    return report;
  }

  if (gb.lower >= 2) {
    report.ratio = hanselman_ratio(th_upper, gb.lower);
    report.q_max = rational_floor(*report.ratio);
    if (!gb.certified) report.notes.push_back(kUncertifiedNote);

    if (gb.lower >= 3 && *report.q_max == 0) {
      report.result = VerdictResult::NoPcs;
      report.reason = VerdictReason::Hanselman;
      return report;
    }

    report.result = VerdictResult::Residual;
    // {+-2} is possible only when the true genus could be exactly 2.
    if (Rational(2) >= Rational(gb.lower) && Rational(2) <= gb.upper) {
      report.residual.push_back(SlopePair{Slope{2, 1}});
    }
    for (BigInt q = 1; q <= *report.q_max; ++q) {
      report.residual.push_back(SlopePair{Slope{1, q}});
    }
    if (report.residual.empty()) {
      throw Error("internal_error", "residual verdict with no candidates");
    }
    report.notes.push_back(kCensusNote);
    return report;
  }

  report.result = VerdictResult::Inconclusive;
  report.notes.push_back(
      "Genus lower bound <= 1: the {+-1/q} candidate family is not bounded "
      "by the slope inequality.");
  report.notes.push_back(kCensusNote);
  return report;
}

}  // namespace braid3
