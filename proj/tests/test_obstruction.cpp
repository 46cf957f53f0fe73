#include <doctest.h>

#include <vector>

#include "braid3/errors.hpp"
#include "braid3/obstruction.hpp"

using namespace braid3;

TEST_CASE("thickness_bound_from_genus") {
  CHECK(thickness_bound_from_genus(Rational(4)) == Rational(25, 3));
  CHECK(thickness_bound_from_genus(Rational(0)) == Rational(5, 3));
  CHECK(thickness_bound_from_genus(Rational(2)) == Rational(5));
  CHECK_THROWS_AS(thickness_bound_from_genus(Rational(-1)), Error);
}

TEST_CASE("hanselman ratio and q_max") {
  CHECK(hanselman_ratio(Rational(25, 3), 4) == Rational(49, 72));
  CHECK(to_ratio_string(hanselman_ratio(Rational(25, 3), 4)) == "49/72");
  CHECK(hanselman_qmax(Rational(25, 3), 4) == 0);

  CHECK(hanselman_ratio(Rational(5), 2) == Rational(9, 4));
  CHECK(hanselman_qmax(Rational(5), 2) == 2);

  CHECK(hanselman_ratio(Rational(0), 3) == Rational(1, 2));
  CHECK(hanselman_qmax(Rational(0), 3) == 0);

  CHECK_THROWS_AS(hanselman_qmax(Rational(1), 1), Error);
  CHECK_THROWS_AS(hanselman_qmax(Rational(1), 0), Error);
}

TEST_CASE("ratio is non-increasing in genus for fixed thickness") {
  const std::vector<Rational> grid = {Rational(0),     Rational(1, 3),
                                      Rational(1, 2),  Rational(1),
                                      Rational(5, 3),  Rational(5),
                                      Rational(25, 3), Rational(49, 6)};
  for (const auto& th : grid) {
    for (BigInt g = 2; g <= 60; ++g) {
      CHECK(hanselman_ratio(th, g + 1) <= hanselman_ratio(th, g));
    }
  }
}

TEST_CASE("genus >= 4 with the lemma thickness keeps the ratio under one") {
  for (BigInt g = 4; g <= 100; ++g) {
    const Rational th = thickness_bound_from_genus(Rational(g));
    const Rational ratio = hanselman_ratio(th, g);
    CHECK(ratio <= Rational(49, 72));
    CHECK(ratio < 1);
    CHECK(hanselman_qmax(th, g) == 0);
  }
}

TEST_CASE("verdict ladder on the reference inputs") {
  // nonzero a2 short-circuits
  const auto boyer = verdict(3, GenusBounds{3, Rational(3), true}, Rational(5));
  CHECK(boyer.result == VerdictResult::NoPcs);
  CHECK(boyer.reason == VerdictReason::BoyerLines);
  CHECK(boyer.residual.empty());

  // certified genus 4 with the lemma thickness
  const auto hans =
      verdict(0, GenusBounds{4, Rational(4), true}, Rational(25, 3));
  CHECK(hans.result == VerdictResult::NoPcs);
  CHECK(hans.reason == VerdictReason::Hanselman);
  REQUIRE(hans.ratio.has_value());
  CHECK(to_ratio_string(*hans.ratio) == "49/72");
  CHECK(*hans.q_max == 0);

  // certified genus 2: {+-2, +-1, +-1/2}
  const auto residual =
      verdict(0, GenusBounds{2, Rational(2), true}, Rational(5));
  CHECK(residual.result == VerdictResult::Residual);
  CHECK_FALSE(residual.reason.has_value());
  REQUIRE(residual.residual.size() == 3);
  CHECK(residual.residual[0].positive.str() == "2");
  CHECK(residual.residual[0].negated().str() == "-2");
  CHECK(residual.residual[1].positive.str() == "1");
  CHECK(residual.residual[2].positive.str() == "1/2");
  CHECK(*residual.q_max == 2);
}

TEST_CASE("the {+-2} pair appears only when genus 2 is possible") {
  const auto with = verdict(0, GenusBounds{2, Rational(3), false}, Rational(0));
  CHECK(with.result == VerdictResult::Residual);
  CHECK(with.residual.front().positive.str() == "2");

  const auto without = verdict(0, GenusBounds{3, Rational(4), false}, Rational(7));
  REQUIRE(without.result == VerdictResult::Residual);  // ratio (7+6)/12 > 1
  for (const auto& pair : without.residual) {
    CHECK(pair.positive.str() != "2");
  }
}

TEST_CASE("hanselman verdicts require a certified genus of at least 3") {
  const std::vector<Rational> th_grid = {Rational(0), Rational(1, 2), Rational(2),
                                         Rational(25, 3)};
  for (int lower = 0; lower <= 5; ++lower) {
    for (int upper = lower; upper <= 6; ++upper) {
      for (const auto& th : th_grid) {
        const GenusBounds gb{lower, Rational(upper), lower == upper};
        const auto report = verdict(0, gb, th);
        if (report.result == VerdictResult::NoPcs) {
          REQUIRE(report.reason == VerdictReason::Hanselman);
          CHECK(gb.lower >= 3);
        }
        if (report.result == VerdictResult::Residual) {
          CHECK_FALSE(report.residual.empty());
        }
        if (gb.lower <= 1) {
          CHECK(report.result == VerdictResult::Inconclusive);
        }
      }
    }
  }
}

TEST_CASE("inconclusive verdicts carry explanatory notes") {
  const auto report = verdict(0, GenusBounds{0, Rational(0), true}, Rational(0));
  CHECK(report.result == VerdictResult::Inconclusive);
  CHECK_FALSE(report.notes.empty());
  CHECK_FALSE(report.ratio.has_value());
}

TEST_CASE("inconsistent genus bounds are rejected") {
  CHECK_THROWS_AS(verdict(0, GenusBounds{3, Rational(2), false}, Rational(0)), Error);
  CHECK_THROWS_AS(verdict(0, GenusBounds{2, Rational(5, 2), true}, Rational(0)),
                  Error);
}

TEST_CASE("uncertified genus adds the conservative note") {
  const auto report = verdict(0, GenusBounds{3, Rational(4), false}, Rational(0));
  CHECK(report.result == VerdictResult::NoPcs);
  bool found = false;
  for (const auto& n : report.notes) {
    if (n.find("Genus uncertified") != std::string::npos) found = true;
  }
  CHECK(found);
}
