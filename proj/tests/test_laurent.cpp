#include <doctest.h>

#include <random>

#include "braid3/errors.hpp"
#include "braid3/laurent.hpp"

using namespace braid3;

namespace {

LaurentPoly lp(std::map<int, BigInt> c) {
  return LaurentPoly::from_coefficients(std::move(c));
}

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp_dist(-5, 5);
  std::uniform_int_distribution<int> coeff_dist(-9, 9);
  std::map<int, BigInt> c;
  const int terms = static_cast<int>(rng() % 6);
  for (int i = 0; i < terms; ++i) c[exp_dist(rng)] = coeff_dist(rng);
  return lp(std::move(c));
}

}  // namespace

TEST_CASE("basic arithmetic and zero stripping") {
  const LaurentPoly a = lp({{1, 1}, {0, 1}});   // t + 1
  const LaurentPoly b = lp({{1, 1}, {0, -1}});  // t - 1
  CHECK(a * b == lp({{2, 1}, {0, -1}}));
  CHECK((a - a).is_zero());
  CHECK(a + (-a) == LaurentPoly{});
  CHECK(lp({{3, 0}}).is_zero());
  CHECK(LaurentPoly::monomial(0, 5).is_zero());
}

TEST_CASE("distributivity on random polynomials") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a.reciprocal_substitution().reciprocal_substitution() == a);
  }
}

TEST_CASE("derivative") {
  const LaurentPoly p = lp({{1, 1}, {0, -1}, {-1, 1}});  // t - 1 + t^-1
  CHECK(p.derivative() == lp({{0, 1}, {-2, -1}}));
  CHECK(p.derivative().evaluate(1) == 0);  // symmetry forces this
  CHECK(LaurentPoly::constant(5).derivative().is_zero());
}

TEST_CASE("evaluation") {
  const LaurentPoly p = lp({{2, 2}, {0, -1}});
  CHECK(p.evaluate(3) == 17);
  const LaurentPoly q = lp({{-1, 1}, {1, 1}});
  CHECK(q.evaluate(1) == 2);
  CHECK(q.evaluate(-1) == -2);
  CHECK_THROWS_AS(q.evaluate(2), Error);
}

TEST_CASE("exact division") {
  const LaurentPoly num = lp({{4, 1}, {2, 1}, {0, 1}});      // t^4 + t^2 + 1
  const LaurentPoly div = lp({{2, 1}, {1, 1}, {0, 1}});      // t^2 + t + 1
  CHECK(num.divided_exactly_by(div) == lp({{2, 1}, {1, -1}, {0, 1}}));

  // Laurent shifts pass through division.
  CHECK(num.shifted(-3).divided_exactly_by(div.shifted(2)) ==
        lp({{2, 1}, {1, -1}, {0, 1}}).shifted(-5));

  CHECK_THROWS_AS(lp({{2, 1}, {0, 1}}).divided_exactly_by(lp({{1, 1}, {0, 1}})),
                  Error);
  CHECK_THROWS_AS(num.divided_exactly_by(LaurentPoly{}), Error);
  CHECK(LaurentPoly{}.divided_exactly_by(div).is_zero());
}

TEST_CASE("division inverts multiplication on random polynomials") {
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(rng);
    auto b = random_poly(rng);
    if (b.is_zero()) b = LaurentPoly::constant(1);
    CHECK((a * b).divided_exactly_by(b) == a);
  }
}

TEST_CASE("normalize_symmetric") {
  // -t^2 + t - 1 -> t - 1 + t^-1
  const LaurentPoly p = lp({{2, -1}, {1, 1}, {0, -1}});
  const LaurentPoly n = normalize_symmetric(p);
  CHECK(n == lp({{1, 1}, {0, -1}, {-1, 1}}));
  CHECK(n.evaluate(1) == 1);
  CHECK(n.is_symmetric());

  CHECK(normalize_symmetric(LaurentPoly::monomial(-1, 7)) ==
        LaurentPoly::constant(1));

  CHECK_THROWS_AS(normalize_symmetric(LaurentPoly{}), Error);
  CHECK_THROWS_AS(normalize_symmetric(lp({{0, 2}})), Error);           // p(1) = 2
  CHECK_THROWS_AS(normalize_symmetric(lp({{0, 2}, {1, -1}})), Error);  // odd span
  CHECK_THROWS_AS(normalize_symmetric(lp({{2, -1}, {1, 1}, {0, 1}})),
                  Error);  // no palindrome
}

TEST_CASE("report rendering") {
  CHECK(lp({{-2, 2}, {-1, -5}, {0, 7}, {1, -5}, {2, 2}}).str() ==
        "2*t^-2 - 5*t^-1 + 7 - 5*t + 2*t^2");
  CHECK(lp({{-1, 1}, {0, -1}, {1, 1}}).str() == "t^-1 - 1 + t");
  CHECK(lp({{-1, -1}, {0, 3}, {1, -1}}).str() == "-t^-1 + 3 - t");
  CHECK(LaurentPoly{}.str() == "0");
  CHECK(LaurentPoly::constant(1).str() == "1");
  CHECK(LaurentPoly::constant(-1).str() == "-1");
  CHECK(lp({{3, -7}}).str() == "-7*t^3");
  CHECK(lp({{1, 1}}).str() == "t");
}

TEST_CASE("degree and breadth") {
  const LaurentPoly p = lp({{-2, 1}, {3, 4}});
  CHECK(p.min_exponent() == -2);
  CHECK(p.max_exponent() == 3);
  CHECK(p.breadth() == 5);
  CHECK_THROWS_AS(LaurentPoly{}.max_exponent(), Error);
}
