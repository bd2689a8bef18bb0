#include <vector>

#include "doctest.h"
#include "vuza/polynomial.hpp"

using namespace vuza;

namespace {

IntPoly poly(std::vector<BigInt> coeffs) { return IntPoly(std::move(coeffs)); }

}  // namespace

TEST_CASE("basic arithmetic") {
  const IntPoly zero;
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(zero.coeff(3) == 0);

  const IntPoly xm1 = poly({-1, 1});
  const IntPoly xp1 = poly({1, 1});
  CHECK(xm1 * xp1 == poly({-1, 0, 1}));
  CHECK(xm1 + xp1 == poly({0, 2}));
  CHECK(xp1 - xp1 == zero);
  CHECK((xp1 - xp1).degree() == -1);
  CHECK(IntPoly::monomial(3).coeff(3) == 1);
  CHECK(IntPoly::cycle(4) == poly({-1, 0, 0, 0, 1}));
  CHECK(poly({1, 2, 0}).degree() == 1);  // trailing zeros trimmed
}

TEST_CASE("characteristic polynomials") {
  const IntPoly p = char_poly(Rhythm(4, {0, 1}));
  CHECK(p == poly({1, 1}));
  CHECK(p.eval_at_one() == 2);
  CHECK(char_poly(Rhythm(12, {0, 3, 6, 9})) ==
        poly({1, 0, 0, 1, 0, 0, 1, 0, 0, 1}));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == poly({-1, 1}));
  CHECK(cyclotomic(2) == poly({1, 1}));
  CHECK(cyclotomic(3) == poly({1, 1, 1}));
  CHECK(cyclotomic(4) == poly({1, 0, 1}));
  CHECK(cyclotomic(6) == poly({1, -1, 1}));
  CHECK(cyclotomic(12) == poly({1, 0, -1, 0, 1}));
  // first index whose cyclotomic polynomial has a coefficient outside -1..1
  CHECK(cyclotomic(105).coeff(7) == -2);
  CHECK(cyclotomic(105).degree() == 48);
}

TEST_CASE("exact division") {
  const auto q = exact_div(poly({-1, 0, 1}), poly({-1, 1}));
  REQUIRE(q.has_value());
  CHECK(*q == poly({1, 1}));
  CHECK_FALSE(exact_div(poly({1, 0, 1}), poly({-1, 1})).has_value());
  CHECK_FALSE(exact_div(poly({1, 1, 1}), poly({2, 1})).has_value());

  CHECK(divides(cyclotomic(8), IntPoly::cycle(16)));
  CHECK_FALSE(divides(cyclotomic(8), IntPoly::cycle(12)));
  CHECK(divides(cyclotomic(9), char_poly(Rhythm(9, {0, 3, 6}))));
  CHECK_FALSE(divides(cyclotomic(72), char_poly(Rhythm(72, {0, 8, 16, 18, 26, 34}))));
}

TEST_CASE("products modulo x^n - 1") {
  const auto ones = product_mod_cycle(char_poly(Rhythm(4, {0, 2})),
                                      char_poly(Rhythm(4, {0, 1})), 4);
  CHECK(ones == std::vector<BigInt>{1, 1, 1, 1});

  const auto clash = product_mod_cycle(char_poly(Rhythm(4, {0, 2})),
                                       char_poly(Rhythm(4, {0, 2})), 4);
  CHECK(clash == std::vector<BigInt>{2, 0, 2, 0});

  // wrap-around: x^3 * x^3 = x^6 = x^2 mod x^4 - 1
  const auto wrap = product_mod_cycle(IntPoly::monomial(3), IntPoly::monomial(3), 4);
  CHECK(wrap == std::vector<BigInt>{0, 0, 1, 0});
}
