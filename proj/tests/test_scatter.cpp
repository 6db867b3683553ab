#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crext/errors.hpp"
#include "crext/scatter.hpp"

#include <random>

using namespace crext;
using namespace crext::scatter;

namespace {

Rational random_s(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(rng), den(rng));
}

// m - 2s + j = 0 or 2s - m + j = 0 for some 1 <= j <= 8.
bool resonant(int m, const Rational& s) {
  const Rational d = 2 * s - m;
  return denominator(d) == 1 && abs(d) >= 1 && abs(d) <= 8;
}

}  // namespace

TEST_CASE("p_2 at m = 3 is x^2 + (2s - 4)") {
  ScatterRecursion rec(3);
  UniPoly p2 = rec.recurrence_p(2);
  CHECK(p2.degree() == 2);
  CHECK(p2.coeff(2) == RatPoly(Rational(1)));
  CHECK(p2.coeff(1).is_zero());
  CHECK(p2.coeff(0) == RatPoly(std::vector<Rational>{Rational(-4), Rational(2)}));
}

TEST_CASE("first coefficients by hand") {
  // f_1 = -L1 f_0 / (m - 2s + 1); f_2 = (L1^2 - (m-2s+1) L2) / (2 (m-2s+1)(m-2s+2)) f_0.
  ScatterRecursion rec(2);
  const Rational s(1, 3);
  const Rational d1 = Rational(2) - 2 * s + 1;
  const Rational d2 = Rational(2) - 2 * s + 2;
  BiOpPoly f1 = rec.expansion_coefficient(1, s).scaled_operator();
  CHECK(f1 == RatPoly(Rational(-1) / d1) * BiOpPoly::l1());
  BiOpPoly f2 = rec.expansion_coefficient(2, s).scaled_operator();
  BiOpPoly expected = RatPoly(Rational(1) / (2 * d1 * d2)) * (BiOpPoly::l1() * BiOpPoly::l1()) -
                      RatPoly(Rational(1) / (2 * d2)) * BiOpPoly::l2();
  CHECK(f2 == expected);
}

TEST_CASE("closed form equals the direct recursion for l <= 8 at random rational s") {
  std::mt19937_64 rng(99);
  for (int m = 2; m <= 4; ++m) {
    ScatterRecursion rec(m);
    int samples = 0;
    while (samples < 20) {
      Rational s = random_s(rng);
      if (resonant(m, s)) continue;
      for (int l = 0; l <= 8; ++l) {
        CAPTURE(l);
        CHECK(rec.expansion_coefficient(l, s).scaled_operator() == rec.direct_recursion(l, s));
      }
      ++samples;
    }
  }
}

TEST_CASE("duality P_l^s = G_l^{m-s}") {
  std::mt19937_64 rng(7);
  for (int m = 2; m <= 4; ++m) {
    ScatterRecursion rec(m);
    int samples = 0;
    while (samples < 20) {
      Rational s = random_s(rng);
      if (resonant(m, s)) continue;
      for (int l = 0; l <= 8; ++l) CHECK(rec.check_duality(l, s));
      ++samples;
    }
  }
}

TEST_CASE("parity and monicity for l <= 12") {
  for (int m = 2; m <= 5; ++m) {
    ScatterRecursion rec(m);
    for (int l = 0; l <= 12; ++l) {
      CHECK(rec.leading_coefficient_check(l));
      CHECK(rec.recurrence_p(l).has_parity(l % 2));
      CHECK(rec.recurrence_g(l).has_parity(l % 2));
      CHECK(rec.recurrence_p(l).degree() == l);
    }
  }
}

TEST_CASE("lifted operators are homogeneous of weight l") {
  ScatterRecursion rec(3);
  for (int l = 1; l <= 8; ++l) CHECK(lift_operator(rec.recurrence_p(l)).homogeneous_degree() == l);
}

TEST_CASE("resonant s raises PoleError") {
  ScatterRecursion rec(3);
  // m - 2s + 1 = 0 at s = 2.
  CHECK_THROWS_AS(rec.expansion_coefficient(1, Rational(2)), PoleError);
  CHECK_THROWS_AS(rec.direct_recursion(3, Rational(2)), PoleError);
  CHECK_THROWS_AS(ScatterRecursion(1), DomainError);
}
