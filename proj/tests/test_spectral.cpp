#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crext/errors.hpp"
#include "crext/heisenberg.hpp"
#include "crext/spectral.hpp"

#include <cmath>

using namespace crext;
using namespace crext::spectral;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("mode eigenvalue") {
  CHECK(mode_eigenvalue({0.5, 0, 1}) == 1.0);
  CHECK(mode_eigenvalue({-2.0, 3, 2}) == 32.0);
  CHECK_THROWS_AS(ModeIndex({0.0, 0, 1}).validate(), DomainError);
  CHECK_THROWS_AS(ModeIndex({1.0, -1, 1}).validate(), DomainError);
  CHECK_THROWS_AS(ModeIndex({1.0, 0, 0}).validate(), DomainError);
}

TEST_CASE("GJMS symbol against frozen values") {
  // sqrt(2) Gamma(5/4) / Gamma(3/4)
  CHECK(rel(gjms_symbol(0.5, {0.5, 0, 1}), 1.04604962005310164895216212842) < 1e-13);
  CHECK(rel(gjms_symbol(0.5, {1.0, 0, 1}), 1.47933755959431944615541067886) < 1e-13);
}

TEST_CASE("GJMS symbol is increasing in k and homogeneous in lambda") {
  for (double g : {0.25, 0.5, 0.75}) {
    for (int n = 1; n <= 3; ++n) {
      double prev = 0.0;
      for (int k = 0; k <= 8; ++k) {
        double v = gjms_symbol(g, {1.0, k, n});
        CHECK(v > prev);
        prev = v;
        CHECK(rel(gjms_symbol(g, {3.0, k, n}), std::pow(3.0, g) * v) < 1e-13);
        CHECK(rel(gjms_symbol(g, {-3.0, k, n}), std::pow(3.0, g) * v) < 1e-13);
      }
    }
  }
}

TEST_CASE("theorem constants against frozen values") {
  CHECK(rel(theorem_constant(GammaParam(0.25, 1)).first, 0.477988797486124995363820001995) < 1e-13);
  CHECK(rel(theorem_constant(GammaParam(0.75, 2)).first, 2.09209924010620329790432425685) < 1e-13);
  CHECK_FALSE(theorem_constant(GammaParam(0.75, 2)).has_second);

  TheoremConstants c = theorem_constant(GammaParam(1.25, 1));
  REQUIRE(c.has_second);
  CHECK(rel(c.first, 1.91195518994449998145528000798) < 1e-13);
  CHECK(rel(c.second, -8.36839696042481319161729702739) < 1e-13);
  c = theorem_constant(GammaParam(1.5, 3));
  CHECK(rel(c.first, 2.0) < 1e-13);
  CHECK(rel(c.second, -2.0) < 1e-13);
  c = theorem_constant(GammaParam(1.75, 1));
  CHECK(rel(c.first, 2.78946565347493773053909900913) < 1e-13);
  CHECK(rel(c.second, -0.637318396648166660485093335994) < 1e-13);
}

TEST_CASE("second constant is negative on (1,2)") {
  for (double g = 1.05; g < 2.0; g += 0.1) CHECK(theorem_constant(GammaParam(g, 1)).second < 0.0);
}

TEST_CASE("alternative spellings of the constants agree") {
  for (double g : {0.1, 0.25, 0.5, 0.75, 0.9}) {
    CHECK(rel(sharp_trace_constant_form(g), theorem_constant(GammaParam(g, 1)).first) < 1e-12);
  }
  for (double g : {0.25, 0.5, 0.75, 1.25, 1.5, 1.75}) {
    for (int m = 2; m <= 4; ++m) {
      CHECK(rel(boundary_chain_form(g, m), theorem_constant(GammaParam(g, m - 1)).first) < 1e-12);
    }
  }
}

TEST_CASE("gamma parameter") {
  GammaParam gp(1.25, 2);
  CHECK(gp.frac() == doctest::Approx(0.25));
  CHECK(gp.floor() == 1);
  CHECK(gp.m() == 3);
  CHECK(gp.gamma_tilde() == doctest::Approx(0.75));
  CHECK(gp.weight_exponents().size() == 2);
  CHECK(GammaParam(0.5, 1).weight_exponents().size() == 1);
  CHECK_THROWS_AS(GammaParam(1.0, 1), DomainError);
  CHECK_THROWS_AS(GammaParam(0.0, 1), DomainError);
  CHECK_THROWS_AS(GammaParam(2.0, 1), DomainError);
  CHECK_THROWS_AS(validate_gamma(1.0), DomainError);
}

TEST_CASE("default grid has 135 modes") { CHECK(default_mode_grid().size() == 135); }

TEST_CASE("Laguerre modes are exact eigenfunctions of the sub-Laplacian") {
  for (int n = 1; n <= 2; ++n) {
    for (int k = 0; k <= 1; ++k) {
      for (const Rational& lam : {Rational(1), Rational(1, 2), Rational(-3, 2)}) {
        auto eig = heisenberg::sublaplacian_eigenvalue(heisenberg::laguerre_mode(lam, k, n));
        REQUIRE(eig.has_value());
        CHECK(eig->is_real());
        CHECK(eig->re == Rational(-2) * abs(lam) * Rational(2 * k + n));
      }
    }
  }
}

TEST_CASE("a non-eigenfunction is detected") {
  heisenberg::GaussianModeFunction f{Rational(1), heisenberg::HPoly::x(1, 0)};
  f.p = f.p + heisenberg::HPoly::constant(1, GaussianRational(1));
  CHECK_FALSE(heisenberg::sublaplacian_eigenvalue(f).has_value());
}
