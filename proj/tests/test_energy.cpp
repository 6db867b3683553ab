#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crext/energy.hpp"
#include "crext/extend.hpp"

#include <cmath>
#include <random>

using namespace crext;
using namespace crext::energy;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

void require_all_pass(const report::VerificationReport& rep) {
  for (const auto& e : rep.entries()) {
    CAPTURE(e.check_id);
    CAPTURE(e.measured_error);
    CHECK(e.pass);
  }
}

}  // namespace

TEST_CASE("GaussSum radial action matches finite differences") {
  GaussSum f(0.3);
  f.add(1.0, 1, false, 0.8).add(-0.4, 0, true, 1.3).add(0.25, 2, true, 0.5);
  GaussSum r = f.radial();
  for (double rho : {0.3, 0.9, 1.7}) {
    const double h = 1e-4;
    const double d1 = (f.value(rho + h) - f.value(rho - h)) / (2 * h);
    const double d2 = (f.value(rho + h) - 2 * f.value(rho) + f.value(rho - h)) / (h * h);
    CHECK(std::abs(r.value(rho) - (d2 + (1 - 2 * 0.3) * d1 / rho)) < 1e-5);
    CHECK(std::abs(f.slope(rho) - d1) < 1e-7);
  }
}

TEST_CASE("GaussSum series coefficients") {
  GaussSum f(0.25);
  f.add(2.0, 0, false, 0.5).add(3.0, 1, false, 1.0).add(5.0, 0, true, 2.0);
  BranchCoefficients c = f.coefficients();
  CHECK(c.alpha0 == doctest::Approx(2.0));
  CHECK(c.alpha1 == doctest::Approx(-1.0 + 3.0));
  CHECK(c.beta0 == doctest::Approx(5.0));
  CHECK(c.beta1 == doctest::Approx(-10.0));
}

TEST_CASE("energy is positive and vanishes on zero") {
  for (double gamma : {0.5, 1.5}) {
    const GammaParam gp(gamma, 1);
    const ModeIndex mode{1.0, 1, 1};
    ModeEnergy me(gp, mode);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
      EnergyBreakdown e = me.energy(me.sample(random_test_function(gp, mode, rng, true)));
      CHECK(e.total > 0.0);
    }
    CHECK(me.energy(me.sample(GaussSum(weight_exponent(gp)))).total == 0.0);
  }
}

TEST_CASE("W = rho^2 exp(-rho^2) is an admissible perturbation") {
  const GammaParam gp(0.5, 1);
  const ModeIndex mode{1.0, 0, 1};
  ModeEnergy me(gp, mode);
  GaussSum w(weight_exponent(gp));
  w.add(1.0, 1, false, 1.0);
  Field f = me.sample(w);
  CHECK(me.boundary(f).b0 == 0.0);
  CHECK(me.energy(f).total > 0.0);
  CHECK(me.energy(f).quadrature_error_estimate < 1e-8 * me.energy(f).total);
}

TEST_CASE("minimizer energy equals the sharp right-hand side") {
  for (double gamma : {0.25, 0.75}) {
    const ModeIndex mode{2.0, 3, 2};
    const GammaParam gp(gamma, mode.n);
    ModeEnergy me(gp, mode);
    const double e = me.energy(me.sample(extend::ClosedFormMode(gamma, mode))).total;
    CHECK(rel(e, sharp_trace_rhs(gp, mode, 1.0, 0.0)) < 1e-6);
  }
  for (double gamma : {1.25, 1.75}) {
    const ModeIndex mode{1.0, 1, 1};
    const GammaParam gp(gamma, mode.n);
    ModeEnergy me(gp, mode);
    auto sol = extend::assemble_fourth(gp, mode, 0.8, -0.6, {64});
    const double e = me.energy(me.sample(sol)).total;
    CHECK(rel(e, sharp_trace_rhs(gp, mode, 0.8, -0.6)) < 1e-6);
    CHECK(sharp_trace_rhs_literal(gp, mode, 0.8, -0.6) < e);
  }
}

TEST_CASE("Dirichlet principle, trace inequality and symmetry on one mode per range") {
  for (double gamma : {0.5, 1.5}) {
    const GammaParam gp(gamma, 2);
    const ModeIndex mode{1.0, 3, 2};
    require_all_pass(dirichlet_principle_check(gp, mode, 5, 11));
    require_all_pass(trace_inequality_check(gp, mode, 1.0, 0.4, 0.5, 12));
    require_all_pass(symmetry_check(gp, mode, 5, 13));
  }
}

TEST_CASE("definition form is symmetric and equals the explicit form") {
  const GammaParam gp(1.25, 1);
  const ModeIndex mode{0.25, 0, 1};
  ModeEnergy me(gp, mode);
  std::mt19937_64 rng(21);
  Field u = me.sample(random_test_function(gp, mode, rng, false));
  Field v = me.sample(random_test_function(gp, mode, rng, false));
  const double uv = me.definition_form(u, v).total;
  const double vu = me.definition_form(v, u).total;
  const double scale = std::sqrt(me.energy(u).total * me.energy(v).total);
  CHECK(std::abs(uv - vu) < 1e-8 * scale);
  CHECK(std::abs(uv - me.form(u, v).total) < 1e-8 * scale);
}
