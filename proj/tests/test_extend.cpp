#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crext/errors.hpp"
#include "crext/extend.hpp"
#include "crext/spectral.hpp"
#include "crext/suite.hpp"

#include <cmath>

using namespace crext;
using namespace crext::extend;
using spectral::GammaParam;
using spectral::ModeIndex;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// -2g' c1 for the normalized decaying solution, from mpmath (30 digits).
struct DtnCase {
  double gamma;
  ModeIndex mode;
  double value;
};
const DtnCase kDtn[] = {
    {0.5, {1.0, 0, 1}, 1.47933755959431944615541067886},
    {0.25, {2.0, 3, 2}, 1.13754228709456423886228357775},
    {0.75, {0.5, 1, 3}, 7.01037072103033733777002534572},
};

bool entry_passes(const report::VerificationReport& rep, const std::string& id) {
  bool found = false;
  for (const auto& e : rep.entries()) {
    if (e.check_id == id) {
      found = true;
      if (!e.pass) return false;
    }
  }
  return found;
}

}  // namespace

TEST_CASE("DtN values against frozen oracles") {
  for (const DtnCase& c : kDtn) {
    CAPTURE(c.gamma);
    ClosedFormMode u(c.gamma, c.mode);
    CHECK(rel(-2.0 * c.gamma * u.upper_amplitude(), c.value) < 1e-12);
    CHECK(rel(extract_dtn(solve_mode(c.gamma, c.mode, Method::closed_form)), c.value) < 1e-8);
    CHECK(rel(extract_dtn(solve_mode(c.gamma, c.mode, Method::numeric)), c.value) < 1e-4);
  }
}

TEST_CASE("DtN equals the theorem constant times the GJMS symbol") {
  for (double g : {0.25, 0.5, 0.75}) {
    for (const ModeIndex& mode : {ModeIndex{0.25, 0, 1}, ModeIndex{4.0, 8, 3}, ModeIndex{1.0, 2, 2}}) {
      const double target = spectral::theorem_constant(GammaParam(g, mode.n)).first * spectral::gjms_symbol(g, mode);
      CHECK(rel(extract_dtn(solve_mode(g, mode, Method::closed_form)), target) < 1e-8);
    }
  }
}

TEST_CASE("first Frobenius coefficient") {
  const ModeIndex mode{1.5, 2, 1};
  const double mu = spectral::mode_eigenvalue(mode);
  for (double g : {0.25, 0.75, 0.4}) {
    std::vector<double> a = frobenius_series(g, mode, 3);
    CHECK(a[0] == 1.0);
    CHECK(rel(a[1], mu / (4.0 * (1.0 - g))) < 1e-14);
  }
}

TEST_CASE("profiles solve the equation, decay, and agree across paths") {
  const ModeIndex mode{0.5, 4, 2};
  ModeProfile pc = solve_mode(0.5, mode, Method::closed_form);
  ModeProfile pn = solve_mode(0.5, mode, Method::numeric);
  CHECK(pc.residual < 1e-8);
  CHECK(pn.residual < 1e-6);
  CHECK(pc.decay < 1e-10);
  REQUIRE(pc.grid == pn.grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < pc.values.size(); ++i) worst = std::max(worst, std::abs(pc.values[i] - pn.values[i]));
  CHECK(worst < 1e-6);
  for (double v : pc.values) CHECK(v > 0.0);
}

TEST_CASE("freely fitted exponents are 0 and 2 gamma") {
  for (double g : {0.25, 0.75}) {
    auto r = fit_free_exponents(solve_mode(g, {1.0, 1, 1}, Method::closed_form));
    CHECK(std::abs(r[0]) < 1e-3);
    CHECK(std::abs(r[1] - 2.0 * g) < 1e-3);
  }
}

TEST_CASE("DtN homogeneity in lambda") {
  const ModeIndex a{0.5, 2, 1};
  const ModeIndex b{1.0, 2, 1};
  const double g = 0.75;
  CHECK(rel(extract_dtn(solve_mode(g, b, Method::closed_form)),
            std::pow(2.0, g) * extract_dtn(solve_mode(g, a, Method::closed_form))) < 1e-8);
}

TEST_CASE("fourth-order branches") {
  for (double gamma : {1.25, 1.75}) {
    const ModeIndex mode{1.0, 1, 2};
    const GammaParam gp(gamma, mode.n);
    const spectral::TheoremConstants c = spectral::theorem_constant(gp);
    auto phi = assemble_fourth(gp, mode, 1.0, 0.0, {64});
    auto psi = assemble_fourth(gp, mode, 0.0, 1.0, {64});
    BoundaryValues b1 = eval_boundary_ops(phi);
    BoundaryValues b2 = eval_boundary_ops(psi);
    CHECK(rel(b1.b2gamma, c.first * spectral::gjms_symbol(gamma, mode)) < 1e-6);
    CHECK(rel(b2.b2, c.second * spectral::gjms_symbol(gp.gamma_tilde(), mode)) < 1e-6);
    CHECK(std::abs(b1.b2frac) < 1e-8);
    CHECK(std::abs(b2.b0) < 1e-8);
    CHECK(std::abs(b1.b0 - 1.0) < 1e-12);
    CHECK(std::abs(b2.b2frac - 1.0) < 1e-12);
    CHECK(phi.l4_residual < 1e-5);
  }
}

TEST_CASE("boundary operators from coefficients") {
  BranchCoefficients c{2.0, 3.0, 5.0, 7.0};
  BoundaryValues b = boundary_from_coefficients(c, 0.5, 4.0);
  CHECK(b.b0 == 2.0);
  CHECK(b.b2 == doctest::Approx(-4.0 * 0.5 * 3.0 - 1.0 * 4.0 * 2.0));
  CHECK(b.b2frac == doctest::Approx(-5.0));
  CHECK(b.b2gamma == doctest::Approx(8.0 * 0.5 * 1.5 * 7.0 - 2.0 * 1.5 * 4.0 * 5.0));
}

TEST_CASE("suite-level DtN checks on a small grid") {
  const std::vector<ModeIndex> modes{{0.5, 0, 1}, {1.0, 0, 1}, {2.0, 3, 3}};
  auto low = suite::verify_dtn_theorem(0.5, modes);
  CHECK(low.all_pass());
  CHECK(entry_passes(low, "dtn.cross_module_series"));
  CHECK(entry_passes(low, "dtn.homogeneity"));
  auto high = suite::verify_dtn_theorem(1.5, modes);
  CHECK(high.all_pass());
  CHECK(entry_passes(high, "dtn.poisson_psi_branch"));
}

TEST_CASE("parameter errors") {
  CHECK_THROWS_AS(solve_mode(1.0, {1.0, 0, 1}, Method::closed_form), DomainError);
  CHECK_THROWS_AS(solve_mode(0.5, {0.0, 0, 1}, Method::closed_form), DomainError);
  CHECK_THROWS_AS(fit_amplitudes(0.5, {1.0, 0, 1}, {0.1, 0.2}, {1.0, 1.0}), ConvergenceError);
}
