#pragma once

// Per-mode Dirichlet energies. On the (lambda, k) mode the weighted radial
// energies read
//   gamma < 1:  int (u'^2 + (mu + lambda^2 rho^2) u^2) rho^{1-2g} d rho
//   gamma > 1:  int ((L u)^2 - 4 lambda^2 u^2) rho^{1-2[g]} d rho + (2 mu/[g]) B0(u) B2frac(u)
// with L = d^2 + (1-2[g]) rho^{-1} d - lambda^2 rho^2 - mu. All integrals use one
// fixed tanh-sinh rule on [0, rho_max]; fields are sampled on its nodes so the
// forms are exactly bilinear in the samples.

#include "crext/extend.hpp"
#include "crext/quadrature.hpp"
#include "crext/report.hpp"
#include "crext/spectral.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace crext::energy {

using extend::BoundaryValues;
using extend::BranchCoefficients;
using spectral::GammaParam;
using spectral::ModeIndex;

struct EnergyBreakdown {
  double bulk = 0.0;
  double boundary = 0.0;
  double total = 0.0;
  /// |I(h) - I(2h)| of the bulk integral.
  double quadrature_error_estimate = 0.0;
};

/// The weight exponent e: gamma for gamma < 1, [gamma] otherwise.
double weight_exponent(const GammaParam& gp);

/// coef * rho^{2j + 2e*shifted} * exp(-kappa rho^2).
struct GaussTerm {
  double coef = 0.0;
  int j = 0;
  bool shifted = false;
  double kappa = 1.0;
};

/// Finite sums of GaussTerms. The radial operator R = d^2 + (1-2e) rho^{-1} d
/// maps this class to itself exactly:
///   R(rho^p E) = [p(p-2e) rho^{p-2} - 2 kappa (2p+2-2e) rho^p + 4 kappa^2 rho^{p+2}] E,
/// and p(p-2e) vanishes whenever p - 2 would leave the class.
class GaussSum {
 public:
  explicit GaussSum(double e) : e_(e) {}

  GaussSum& add(double coef, int j, bool shifted, double kappa);
  double exponent() const { return e_; }
  const std::vector<GaussTerm>& terms() const { return terms_; }

  double value(double rho) const;
  double slope(double rho) const;

  GaussSum radial() const;
  /// R - lambda^2 rho^2 - mu.
  GaussSum mode_operator(const ModeIndex& mode) const;
  /// (R - lambda^2 rho^2 - mu)^2 - 4 lambda^2.
  GaussSum fourth_operator(const ModeIndex& mode) const;
  GaussSum scaled(double c) const;

  /// alpha_i and beta_i: Taylor coefficients of rho^{2i} and rho^{2e+2i}.
  BranchCoefficients coefficients() const;

 private:
  double e_;
  std::vector<GaussTerm> terms_;
};

/// A function on the quadrature nodes together with the data the forms need.
/// op is the mode operator (L2 for gamma < 1, L for gamma > 1) applied to the
/// function and op2 is the fourth-order operator (gamma > 1 only).
struct Field {
  std::vector<double> value;
  std::vector<double> slope;
  std::vector<double> op;
  std::vector<double> op2;
  BranchCoefficients coeffs;

  /// a * this + b * other.
  Field combine(double a, const Field& other, double b) const;
};

class ModeEnergy {
 public:
  /// level 7 gives a step-halving change below 1e-10 on the default grid.
  ModeEnergy(const GammaParam& gp, const ModeIndex& mode, int level = 7);

  const GammaParam& gamma() const { return gp_; }
  const ModeIndex& mode() const { return mode_; }
  double mu() const { return mu_; }
  const quad::TanhSinhRule& rule() const { return rule_; }

  Field sample(const GaussSum& f) const;
  /// gamma < 1 minimizer with u(0) = 1 (operator fields are zero).
  Field sample(const extend::ClosedFormMode& u) const;
  /// gamma > 1 minimizer; L u from the equations of W1, W2.
  Field sample(const extend::FourthOrderModeSolution& sol) const;

  BoundaryValues boundary(const Field& f) const;

  /// The symmetric forms whose diagonals are the energies above.
  EnergyBreakdown form(const Field& u, const Field& v) const;
  EnergyBreakdown energy(const Field& u) const { return form(u, u); }

  /// The energy pairing built from the operator itself:
  ///   gamma < 1:  -int U L2 V w + B0(U) B2gamma(V)
  ///   gamma > 1:   int U L4 V w + B0(U) B2gamma(V) - B2frac(U) B2(V)
  /// It is not manifestly symmetric.
  EnergyBreakdown definition_form(const Field& u, const Field& v) const;

 private:
  double integrate(const std::vector<double>& integrand, double* error) const;

  GammaParam gp_;
  ModeIndex mode_;
  double mu_;
  double e_;
  quad::TanhSinhRule rule_;
  std::vector<double> weight_;
};

/// Energy of the gamma < 1 closed-form minimizer behind `profile`.
EnergyBreakdown mode_energy_2(const extend::ModeProfile& profile, const GammaParam& gp);
EnergyBreakdown mode_energy_4(const extend::FourthOrderModeSolution& sol, const GammaParam& gp);

/// Random member of the test class. With `constrained` the terms vanish at
/// rho = 0 (j >= 1), so B0 = 0 and, for gamma > 1, B2frac = 0. Otherwise
/// j = 0 terms are allowed in both branches.
GaussSum random_test_function(const GammaParam& gp, const ModeIndex& mode, std::mt19937_64& rng, bool constrained);

/// Sharp right-hand side: theorem constants times the symbols times the data
/// squared. The psi term uses |second|; see sharp_trace_rhs_literal.
double sharp_trace_rhs(const GammaParam& gp, const ModeIndex& mode, double phi, double psi);
/// Same with the signed second constant (negative for every gamma in (1,2)).
double sharp_trace_rhs_literal(const GammaParam& gp, const ModeIndex& mode, double phi, double psi);

struct CheckTolerances {
  double equality = 1e-6;
  double excess = 1e-6;
  double cross_term = 1e-6;
  double symmetry = 1e-8;
  double quadrature = 1e-8;
};

/// E(u_D + tW) - E(u_D) = t^2 E(W) for t in {+-0.5, +-1}, Q(u_D, W) = 0 and
/// E(W) > 0 over `trials` seeded perturbations with vanishing boundary data.
report::VerificationReport dirichlet_principle_check(const GammaParam& gp, const ModeIndex& mode, int trials,
                                                     std::uint64_t seed, const CheckTolerances& tol = {});

/// Minimizer energy against the sharp right-hand side for data (phi, psi)
/// (psi ignored for gamma < 1), plus the excess of one perturbation of size
/// `scale` relative to the minimizer energy.
report::VerificationReport trace_inequality_check(const GammaParam& gp, const ModeIndex& mode, double phi,
                                                  double psi, double scale, std::uint64_t seed,
                                                  const CheckTolerances& tol = {});

/// Q(U,V) = Q(V,U) for the definition form over `pairs` random test
/// functions, and agreement of the definition form with the symmetric form.
report::VerificationReport symmetry_check(const GammaParam& gp, const ModeIndex& mode, int pairs,
                                          std::uint64_t seed, const CheckTolerances& tol = {});

}  // namespace crext::energy
