#pragma once

// Per-mode extension problems. On the joint eigenspace (lambda, k) the
// second-order extension equation becomes the radial ODE
//   u'' + (1 - 2g') u' / rho - (lambda^2 rho^2 + mu) u = 0,  u(0) = 1,
// with mu = 2|lambda|(2k + n), solved by
//   u = e^{-w/2} U(a, 1 - g', w) / U(a, 1 - g', 0+),  w = |lambda| rho^2,
//   a = (1 - g' + 2k + n) / 2.

#include "crext/series.hpp"
#include "crext/spectral.hpp"

#include <array>
#include <string>
#include <vector>

namespace crext::extend {

using spectral::GammaParam;
using spectral::ModeIndex;

enum class Method { closed_form, numeric };

std::string to_string(Method m);

/// Near-zero data u = c0 (1 + a1 rho^2 + ...) + c1 rho^{2g'} (1 + ...).
struct SeriesData {
  double c0 = 1.0;
  double a1 = 0.0;
  double c1 = 0.0;
};

/// rho_max = max(8 / sqrt|lambda|, 12).
double rho_max_for(const ModeIndex& mode);
/// 1 / sqrt(mu + |lambda|): the radius where the series stops being trivially
/// convergent. Amplitude fits use the dyadic window [sigma/4, sigma].
double series_scale(const ModeIndex& mode);
/// Quarter-octave points sigma * 2^{-i/4}, i = 0..8.
std::vector<double> fit_window(const ModeIndex& mode);

/// Exact evaluation of the normalized decaying solution and its derivatives.
/// Uses the Frobenius branches below sigma/8 and Tricomi U quadrature above.
class ClosedFormMode {
 public:
  ClosedFormMode(double gamma_eff, const ModeIndex& mode);

  double gamma_eff() const { return gamma_eff_; }
  const ModeIndex& mode() const { return mode_; }
  double mu() const { return mu_; }
  double a() const { return a_; }
  double b() const { return b_; }
  /// U(a, b, 0+) = Gamma(1-b) / Gamma(a-b+1).
  double normalization() const { return norm_; }
  /// Coefficient of rho^{2g'} from the connection formula:
  ///   Gamma(b-1) Gamma(a-b+1) / (Gamma(a) Gamma(1-b)) |lambda|^{g'}.
  double upper_amplitude() const { return c1_; }
  double series_cutoff() const { return cutoff_; }
  const series::BranchSeries& lower() const { return lower_; }
  const series::BranchSeries& upper() const { return upper_; }

  /// u and its rho-derivatives up to `order` (<= 4). With use_series = false
  /// the quadrature path is used at every rho.
  std::array<double, 5> derivatives(double rho, int order, bool use_series = true) const;
  double value(double rho) const { return derivatives(rho, 0)[0]; }

  /// |u'' + (1-2g')u'/rho - (lambda^2 rho^2 + mu)u| relative to the sum of the
  /// magnitudes of its three terms, with derivatives from U'(a,b,z) = -a U(a+1,b+1,z).
  double equation_residual(double rho, bool use_series = false) const;

 private:
  double gamma_eff_;
  ModeIndex mode_;
  double mu_;
  double a_;
  double b_;
  double norm_;
  double c1_;
  double cutoff_;
  series::BranchSeries lower_;
  series::BranchSeries upper_;
};

struct ModeProfile {
  double gamma_eff = 0.5;
  ModeIndex mode;
  Method method = Method::closed_form;
  double mu = 0.0;
  double rho_max = 0.0;
  double sigma = 0.0;
  /// Increasing, log-uniform, in (0, rho_max].
  std::vector<double> grid;
  std::vector<double> values;
  std::vector<double> slopes;
  /// Samples on fit_window(mode), used by the amplitude fits.
  std::vector<double> fit_rho;
  std::vector<double> fit_values;
  SeriesData series;
  /// Max equation residual over the grid divided by the largest term magnitude.
  double residual = 0.0;
  /// |u(rho_max)|.
  double decay = 0.0;
};

struct SolveOptions {
  int grid_points = 600;
  double ode_tolerance = 1e-12;
};

/// Parameter errors for g' outside (0,2)\{1}; ConvergenceError if the
/// numeric matching cannot be fitted.
ModeProfile solve_mode(double gamma_eff, const ModeIndex& mode, Method method, const SolveOptions& options = {});

/// Lower-branch coefficients a_0..a_order.
std::vector<double> frobenius_series(double gamma_eff, const ModeIndex& mode, int order);

struct AmplitudeFit {
  double c0 = 0.0;
  double c1 = 0.0;
  /// ||residual|| / ||values||.
  double misfit = 0.0;
};

/// Least-squares amplitudes of the lower and upper Frobenius branches.
/// Throws ConvergenceError with fewer than three samples.
AmplitudeFit fit_amplitudes(double gamma_eff, const ModeIndex& mode, const std::vector<double>& rho,
                            const std::vector<double>& values);

/// -2g' c1 / c0 from the profile's window samples.
double extract_dtn(const ModeProfile& profile);

/// Exponent pair (r0, r1) fitted freely to the window samples: the basis is
/// {rho^{r0} S(r0), rho^{r1} S(r1)} with S(r) the series generated by the
/// mode recursion at trial exponent r. r0 is searched in [-0.45, 0.45] and r1
/// in [0.05, 3.95], skipping 0.02-neighbourhoods of the trial-series poles
/// r = 2g' - 2j, and refining the six best cells of a coarse scan. Only the
/// indicial roots 0 and 2g' make both columns solutions, so the misfit
/// vanishes there.
std::array<double, 2> fit_free_exponents(const ModeProfile& profile);

/// Fourth-order solution u = A W1 + B rho^{2[g]} W2 for gamma in (1,2).
struct FourthOrderModeSolution {
  GammaParam gp;
  ModeIndex mode;
  ModeProfile w1;
  ModeProfile w2;
  ClosedFormMode w1_eval;
  ClosedFormMode w2_eval;
  double phi = 0.0;
  double psi = 0.0;
  double A = 0.0;
  double B = 0.0;
  /// 2^{(m-gamma)/2} and 2^{(m-gamma~)/2}: the Poisson normalizations that turn
  /// u(0) = 1 profiles into the scattering solutions with unit data.
  double poisson_phi = 0.0;
  double poisson_psi = 0.0;
  /// Max relative residual of (L^2 - 4 lambda^2) u on the grid.
  double l4_residual = 0.0;

  /// u, and L_{[g]} u evaluated through the equations of W1, W2:
  ///   L u = 2 A rho^{-1} W1' + 2 B rho^{2[g]-1} W2'.
  double value(double rho) const;
  double l_value(double rho) const;
  /// (L^2 - 4 lambda^2) u and the sum of the magnitudes of its terms.
  std::array<double, 2> l4_value(double rho) const;
};

FourthOrderModeSolution assemble_fourth(const GammaParam& gp, const ModeIndex& mode, double phi, double psi,
                                        const SolveOptions& options = {});

/// Series coefficients of rho^{2j} (alpha) and rho^{2[g]+2j} (beta), j = 0, 1.
struct BranchCoefficients {
  double alpha0 = 0.0;
  double alpha1 = 0.0;
  double beta0 = 0.0;
  double beta1 = 0.0;
};

struct BoundaryValues {
  double b0 = 0.0;
  double b2 = 0.0;
  double b2frac = 0.0;
  double b2gamma = 0.0;
};

BranchCoefficients branch_coefficients(const FourthOrderModeSolution& sol);

/// The four boundary operators on one mode from branch coefficients, with
/// Delta_b -> -mu:
///   B0 = alpha0,  B2 = -4(1-g) alpha1 - ((1-g)/g) mu alpha0,
///   B2frac = -2g beta0,  B2gamma = 8g(1+g) beta1 - 2(1+g) mu beta0.
BoundaryValues boundary_from_coefficients(const BranchCoefficients& c, double frac, double mu);

BoundaryValues eval_boundary_ops(const FourthOrderModeSolution& sol);

}  // namespace crext::extend
