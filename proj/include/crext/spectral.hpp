#pragma once

// Joint spectrum of (Delta_b, T) on H^n and the Gamma-ratio multiplier of the
// CR fractional GJMS operator. Convention: functions e^{i lambda t} in t, so
// T = 2 d_t acts as 2 i lambda and |T| as 2|lambda|.

#include <string>
#include <vector>

namespace crext::spectral {

struct ModeIndex {
  double lambda = 1.0;
  int k = 0;
  int n = 1;

  /// Throws DomainError unless lambda != 0, k >= 0, n >= 1.
  void validate() const;
  std::string label() const;
  friend bool operator==(const ModeIndex&, const ModeIndex&) = default;
};

class GammaParam {
 public:
  /// gamma in (0,2) minus {1}; m = n + 1.
  GammaParam(double gamma, int n);

  double gamma() const { return gamma_; }
  /// [gamma], the fractional part.
  double frac() const { return frac_; }
  /// floor(gamma), 0 or 1.
  int floor() const { return floor_; }
  /// floor(gamma) + 1.
  int order() const { return floor_ + 1; }
  int n() const { return n_; }
  int m() const { return n_ + 1; }
  /// (m + gamma) / 2.
  double s() const { return 0.5 * (m() + gamma_); }
  /// (m + 1 - [gamma]) / 2.
  double s_tilde() const { return 0.5 * (m() + 1 - frac_); }
  /// 1 - [gamma], the second weight for gamma in (1,2).
  double gamma_tilde() const { return 1.0 - frac_; }
  /// Exponent set: {gamma} for gamma < 1, {gamma, 1 - [gamma]} otherwise.
  std::vector<double> weight_exponents() const;

 private:
  double gamma_;
  double frac_;
  int floor_;
  int n_;
};

/// Throws ConfigError-compatible DomainError naming the excluded value.
void validate_gamma(double gamma);

/// mu = 2|lambda|(2k + n), the eigenvalue of -Delta_b on the (lambda, k) eigenspace.
double mode_eigenvalue(const ModeIndex& mode);

/// (4|lambda|)^g' Gamma((1+g'+2k+n)/2) / Gamma((1-g'+2k+n)/2), g' = gamma_eff.
double gjms_symbol(double gamma_eff, const ModeIndex& mode);

struct TheoremConstants {
  /// Constant multiplying P_gamma phi in B_{2gamma}.
  double first = 0.0;
  /// gamma in (1,2) only: constant multiplying P_{gamma~} psi in B_2. It is
  /// negative on the whole range.
  double second = 0.0;
  bool has_second = false;
};

/// gamma < 1:  2^{1-2g} Gamma(1-g)/Gamma(g).
/// gamma > 1:  2^{3-2g} Gamma(2-g)/Gamma(g) and
///             2^{1-2t} (t/(1-t)) Gamma(-t)/Gamma(t), t = 1 - [gamma].
TheoremConstants theorem_constant(const GammaParam& gp);

/// Alternative spellings of the same constants, for consistency checks.
/// 2^{1-2g} g Gamma(1-g) / Gamma(1+g).
double sharp_trace_constant_form(double gamma);
/// The DtN constant assembled without simplification: Poisson normalization
/// 2^{(m-g)/2}, the upper-branch boundary value
///   (-1)^{floor+1} 2^{-(m+g)/2} 2^{2 floor+1} floor! Gamma(g+1)/Gamma([g]),
/// and the scattering-to-GJMS factor 2^{-g} Gamma(-g)/Gamma(g). Independent of m.
double boundary_chain_form(double gamma, int m);

/// Default mode grid: lambda in {0.25,0.5,1,2,4}, k in 0..8, n in {1,2,3}.
std::vector<ModeIndex> default_mode_grid();

}  // namespace crext::spectral
