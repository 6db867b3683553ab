#include "crext/spectral.hpp"

#include "crext/errors.hpp"
#include "crext/special.hpp"

#include <cmath>
#include <sstream>

namespace crext::spectral {

using special::gamma_fn;

void ModeIndex::validate() const {
  if (!(lambda != 0.0) || !std::isfinite(lambda)) throw DomainError("mode: lambda must be finite and nonzero");
  if (k < 0) throw DomainError("mode: k must be nonnegative");
  if (n < 1) throw DomainError("mode: n must be positive");
}

std::string ModeIndex::label() const {
  std::ostringstream os;
  os << "lambda=" << lambda << ",k=" << k << ",n=" << n;
  return os.str();
}

void validate_gamma(double gamma) {
  if (!std::isfinite(gamma) || gamma <= 0.0 || gamma >= 2.0) {
    throw DomainError("gamma must lie in (0,2), got " + std::to_string(gamma));
  }
  if (gamma == 1.0) throw DomainError("gamma = 1 is excluded (integer order)");
}

GammaParam::GammaParam(double gamma, int n) : gamma_(gamma), n_(n) {
  validate_gamma(gamma);
  if (n < 1) throw DomainError("n must be positive");
  floor_ = gamma > 1.0 ? 1 : 0;
  frac_ = gamma - floor_;
}

std::vector<double> GammaParam::weight_exponents() const {
  if (floor_ == 0) return {gamma_};
  return {gamma_, gamma_tilde()};
}

double mode_eigenvalue(const ModeIndex& mode) {
  mode.validate();
  return 2.0 * std::abs(mode.lambda) * (2.0 * mode.k + mode.n);
}

double gjms_symbol(double gamma_eff, const ModeIndex& mode) {
  validate_gamma(gamma_eff);
  mode.validate();
  const double level = 2.0 * mode.k + mode.n;
  const double lower = 0.5 * (1.0 - gamma_eff + level);
  if (lower <= 0.0 && lower == std::floor(lower)) throw PoleError("gjms_symbol: Gamma pole in the denominator");
  const double log_ratio = std::lgamma(0.5 * (1.0 + gamma_eff + level)) - std::lgamma(lower);
  return std::pow(4.0 * std::abs(mode.lambda), gamma_eff) * std::exp(log_ratio);
}

TheoremConstants theorem_constant(const GammaParam& gp) {
  const double g = gp.gamma();
  TheoremConstants c;
  if (gp.floor() == 0) {
    c.first = std::pow(2.0, 1.0 - 2.0 * g) * gamma_fn(1.0 - g) / gamma_fn(g);
    return c;
  }
  const double t = gp.gamma_tilde();
  c.first = std::pow(2.0, 3.0 - 2.0 * g) * gamma_fn(2.0 - g) / gamma_fn(g);
  c.second = std::pow(2.0, 1.0 - 2.0 * t) * (t / (1.0 - t)) * gamma_fn(-t) / gamma_fn(t);
  c.has_second = true;
  return c;
}

double sharp_trace_constant_form(double gamma) {
  validate_gamma(gamma);
  return std::pow(2.0, 1.0 - 2.0 * gamma) * gamma * gamma_fn(1.0 - gamma) / gamma_fn(1.0 + gamma);
}

double boundary_chain_form(double gamma, int m) {
  validate_gamma(gamma);
  const int fl = gamma > 1.0 ? 1 : 0;
  const double frac = gamma - fl;
  const double sign = (fl + 1) % 2 == 0 ? 1.0 : -1.0;
  const double poisson = std::pow(2.0, 0.5 * (m - gamma));
  const double upper = sign * std::pow(2.0, -0.5 * (m + gamma)) * std::pow(2.0, 2 * fl + 1) *
                       std::tgamma(fl + 1.0) * gamma_fn(gamma + 1.0) / gamma_fn(frac);
  const double scattering = std::pow(2.0, -gamma) * gamma_fn(-gamma) / gamma_fn(gamma);
  return poisson * upper * scattering;
}

std::vector<ModeIndex> default_mode_grid() {
  std::vector<ModeIndex> grid;
  for (int n : {1, 2, 3}) {
    for (double lambda : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      for (int k = 0; k <= 8; ++k) grid.push_back({lambda, k, n});
    }
  }
  return grid;
}

}  // namespace crext::spectral
