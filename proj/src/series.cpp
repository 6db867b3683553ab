#include "crext/series.hpp"

#include "crext/errors.hpp"

#include <cmath>
#include <string>

namespace crext::series {

namespace {

// Denominator (r + 2j)(r + 2j - 2g'); r = 0 and r = 2g' give 4j(j -+ g').
std::vector<double> branch_coefficients(double r, double gamma_eff, double mu, double lambda, int order) {
  std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
  c[0] = 1.0;
  const double l2 = lambda * lambda;
  for (int j = 1; j <= order; ++j) {
    const double den = (r + 2.0 * j) * (r + 2.0 * j - 2.0 * gamma_eff);
    if (den == 0.0) throw PoleError("Frobenius recursion hits j = " + std::to_string(j) + " resonance");
    double num = mu * c[static_cast<std::size_t>(j - 1)];
    if (j >= 2) num += l2 * c[static_cast<std::size_t>(j - 2)];
    c[static_cast<std::size_t>(j)] = num / den;
  }
  return c;
}

}  // namespace

std::array<double, 5> BranchSeries::derivatives(double rho, int order) const {
  if (order < 0 || order > 4) throw DomainError("BranchSeries: derivative order must be in 0..4");
  std::array<double, 5> out{};
  if (!(rho > 0.0)) throw DomainError("BranchSeries: needs rho > 0");
  const double r2 = rho * rho;
  double power = std::pow(rho, shift_);  // rho^{shift + 2j}
  for (std::size_t j = 0; j < c_.size(); ++j) {
    const double p = shift_ + 2.0 * static_cast<double>(j);
    const double term = c_[j] * power;
    double falling = 1.0;
    double inv = 1.0;
    for (int r = 0; r <= order; ++r) {
      out[static_cast<std::size_t>(r)] += falling * term * inv;
      falling *= p - r;
      inv /= rho;
    }
    power *= r2;
    if (j > 4 && std::abs(term) < 1e-18 * std::abs(out[0]) && term != 0.0) break;
  }
  return out;
}

BranchSeries lower_branch(double gamma_eff, double mu, double lambda, int order) {
  return {0.0, branch_coefficients(0.0, gamma_eff, mu, lambda, order)};
}

BranchSeries upper_branch(double gamma_eff, double mu, double lambda, int order) {
  return {2.0 * gamma_eff, branch_coefficients(2.0 * gamma_eff, gamma_eff, mu, lambda, order)};
}

BranchSeries trial_branch(double r, double gamma_eff, double mu, double lambda, int order) {
  return {r, branch_coefficients(r, gamma_eff, mu, lambda, order)};
}

int terms_for_radius(double gamma_eff, double mu, double lambda, double rho_max) {
  // Terms behave like (x/4)^j / (j!)^2 with x = (mu + |lambda|) rho^2.
  const double x = (mu + std::abs(lambda)) * rho_max * rho_max;
  double term = 1.0;
  int j = 1;
  for (; j < 400; ++j) {
    term *= x / (4.0 * j * std::max(1.0, j - std::abs(gamma_eff)));
    if (j > 6 && term < 1e-20) break;
  }
  return j + 4;
}

}  // namespace crext::series
