#pragma once

// Frobenius branches of the mode equation
//   u'' + (1 - 2g') u' / rho - (lambda^2 rho^2 + mu) u = 0
// at rho = 0. Indicial exponents are 0 and 2g'.

#include <array>
#include <vector>

namespace crext::series {

/// rho^{shift} * sum_j c_j rho^{2j}.
class BranchSeries {
 public:
  BranchSeries() = default;
  BranchSeries(double shift, std::vector<double> coefficients)
      : shift_(shift), c_(std::move(coefficients)) {}

  double shift() const { return shift_; }
  const std::vector<double>& coefficients() const { return c_; }

  /// Value and derivatives 0..order (order <= 4) at rho > 0.
  std::array<double, 5> derivatives(double rho, int order = 1) const;
  double value(double rho) const { return derivatives(rho, 0)[0]; }

 private:
  double shift_ = 0.0;
  std::vector<double> c_;
};

/// a_0 = 1, a_j = (mu a_{j-1} + lambda^2 a_{j-2}) / (4 j (j - g')).
/// Throws PoleError if j = g' for some j <= order.
BranchSeries lower_branch(double gamma_eff, double mu, double lambda, int order);
/// rho^{2g'} sum b_j rho^{2j}, b_0 = 1, b_j = (mu b_{j-1} + lambda^2 b_{j-2}) / (4 j (j + g')).
BranchSeries upper_branch(double gamma_eff, double mu, double lambda, int order);

/// rho^r sum c_j rho^{2j} with c_0 = 1 and the recursion of the mode equation
/// for a trial exponent r: c_j (r+2j)(r+2j-2g') = mu c_{j-1} + lambda^2 c_{j-2}.
/// Solves the equation only when r(r - 2g') = 0.
BranchSeries trial_branch(double r, double gamma_eff, double mu, double lambda, int order);

/// Number of terms that make both branches converge to machine precision
/// on rho <= rho_max (capped at 400).
int terms_for_radius(double gamma_eff, double mu, double lambda, double rho_max);

}  // namespace crext::series
