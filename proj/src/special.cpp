#include "crext/special.hpp"

#include "crext/errors.hpp"
#include "crext/quadrature.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace crext::special {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

}  // namespace

double gamma_fn(double x) {
  if (std::isnan(x)) throw DomainError("gamma_fn: NaN argument");
  if (is_nonpositive_integer(x)) throw PoleError("gamma_fn: pole at " + std::to_string(x));
  return std::tgamma(x);
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / std::tgamma(x);
}

double kummer_m(double a, double b, double z) {
  if (is_nonpositive_integer(b)) throw PoleError("kummer_m: b is a nonpositive integer");
  double term = 1.0;
  double sum = 1.0;
  const double settle = std::abs(a) + std::abs(b) + 2.0;
  for (int n = 0; n < 20000; ++n) {
    term *= (a + n) / (b + n) * z / (n + 1);
    sum += term;
    if (n > settle && std::abs(term) <= 1e-17 * std::abs(sum)) return sum;
    if (term == 0.0) return sum;
  }
  throw ConvergenceError("kummer_m: series did not settle");
}

double kummer_u(double a, double b, double z) {
  if (!(a > 0.0)) throw DomainError("kummer_u: integral representation needs a > 0");
  if (!(z > 0.0)) throw DomainError("kummer_u: needs z > 0");
  auto integrand = [a, b, z](double t) {
    double log_value = -z * t + (a - 1.0) * std::log(t) + (b - a - 1.0) * std::log1p(t);
    return log_value < -745.0 ? 0.0 : std::exp(log_value);
  };
  quad::QuadResult r = quad::exp_sinh(integrand, 1e-14, 12);
  if (r.error_estimate > 1e-11 * std::abs(r.value)) {
    throw ConvergenceError("kummer_u: quadrature did not converge at a=" + std::to_string(a) +
                           " b=" + std::to_string(b) + " z=" + std::to_string(z));
  }
  return r.value * rgamma(a);
}

double kummer_u_connection(double a, double b, double z) {
  if (b == std::floor(b)) throw DomainError("kummer_u_connection: b must not be an integer");
  if (!(z > 0.0)) throw DomainError("kummer_u_connection: needs z > 0");
  double first = gamma_fn(1.0 - b) * rgamma(a - b + 1.0) * kummer_m(a, b, z);
  double second = gamma_fn(b - 1.0) * rgamma(a) * std::pow(z, 1.0 - b) * kummer_m(a - b + 1.0, 2.0 - b, z);
  return first + second;
}

double kummer_u_asymptotic(double a, double b, double z, double* error_bound) {
  if (!(z > 0.0)) throw DomainError("kummer_u_asymptotic: needs z > 0");
  double term = 1.0;
  double sum = 1.0;
  double smallest = 1.0;
  for (int n = 0; n < 200; ++n) {
    double next = term * (a + n) * (a - b + 1.0 + n) / ((n + 1) * -z);
    if (std::abs(next) >= smallest) break;
    term = next;
    smallest = std::abs(term);
    sum += term;
    if (smallest <= std::numeric_limits<double>::epsilon() * std::abs(sum)) break;
  }
  if (error_bound != nullptr) *error_bound = smallest * std::pow(z, -a);
  return std::pow(z, -a) * sum;
}

}  // namespace crext::special
