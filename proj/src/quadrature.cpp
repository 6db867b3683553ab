#include "crext/quadrature.hpp"

#include "crext/errors.hpp"

namespace crext::quad {

TanhSinhRule::TanhSinhRule(double a, double b, int level, double t_max) : a_(a), b_(b), level_(level) {
  if (!(b > a)) throw DomainError("TanhSinhRule needs a < b");
  if (level < 1) throw DomainError("TanhSinhRule needs level >= 1 so a coarse subset exists");
  const double h = std::ldexp(1.0, -level);
  const int count = static_cast<int>(std::floor(t_max / h));
  const double half = 0.5 * (b - a);
  for (int i = -count; i <= count; ++i) {
    detail::TanhSinhPoint p = detail::tanh_sinh_point(i * h);
    double x = p.left_fraction < p.right_fraction ? a + (b - a) * p.left_fraction
                                                  : b - (b - a) * p.right_fraction;
    double w = h * half * p.weight_factor;
    if (x <= a || x >= b || w == 0.0) continue;
    nodes_.push_back(x);
    weights_.push_back(w);
    coarse_.push_back(i % 2 == 0);
  }
}

double TanhSinhRule::integrate(std::span<const double> values) const {
  if (values.size() != nodes_.size()) throw DomainError("sample count does not match the rule");
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) sum += weights_[i] * values[i];
  return sum;
}

double TanhSinhRule::integrate_coarse(std::span<const double> values) const {
  if (values.size() != nodes_.size()) throw DomainError("sample count does not match the rule");
  double sum = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (coarse_[i]) sum += 2.0 * weights_[i] * values[i];
  }
  return sum;
}

}  // namespace crext::quad
