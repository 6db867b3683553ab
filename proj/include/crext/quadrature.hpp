#pragma once

// Double-exponential quadrature. Both rules tolerate integrable algebraic
// endpoint singularities, which is why they are used for the weighted radial
// integrals (weights rho^{1-2g}) and for the Tricomi integral.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace crext::quad {

struct QuadResult {
  double value = 0.0;
  /// |I(h) - I(2h)| at the final level.
  double error_estimate = 0.0;
  int level = 0;
};

/// Fixed tanh-sinh rule on [a, b] with step h = 2^{-level}. Nodes are nested:
/// the even-index subset is the rule at step 2h, which gives a step-halving
/// error estimate from a single set of samples.
class TanhSinhRule {
 public:
  TanhSinhRule(double a, double b, int level, double t_max = 4.5);

  double lower() const { return a_; }
  double upper() const { return b_; }
  int level() const { return level_; }
  std::size_t size() const { return nodes_.size(); }
  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }

  /// Sum of weights * values (values sampled at nodes()).
  double integrate(std::span<const double> values) const;
  /// Same integral using only the step-2h subset of the nodes.
  double integrate_coarse(std::span<const double> values) const;

 private:
  double a_;
  double b_;
  int level_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
  std::vector<bool> coarse_;
};

namespace detail {

// Abscissa offset from the left endpoint and sech^2 weight factor for
// y = (pi/2) sinh(t), computed without overflow.
struct TanhSinhPoint {
  double left_fraction;   // (x - a) / (b - a)
  double right_fraction;  // (b - x) / (b - a)
  double weight_factor;   // (pi/2) cosh(t) sech^2(y)
};

inline TanhSinhPoint tanh_sinh_point(double t) {
  const double y = 0.5 * std::numbers::pi * std::sinh(t);
  const double e = std::exp(-2.0 * std::abs(y));
  const double small = e / (1.0 + e);
  const double big = 1.0 / (1.0 + e);
  TanhSinhPoint p{};
  p.left_fraction = y < 0 ? small : big;
  p.right_fraction = y < 0 ? big : small;
  p.weight_factor = 0.5 * std::numbers::pi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
  return p;
}

}  // namespace detail

/// Adaptive tanh-sinh on [a, b]. Halves the step until two successive levels
/// agree to rel_tol (relative to the integral, or absolute if it is tiny).
template <class F>
QuadResult tanh_sinh(F&& f, double a, double b, double rel_tol = 1e-13, int max_level = 10,
                     double t_max = 4.5) {
  const double half = 0.5 * (b - a);
  auto term = [&](double t) {
    detail::TanhSinhPoint p = detail::tanh_sinh_point(t);
    double x = p.left_fraction < p.right_fraction ? a + (b - a) * p.left_fraction
                                                  : b - (b - a) * p.right_fraction;
    if (x <= a || x >= b || p.weight_factor == 0.0) return 0.0;
    return half * p.weight_factor * f(x);
  };
  double h = 1.0;
  double sum = term(0.0);
  for (int i = 1; i * h <= t_max; ++i) sum += term(i * h) + term(-i * h);
  double estimate = h * sum;
  QuadResult out{estimate, std::abs(estimate), 0};
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double added = 0.0;
    for (int i = 1; i * h <= t_max; i += 2) added += term(i * h) + term(-i * h);
    sum += added;
    double next = h * sum;
    out = {next, std::abs(next - estimate), level};
    if (level >= 3 && out.error_estimate <= rel_tol * std::max(std::abs(next), 1e-300)) return out;
    estimate = next;
  }
  return out;
}

/// Adaptive exp-sinh on (0, infinity), x = exp((pi/2) sinh t).
template <class F>
QuadResult exp_sinh(F&& f, double rel_tol = 1e-13, int max_level = 10, double t_lo = -6.5,
                    double t_hi = 6.5) {
  auto term = [&](double t) {
    const double arg = 0.5 * std::numbers::pi * std::sinh(t);
    if (arg > 700.0 || arg < -700.0) return 0.0;
    const double x = std::exp(arg);
    const double w = x * 0.5 * std::numbers::pi * std::cosh(t);
    if (w == 0.0) return 0.0;
    double v = f(x);
    return v == 0.0 ? 0.0 : w * v;
  };
  double h = 1.0;
  double sum = term(0.0);
  for (int i = 1; i * h <= t_hi; ++i) sum += term(i * h);
  for (int i = 1; -i * h >= t_lo; ++i) sum += term(-i * h);
  double estimate = h * sum;
  QuadResult out{estimate, std::abs(estimate), 0};
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double added = 0.0;
    for (int i = 1; i * h <= t_hi; i += 2) added += term(i * h);
    for (int i = 1; -i * h >= t_lo; i += 2) added += term(-i * h);
    sum += added;
    double next = h * sum;
    out = {next, std::abs(next - estimate), level};
    if (level >= 3 && out.error_estimate <= rel_tol * std::max(std::abs(next), 1e-300)) return out;
    estimate = next;
  }
  return out;
}

}  // namespace crext::quad
