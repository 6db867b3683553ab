#pragma once

#include "crext/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace crext {

/// Dense univariate polynomial over an exact ring T. Trailing zeros are
/// always trimmed, so the zero polynomial has no coefficients and equality
/// is coefficient-wise.
template <class T>
class Poly {
 public:
  Poly() = default;
  Poly(T constant) {  // NOLINT(google-explicit-constructor)
    c_.push_back(std::move(constant));
    trim();
  }
  explicit Poly(std::vector<T> coefficients) : c_(std::move(coefficients)) { trim(); }

  /// The indeterminate itself.
  static Poly var() { return Poly(std::vector<T>{T(0), T(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<T>& coefficients() const { return c_; }

  T coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(c_.size())) return T(0);
    return c_[static_cast<std::size_t>(power)];
  }

  template <class U>
  U evaluate(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= x;
      acc += U(*it);
    }
    return acc;
  }

  /// p(inner(x)).
  Poly compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= inner;
      acc += Poly(*it);
    }
    return acc;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    if (c_.empty() || o.c_.empty()) {
      c_.clear();
      return *this;
    }
    std::vector<T> out(c_.size() + o.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (is_zero_value(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(out);
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator-(const Poly& a) { return Poly() - a; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  static bool is_zero_value(const T& v) { return v == T(0); }
  void trim() {
    while (!c_.empty() && is_zero_value(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

/// Render a polynomial in ascending powers of `var`, e.g. "1 - 2*g + g^2".
template <class T>
std::string to_string(const Poly<T>& p, const std::string& var) {
  using crext::to_string;
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    T c = p.coeff(i);
    if (c == T(0)) continue;
    std::string cs = to_string(c);
    bool negative = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
    if (negative) cs.erase(0, 1);
    if (cs.find_first_of("+-", 1) != std::string::npos) cs = "(" + cs + ")";
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (mono.empty()) {
      out += cs;
    } else if (cs == "1") {
      out += mono;
    } else {
      out += cs + "*" + mono;
    }
  }
  return out;
}

using RatPoly = Poly<Rational>;

}  // namespace crext
