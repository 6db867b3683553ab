#pragma once

// Exact action of the sub-Laplacian on functions
//   p(x, y) * e^{i lambda t} * e^{-|lambda| |z|^2}
// on H^n, with p a polynomial in x_1..x_n, y_1..y_n and lambda rational.
// Vector fields: X_j = d_{x_j} + 2 y_j d_t, Y_j = d_{y_j} - 2 x_j d_t,
// Delta_b = 1/2 sum (X_j^2 + Y_j^2).

#include "crext/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crext::heisenberg {

/// Polynomial in 2n real variables, ordered (x_1..x_n, y_1..y_n).
class HPoly {
 public:
  using Exponents = std::vector<unsigned>;

  explicit HPoly(int n = 1) : n_(n) {}
  static HPoly constant(int n, const GaussianRational& c);
  static HPoly x(int n, int j);
  static HPoly y(int n, int j);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, GaussianRational>& terms() const { return terms_; }

  /// Partial derivative in variable index v (0..2n-1).
  HPoly derivative(int v) const;

  HPoly& operator+=(const HPoly& o);
  HPoly& operator-=(const HPoly& o);
  friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
  friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
  friend HPoly operator*(const HPoly& a, const HPoly& b);
  friend HPoly operator*(const GaussianRational& c, const HPoly& a);
  friend bool operator==(const HPoly&, const HPoly&) = default;

 private:
  void add_term(const Exponents& e, const GaussianRational& c);
  int n_;
  std::map<Exponents, GaussianRational> terms_;
};

/// p times the Gaussian-modulated character e^{i lambda t} e^{-|lambda||z|^2}.
struct GaussianModeFunction {
  Rational lambda;
  HPoly p;
};

/// The polynomial part of X_j f and Y_j f.
HPoly apply_x(const GaussianModeFunction& f, int j);
HPoly apply_y(const GaussianModeFunction& f, int j);
/// The polynomial part of Delta_b f.
HPoly apply_sublaplacian(const GaussianModeFunction& f);

/// L_k^{(n-1)}(2|lambda||z|^2) times the Gaussian character.
GaussianModeFunction laguerre_mode(const Rational& lambda, int k, int n);

/// c with Delta_b f = c f exactly, or nullopt if f is not an eigenfunction.
std::optional<GaussianRational> sublaplacian_eigenvalue(const GaussianModeFunction& f);

}  // namespace crext::heisenberg
