#pragma once

// Exact noncommutative algebra of differential operators on the Siegel
// domain in the coordinates (rho, t, z).
//
// Generators are rho^{+-1}, d_rho, d_t and the sub-Laplacian Db. Only d_rho
// fails to commute with anything (it does not commute with rho). Every
// operator is kept in normal order: powers of rho to the left of powers of
// d_rho. Coefficients are polynomials in one indeterminate g, standing for
// the fractional part of the order parameter, over the Gaussian rationals.

#include "crext/poly.hpp"
#include "crext/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>

namespace crext::opalg {

/// Polynomial in g with Gaussian-rational coefficients.
using Coefficient = Poly<GaussianRational>;

/// The indeterminate g.
Coefficient g();

/// rho^a d_rho^b d_t^c Db^d in normal order. Ordering is lexicographic in
/// (a, b, c, d), which fixes the canonical term order of an NCOperator.
struct Monomial {
  int rho_power = 0;
  unsigned drho_power = 0;
  unsigned dt_power = 0;
  unsigned deltab_power = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

std::string to_string(const Monomial& m);

class NCOperator {
 public:
  using TermMap = std::map<Monomial, Coefficient>;

  NCOperator() = default;
  NCOperator(const Monomial& m, Coefficient c);

  static NCOperator zero() { return {}; }
  static NCOperator identity();
  static NCOperator scalar(Coefficient c);
  static NCOperator rho(int power = 1);
  static NCOperator d_rho(unsigned power = 1);
  static NCOperator d_t(unsigned power = 1);
  static NCOperator delta_b(unsigned power = 1);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of a monomial (zero if absent).
  Coefficient coefficient(const Monomial& m) const;
  /// True when no coefficient carries an imaginary part.
  bool is_real() const;
  /// Largest d_rho power present (0 for the zero operator).
  unsigned drho_degree() const;

  NCOperator& operator+=(const NCOperator& o);
  NCOperator& operator-=(const NCOperator& o);
  NCOperator& operator*=(const Coefficient& c);

  friend NCOperator operator+(NCOperator a, const NCOperator& b) { return a += b; }
  friend NCOperator operator-(NCOperator a, const NCOperator& b) { return a -= b; }
  friend NCOperator operator-(const NCOperator& a) { return NCOperator() - a; }
  friend NCOperator operator*(const Coefficient& c, NCOperator a) { return a *= c; }
  friend bool operator==(const NCOperator&, const NCOperator&) = default;

 private:
  void add_term(const Monomial& m, const Coefficient& c);

  TermMap terms_;
};

/// Canonical rendering: terms in monomial order, one per line,
/// "<coefficient> * <monomial>". The zero operator renders as "0".
std::string to_string(const NCOperator& op);

/// A o B, normal ordered via d_rho rho^a = rho^a d_rho + a rho^{a-1}.
NCOperator normal_compose(const NCOperator& a, const NCOperator& b);

/// Convenience alias for normal_compose.
inline NCOperator operator*(const NCOperator& a, const NCOperator& b) { return normal_compose(a, b); }

/// A o B - B o A.
NCOperator commutator(const NCOperator& a, const NCOperator& b);

/// Y = rho^{-1} d_rho.
NCOperator y_operator();

/// T = 2 d_t.
NCOperator t_operator();

/// L_mu = d_rho^2 + (1 - 2 mu) rho^{-1} d_rho + rho^2 d_t^2 + Db.
NCOperator build_weighted_laplacian(const Coefficient& mu);

/// prod_{j=0}^{k-1} L_{gamma - 2j} with gamma = g + (k - 1), composed as
/// L_{gamma-2k+2} o ... o L_gamma. Throws DomainError for k == 0.
NCOperator build_poly_sublaplacian(unsigned k);

/// Same product as build_poly_sublaplacian, composed with the opposite
/// association (right fold instead of left fold).
NCOperator build_poly_sublaplacian_right_assoc(unsigned k);

/// prod_{j=0}^{k-1} (L_g + i (k - 1 - 2j) T). The factors commute.
NCOperator factored_poly_sublaplacian(unsigned k);

/// Default bound on k for the factorization checks.
inline constexpr unsigned kDefaultFactorizationBound = 6;

/// build_poly_sublaplacian(k) minus the factored product; zero when the
/// factorization identity holds. Requires 1 <= k <= bound.
NCOperator check_factorization(unsigned k, unsigned bound = kDefaultFactorizationBound);

/// [Y, P o L_g] - 2(k-1) Y o P o Y - 2(k-1) P o d_t^2 with P the factored
/// product of order k - 2. Zero when the commutator identity used in the
/// inductive step holds. Requires 3 <= k <= bound.
NCOperator check_commutator_chain(unsigned k, unsigned bound = kDefaultFactorizationBound);

}  // namespace crext::opalg
