#pragma once

// Formal expansion coefficients of solutions of the Poisson equation
// (Delta_+ + s(m - s)) u = 0 on the Siegel domain.
//
// With u = q^{m-s} sum_l q^l f_l, the coefficients obey
//   f_l = -(L1 f_{l-1} + L2 f_{l-2}) / (l (m - 2s + l)),  L1 = Db/2, L2 = T^2/4,
// whose solution is f_l = (-1)^l / (l! prod_{j=1}^l (m-2s+j)) * P_l^s(f_0)
// with P_l^s the homogeneous lift of the polynomial p_l^s below.

#include "crext/poly.hpp"
#include "crext/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace crext::scatter {

using crext::to_string;

/// Polynomial in x whose coefficients are polynomials in s.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<RatPoly> coefficients);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<RatPoly>& coefficients() const { return c_; }
  RatPoly coeff(int power) const;
  /// Leading coefficient in x (zero polynomial for the zero UniPoly).
  RatPoly leading() const;
  /// True when every nonzero power of x has the parity of `parity`.
  bool has_parity(int parity) const;
  /// Substitute s -> inner(s) in every coefficient.
  UniPoly substitute_s(const RatPoly& inner) const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  std::vector<RatPoly> c_;
};

std::string to_string(const UniPoly& p);

/// Commutative polynomial in L1 (weight 1) and L2 (weight 2) with
/// coefficients polynomial in s. Keys are (power of L1, power of L2).
class BiOpPoly {
 public:
  using Key = std::pair<int, int>;
  using TermMap = std::map<Key, RatPoly>;

  BiOpPoly() = default;
  static BiOpPoly constant(RatPoly c);
  static BiOpPoly l1();
  static BiOpPoly l2();

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatPoly coeff(int l1_power, int l2_power) const;

  /// Weighted degree of every term if homogeneous, -1 otherwise (or if zero).
  int homogeneous_degree() const;

  /// Substitute a rational value for s.
  BiOpPoly at(const Rational& s) const;
  /// Substitute s -> inner(s).
  BiOpPoly substitute_s(const RatPoly& inner) const;
  /// Numerical value at fixed s and L1, L2.
  double evaluate(double s, double l1_value, double l2_value) const;

  BiOpPoly& operator+=(const BiOpPoly& o);
  BiOpPoly& operator-=(const BiOpPoly& o);
  BiOpPoly& operator*=(const RatPoly& c);
  friend BiOpPoly operator+(BiOpPoly a, const BiOpPoly& b) { return a += b; }
  friend BiOpPoly operator-(BiOpPoly a, const BiOpPoly& b) { return a -= b; }
  friend BiOpPoly operator*(const RatPoly& c, BiOpPoly a) { return a *= c; }
  friend BiOpPoly operator*(const BiOpPoly& a, const BiOpPoly& b);
  friend bool operator==(const BiOpPoly&, const BiOpPoly&) = default;

 private:
  void add_term(const Key& k, const RatPoly& c);
  TermMap terms_;
};

std::string to_string(const BiOpPoly& p);

/// One expansion coefficient f_l = prefactor * P_l^s(f_0) at a fixed s.
struct ExpansionCoeff {
  int l = 0;
  Rational s;
  /// Symbolic P_l^s (coefficients polynomial in s).
  BiOpPoly op;
  /// The linear factors (m - 2s + j), j = 1..l, at this s.
  std::vector<Rational> linear_factors;
  /// (-1)^l / (l! prod linear_factors).
  Rational prefactor;

  /// P_l^s with the value of s substituted.
  BiOpPoly evaluated_operator() const { return op.at(s); }
  /// prefactor * P_l^s at this s.
  BiOpPoly scaled_operator() const;
};

/// Recursions for one fixed m = n + 1.
class ScatterRecursion {
 public:
  explicit ScatterRecursion(int m);

  int m() const { return m_; }

  /// p_l = x p_{l-1} - (l-1)(m-2s+l-1) p_{l-2}, p_{-1} = 0, p_0 = 1.
  UniPoly recurrence_p(int l) const;
  /// Same recursion with (2s-m+l-1) in place of (m-2s+l-1).
  UniPoly recurrence_g(int l) const;

  /// f_l = prefactor * P_l^s(f_0). Throws PoleError if m-2s+j = 0 for some
  /// 1 <= j <= l.
  ExpansionCoeff expansion_coefficient(int l, const Rational& s) const;

  /// The raw two-term recursion for f_l / f_0 at fixed s, computed directly
  /// in L1, L2 without the polynomial route. Throws PoleError on resonance.
  BiOpPoly direct_recursion(int l, const Rational& s) const;

  /// Lift of recurrence_p(l) at s equals lift of recurrence_g(l) at m - s.
  /// Throws PoleError if either side's prefactor has a pole at s.
  bool check_duality(int l, const Rational& s) const;

  /// p_l^s and g_l^s are monic of degree l.
  bool leading_coefficient_check(int l) const;

 private:
  UniPoly recurrence(int l, const RatPoly& shift) const;

  int m_;
};

/// (sqrt(L2))^deg * p(L1 / sqrt(L2)) as a polynomial in L1, L2. Throws
/// DomainError if p mixes parities (fractional powers of L2 would appear).
BiOpPoly lift_operator(const UniPoly& p);

}  // namespace crext::scatter
