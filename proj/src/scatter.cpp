#include "crext/scatter.hpp"

#include "crext/errors.hpp"

#include <cmath>

namespace crext::scatter {

namespace {

RatPoly s_var() { return RatPoly::var(); }

RatPoly rat_const(long long v) { return RatPoly(Rational(v)); }

void trim(std::vector<RatPoly>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

void require_no_pole(int m, int l, const Rational& s) {
  for (int j = 1; j <= l; ++j) {
    if (Rational(m) - 2 * s + j == 0) {
      throw PoleError("resonant expansion: m - 2s + " + std::to_string(j) + " = 0 at s = " + to_string(s));
    }
  }
}

}  // namespace

UniPoly::UniPoly(std::vector<RatPoly> coefficients) : c_(std::move(coefficients)) { trim(c_); }

RatPoly UniPoly::coeff(int power) const {
  if (power < 0 || power > degree()) return {};
  return c_[static_cast<std::size_t>(power)];
}

RatPoly UniPoly::leading() const { return c_.empty() ? RatPoly() : c_.back(); }

bool UniPoly::has_parity(int parity) const {
  for (int i = 0; i <= degree(); ++i) {
    if (!c_[static_cast<std::size_t>(i)].is_zero() && (i - parity) % 2 != 0) return false;
  }
  return true;
}

UniPoly UniPoly::substitute_s(const RatPoly& inner) const {
  std::vector<RatPoly> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.compose(inner));
  return UniPoly(std::move(out));
}

std::string to_string(const UniPoly& p) {
  if (p.degree() < 0) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    RatPoly c = p.coeff(i);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c, "s") + ")";
    if (i == 1) out += "*x";
    if (i > 1) out += "*x^" + std::to_string(i);
  }
  return out;
}

BiOpPoly BiOpPoly::constant(RatPoly c) {
  BiOpPoly p;
  p.add_term({0, 0}, c);
  return p;
}

BiOpPoly BiOpPoly::l1() {
  BiOpPoly p;
  p.add_term({1, 0}, rat_const(1));
  return p;
}

BiOpPoly BiOpPoly::l2() {
  BiOpPoly p;
  p.add_term({0, 1}, rat_const(1));
  return p;
}

RatPoly BiOpPoly::coeff(int l1_power, int l2_power) const {
  auto it = terms_.find({l1_power, l2_power});
  return it == terms_.end() ? RatPoly() : it->second;
}

int BiOpPoly::homogeneous_degree() const {
  int deg = -1;
  for (const auto& [k, c] : terms_) {
    int d = k.first + 2 * k.second;
    if (deg >= 0 && d != deg) return -1;
    deg = d;
  }
  return deg;
}

BiOpPoly BiOpPoly::at(const Rational& s) const {
  BiOpPoly out;
  for (const auto& [k, c] : terms_) out.add_term(k, RatPoly(c.evaluate(s)));
  return out;
}

BiOpPoly BiOpPoly::substitute_s(const RatPoly& inner) const {
  BiOpPoly out;
  for (const auto& [k, c] : terms_) out.add_term(k, c.compose(inner));
  return out;
}

double BiOpPoly::evaluate(double s, double l1_value, double l2_value) const {
  double total = 0.0;
  for (const auto& [k, c] : terms_) {
    double cv = 0.0;
    for (int i = c.degree(); i >= 0; --i) cv = cv * s + static_cast<double>(c.coeff(i));
    total += cv * std::pow(l1_value, k.first) * std::pow(l2_value, k.second);
  }
  return total;
}

void BiOpPoly::add_term(const Key& k, const RatPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiOpPoly& BiOpPoly::operator+=(const BiOpPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

BiOpPoly& BiOpPoly::operator-=(const BiOpPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

BiOpPoly& BiOpPoly::operator*=(const RatPoly& c) {
  BiOpPoly out;
  for (const auto& [k, v] : terms_) out.add_term(k, v * c);
  *this = std::move(out);
  return *this;
}

BiOpPoly operator*(const BiOpPoly& a, const BiOpPoly& b) {
  BiOpPoly out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  }
  return out;
}

std::string to_string(const BiOpPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c, "s") + ")";
    if (k.first == 1) out += "*L1";
    if (k.first > 1) out += "*L1^" + std::to_string(k.first);
    if (k.second == 1) out += "*L2";
    if (k.second > 1) out += "*L2^" + std::to_string(k.second);
  }
  return out;
}

BiOpPoly ExpansionCoeff::scaled_operator() const { return RatPoly(prefactor) * evaluated_operator(); }

ScatterRecursion::ScatterRecursion(int m) : m_(m) {
  if (m < 2) throw DomainError("m = n + 1 must be at least 2, got " + std::to_string(m));
}

UniPoly ScatterRecursion::recurrence(int l, const RatPoly& shift) const {
  if (l < 0) throw DomainError("recursion index must be nonnegative");
  // shift(s) is (m - 2s) for p and (2s - m) for g; the l-th step uses shift + l - 1.
  std::vector<RatPoly> prev;                  // p_{-1} = 0
  std::vector<RatPoly> cur{rat_const(1)};      // p_0 = 1
  for (int step = 1; step <= l; ++step) {
    std::vector<RatPoly> next(cur.size() + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    RatPoly factor = rat_const(step - 1) * (shift + rat_const(step - 1));
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= factor * prev[i];
    trim(next);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return UniPoly(std::move(cur));
}

UniPoly ScatterRecursion::recurrence_p(int l) const {
  return recurrence(l, rat_const(m_) - rat_const(2) * s_var());
}

UniPoly ScatterRecursion::recurrence_g(int l) const {
  return recurrence(l, rat_const(2) * s_var() - rat_const(m_));
}

ExpansionCoeff ScatterRecursion::expansion_coefficient(int l, const Rational& s) const {
  require_no_pole(m_, l, s);
  ExpansionCoeff out;
  out.l = l;
  out.s = s;
  out.op = lift_operator(recurrence_p(l));
  Rational denom(1);
  for (int j = 1; j <= l; ++j) {
    Rational factor = Rational(m_) - 2 * s + j;
    out.linear_factors.push_back(factor);
    denom *= factor * j;
  }
  out.prefactor = (l % 2 == 0 ? Rational(1) : Rational(-1)) / denom;
  return out;
}

BiOpPoly ScatterRecursion::direct_recursion(int l, const Rational& s) const {
  require_no_pole(m_, l, s);
  BiOpPoly prev;
  BiOpPoly cur = BiOpPoly::constant(rat_const(1));
  const BiOpPoly l1 = BiOpPoly::l1();
  const BiOpPoly l2 = BiOpPoly::l2();
  for (int step = 1; step <= l; ++step) {
    Rational denom = Rational(step) * (Rational(m_) - 2 * s + step);
    BiOpPoly next = RatPoly(Rational(-1) / denom) * (l1 * cur + l2 * prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool ScatterRecursion::check_duality(int l, const Rational& s) const {
  require_no_pole(m_, l, s);
  BiOpPoly p_side = lift_operator(recurrence_p(l)).at(s);
  BiOpPoly g_side = lift_operator(recurrence_g(l)).at(Rational(m_) - s);
  return p_side == g_side;
}

bool ScatterRecursion::leading_coefficient_check(int l) const {
  RatPoly one = rat_const(1);
  UniPoly p = recurrence_p(l);
  UniPoly gp = recurrence_g(l);
  return p.degree() == l && gp.degree() == l && p.leading() == one && gp.leading() == one;
}

BiOpPoly lift_operator(const UniPoly& p) {
  int deg = p.degree();
  if (deg < 0) return {};
  if (!p.has_parity(deg % 2)) {
    throw DomainError("lift_operator: mixed-parity polynomial would need fractional powers of L2");
  }
  BiOpPoly out;
  for (int i = deg; i >= 0; i -= 2) {
    RatPoly c = p.coeff(i);
    if (c.is_zero()) continue;
    BiOpPoly term = BiOpPoly::constant(c);
    for (int a = 0; a < i; ++a) term = term * BiOpPoly::l1();
    for (int b = 0; b < (deg - i) / 2; ++b) term = term * BiOpPoly::l2();
    out += term;
  }
  return out;
}

}  // namespace crext::scatter
