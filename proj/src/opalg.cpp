#include "crext/opalg.hpp"

#include "crext/errors.hpp"

#include <string>
#include <vector>

namespace crext::opalg {

Coefficient g() { return Coefficient::var(); }

std::string to_string(const Monomial& m) {
  std::string out;
  auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += " ";
    out += piece;
  };
  if (m.rho_power == 1) append("rho");
  if (m.rho_power != 0 && m.rho_power != 1) append("rho^" + std::to_string(m.rho_power));
  if (m.drho_power == 1) append("d_rho");
  if (m.drho_power > 1) append("d_rho^" + std::to_string(m.drho_power));
  if (m.dt_power == 1) append("d_t");
  if (m.dt_power > 1) append("d_t^" + std::to_string(m.dt_power));
  if (m.deltab_power == 1) append("Db");
  if (m.deltab_power > 1) append("Db^" + std::to_string(m.deltab_power));
  return out.empty() ? "1" : out;
}

NCOperator::NCOperator(const Monomial& m, Coefficient c) { add_term(m, c); }

NCOperator NCOperator::identity() { return {Monomial{}, Coefficient(GaussianRational(1))}; }

NCOperator NCOperator::scalar(Coefficient c) { return {Monomial{}, std::move(c)}; }

NCOperator NCOperator::rho(int power) {
  return {Monomial{power, 0, 0, 0}, Coefficient(GaussianRational(1))};
}

NCOperator NCOperator::d_rho(unsigned power) {
  return {Monomial{0, power, 0, 0}, Coefficient(GaussianRational(1))};
}

NCOperator NCOperator::d_t(unsigned power) {
  return {Monomial{0, 0, power, 0}, Coefficient(GaussianRational(1))};
}

NCOperator NCOperator::delta_b(unsigned power) {
  return {Monomial{0, 0, 0, power}, Coefficient(GaussianRational(1))};
}

Coefficient NCOperator::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient() : it->second;
}

bool NCOperator::is_real() const {
  for (const auto& [m, c] : terms_) {
    for (const auto& z : c.coefficients()) {
      if (!z.is_real()) return false;
    }
  }
  return true;
}

unsigned NCOperator::drho_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.drho_power);
  return d;
}

void NCOperator::add_term(const Monomial& m, const Coefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCOperator& NCOperator::operator+=(const NCOperator& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NCOperator& NCOperator::operator-=(const NCOperator& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NCOperator& NCOperator::operator*=(const Coefficient& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

std::string to_string(const NCOperator& op) {
  if (op.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : op.terms()) {
    if (!out.empty()) out += "\n";
    out += "(" + to_string(c, "g") + ") * " + to_string(m);
  }
  return out;
}

namespace {

// d_rho^b o rho^a = sum_i C(b, i) a (a-1) ... (a-i+1) rho^{a-i} d_rho^{b-i}.
// Returns the scalar factors for i = 0..b.
std::vector<Rational> reorder_factors(unsigned b, int a) {
  std::vector<Rational> out;
  out.reserve(b + 1);
  Rational binom(1);
  Rational falling(1);
  for (unsigned i = 0; i <= b; ++i) {
    out.push_back(binom * falling);
    binom = binom * Rational(static_cast<long long>(b - i)) / Rational(static_cast<long long>(i + 1));
    falling *= Rational(static_cast<long long>(a) - static_cast<long long>(i));
  }
  return out;
}

}  // namespace

NCOperator normal_compose(const NCOperator& a, const NCOperator& b) {
  NCOperator out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Coefficient product = ca * cb;
      std::vector<Rational> factors = reorder_factors(ma.drho_power, mb.rho_power);
      for (unsigned i = 0; i <= ma.drho_power; ++i) {
        if (factors[i] == 0) continue;
        Monomial m{ma.rho_power + mb.rho_power - static_cast<int>(i), ma.drho_power - i + mb.drho_power,
                   ma.dt_power + mb.dt_power, ma.deltab_power + mb.deltab_power};
        out += NCOperator(m, Coefficient(GaussianRational(factors[i])) * product);
      }
    }
  }
  return out;
}

NCOperator commutator(const NCOperator& a, const NCOperator& b) {
  return normal_compose(a, b) - normal_compose(b, a);
}

NCOperator y_operator() { return NCOperator(Monomial{-1, 1, 0, 0}, Coefficient(GaussianRational(1))); }

NCOperator t_operator() { return NCOperator(Monomial{0, 0, 1, 0}, Coefficient(GaussianRational(2))); }

NCOperator build_weighted_laplacian(const Coefficient& mu) {
  Coefficient one(GaussianRational(1));
  NCOperator op = NCOperator::d_rho(2);
  op += NCOperator(Monomial{-1, 1, 0, 0}, one - Coefficient(GaussianRational(2)) * mu);
  op += NCOperator(Monomial{2, 0, 2, 0}, one);
  op += NCOperator::delta_b();
  return op;
}

namespace {

std::vector<NCOperator> poly_sublaplacian_factors(unsigned k) {
  if (k == 0) throw DomainError("poly-sublaplacian order k must be at least 1");
  // gamma = g + (k - 1); factor j is L_{gamma - 2j}. Leftmost is j = k - 1.
  std::vector<NCOperator> factors;
  factors.reserve(k);
  for (unsigned idx = 0; idx < k; ++idx) {
    long long j = static_cast<long long>(k) - 1 - idx;
    long long shift = static_cast<long long>(k) - 1 - 2 * j;
    factors.push_back(build_weighted_laplacian(g() + Coefficient(GaussianRational(shift))));
  }
  return factors;
}

}  // namespace

NCOperator build_poly_sublaplacian(unsigned k) {
  std::vector<NCOperator> factors = poly_sublaplacian_factors(k);
  NCOperator acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = normal_compose(acc, factors[i]);
  return acc;
}

NCOperator build_poly_sublaplacian_right_assoc(unsigned k) {
  std::vector<NCOperator> factors = poly_sublaplacian_factors(k);
  NCOperator acc = factors.back();
  for (std::size_t i = factors.size() - 1; i-- > 0;) acc = normal_compose(factors[i], acc);
  return acc;
}

NCOperator factored_poly_sublaplacian(unsigned k) {
  if (k == 0) return NCOperator::identity();
  NCOperator lg = build_weighted_laplacian(g());
  NCOperator t = t_operator();
  NCOperator acc = NCOperator::identity();
  for (unsigned j = 0; j < k; ++j) {
    long long shift = static_cast<long long>(k) - 1 - 2 * static_cast<long long>(j);
    Coefficient c(GaussianRational(Rational(0), Rational(shift)));
    acc = normal_compose(acc, lg + c * t);
  }
  return acc;
}

NCOperator check_factorization(unsigned k, unsigned bound) {
  if (k < 1 || k > bound) {
    throw DomainError("factorization check needs 1 <= k <= " + std::to_string(bound) + ", got " +
                      std::to_string(k));
  }
  return build_poly_sublaplacian(k) - factored_poly_sublaplacian(k);
}

NCOperator check_commutator_chain(unsigned k, unsigned bound) {
  if (k < 3 || k > bound) {
    throw DomainError("commutator chain starts at k = 3 and is bounded by " + std::to_string(bound) +
                      ", got " + std::to_string(k));
  }
  NCOperator y = y_operator();
  NCOperator lower = factored_poly_sublaplacian(k - 2);
  NCOperator lg = build_weighted_laplacian(g());
  Coefficient factor(GaussianRational(2 * (static_cast<long long>(k) - 1)));
  NCOperator lhs = commutator(y, normal_compose(lower, lg));
  NCOperator rhs = factor * normal_compose(normal_compose(y, lower), y) +
                   factor * normal_compose(lower, NCOperator::d_t(2));
  return lhs - rhs;
}

}  // namespace crext::opalg
