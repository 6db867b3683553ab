#include "crext/heisenberg.hpp"

#include "crext/errors.hpp"

namespace crext::heisenberg {

namespace {

Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

HPoly::Exponents zero_exponents(int n) { return HPoly::Exponents(static_cast<std::size_t>(2 * n), 0U); }

}  // namespace

HPoly HPoly::constant(int n, const GaussianRational& c) {
  HPoly p(n);
  p.add_term(zero_exponents(n), c);
  return p;
}

HPoly HPoly::x(int n, int j) {
  HPoly p(n);
  Exponents e = zero_exponents(n);
  e.at(static_cast<std::size_t>(j)) = 1;
  p.add_term(e, GaussianRational(1));
  return p;
}

HPoly HPoly::y(int n, int j) {
  HPoly p(n);
  Exponents e = zero_exponents(n);
  e.at(static_cast<std::size_t>(n + j)) = 1;
  p.add_term(e, GaussianRational(1));
  return p;
}

HPoly HPoly::derivative(int v) const {
  HPoly out(n_);
  const auto idx = static_cast<std::size_t>(v);
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    Exponents d = e;
    d[idx] -= 1;
    out.add_term(d, GaussianRational(static_cast<long long>(e[idx])) * c);
  }
  return out;
}

void HPoly::add_term(const Exponents& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HPoly& HPoly::operator+=(const HPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, GaussianRational(-1) * c);
  return *this;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
  if (a.n_ != b.n_) throw DomainError("HPoly: dimension mismatch");
  HPoly out(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      HPoly::Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

HPoly operator*(const GaussianRational& c, const HPoly& a) {
  HPoly out(a.n_);
  for (const auto& [e, v] : a.terms_) out.add_term(e, c * v);
  return out;
}

// d_{x_j}(p E) = (d_{x_j} p - 2|lambda| x_j p) E and d_t(p E) = i lambda p E.
HPoly apply_x(const GaussianModeFunction& f, int j) {
  const int n = f.p.n();
  const GaussianRational a(abs_rational(f.lambda));
  const GaussianRational two_i_lambda(Rational(0), 2 * f.lambda);
  return f.p.derivative(j) - GaussianRational(2) * a * (HPoly::x(n, j) * f.p) +
         two_i_lambda * (HPoly::y(n, j) * f.p);
}

HPoly apply_y(const GaussianModeFunction& f, int j) {
  const int n = f.p.n();
  const GaussianRational a(abs_rational(f.lambda));
  const GaussianRational two_i_lambda(Rational(0), 2 * f.lambda);
  return f.p.derivative(n + j) - GaussianRational(2) * a * (HPoly::y(n, j) * f.p) -
         two_i_lambda * (HPoly::x(n, j) * f.p);
}

HPoly apply_sublaplacian(const GaussianModeFunction& f) {
  const int n = f.p.n();
  HPoly sum(n);
  for (int j = 0; j < n; ++j) {
    sum += apply_x({f.lambda, apply_x(f, j)}, j);
    sum += apply_y({f.lambda, apply_y(f, j)}, j);
  }
  return GaussianRational(Rational(1, 2)) * sum;
}

GaussianModeFunction laguerre_mode(const Rational& lambda, int k, int n) {
  if (lambda == 0 || k < 0 || n < 1) throw DomainError("laguerre_mode: invalid mode");
  HPoly r2(n);
  for (int j = 0; j < n; ++j) r2 += HPoly::x(n, j) * HPoly::x(n, j) + HPoly::y(n, j) * HPoly::y(n, j);
  const HPoly arg = GaussianRational(2 * abs_rational(lambda)) * r2;
  // L_k^{(alpha)}(x) = sum_i (-1)^i C(k+alpha, k-i) x^i / i!, alpha = n - 1.
  HPoly out(n);
  HPoly power = HPoly::constant(n, GaussianRational(1));
  Rational factorial(1);
  for (int i = 0; i <= k; ++i) {
    if (i > 0) {
      power = power * arg;
      factorial *= i;
    }
    Rational binom(1);
    for (int t = 1; t <= k - i; ++t) binom = binom * Rational(k + n - 1 - (k - i) + t) / Rational(t);
    Rational c = binom / factorial;
    if (i % 2 == 1) c = -c;
    out += GaussianRational(c) * power;
  }
  return {lambda, out};
}

std::optional<GaussianRational> sublaplacian_eigenvalue(const GaussianModeFunction& f) {
  if (f.p.is_zero()) return std::nullopt;
  HPoly image = apply_sublaplacian(f);
  // Ratio read off the highest term of p; then confirmed on every term.
  const auto& [e0, c0] = *f.p.terms().rbegin();
  GaussianRational ratio(0);
  auto it = image.terms().find(e0);
  if (it != image.terms().end()) {
    const GaussianRational inv_den = c0.conj() * GaussianRational(Rational(1) / (c0.re * c0.re + c0.im * c0.im));
    ratio = it->second * inv_den;
  }
  if (image - ratio * f.p == HPoly(f.p.n())) return ratio;
  return std::nullopt;
}

}  // namespace crext::heisenberg
