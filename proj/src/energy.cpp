#include "crext/energy.hpp"

#include "crext/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace crext::energy {

namespace {

double term_power(const GaussTerm& t, double e) { return 2.0 * t.j + (t.shifted ? 2.0 * e : 0.0); }

// Adds c * rho^{2j (+2e)} e^{-kappa rho^2}, merging with an existing identical monomial.
void accumulate(std::vector<GaussTerm>& out, double c, int j, bool shifted, double kappa) {
  if (c == 0.0) return;
  for (GaussTerm& t : out) {
    if (t.j == j && t.shifted == shifted && t.kappa == kappa) {
      t.coef += c;
      return;
    }
  }
  out.push_back(GaussTerm{c, j, shifted, kappa});
}

report::Json mode_parameters(const GammaParam& gp, const ModeIndex& mode) {
  return report::Json{{"gamma", gp.gamma()}, {"lambda", mode.lambda}, {"k", mode.k}, {"n", mode.n}};
}

double relative(double diff, double scale) {
  if (scale == 0.0) return std::abs(diff);
  return std::abs(diff) / std::abs(scale);
}

Field minimizer_field(const ModeEnergy& me, double phi, double psi) {
  const GammaParam& gp = me.gamma();
  if (gp.floor() == 0) {
    Field f = me.sample(extend::ClosedFormMode(gp.gamma(), me.mode()));
    return f.combine(phi, f, 0.0);
  }
  return me.sample(extend::assemble_fourth(gp, me.mode(), phi, psi, {64}));
}

// W rescaled so that E(W) equals `target`.
Field normalized_perturbation(const ModeEnergy& me, const GammaParam& gp, std::mt19937_64& rng, double target,
                              double* energy_out) {
  Field w = me.sample(random_test_function(gp, me.mode(), rng, true));
  const double ew = me.energy(w).total;
  if (!(ew > 0.0)) {
    *energy_out = ew;
    return w;
  }
  const double c = std::sqrt(target / ew);
  *energy_out = me.energy(w.combine(c, w, 0.0)).total;
  return w.combine(c, w, 0.0);
}

}  // namespace

double weight_exponent(const GammaParam& gp) { return gp.floor() == 0 ? gp.gamma() : gp.frac(); }

GaussSum& GaussSum::add(double coef, int j, bool shifted, double kappa) {
  if (j < 0) throw DomainError("GaussSum: negative power index");
  if (!(kappa > 0.0)) throw DomainError("GaussSum: kappa must be positive");
  accumulate(terms_, coef, j, shifted, kappa);
  return *this;
}

double GaussSum::value(double rho) const {
  double out = 0.0;
  for (const GaussTerm& t : terms_) {
    out += t.coef * std::pow(rho, term_power(t, e_)) * std::exp(-t.kappa * rho * rho);
  }
  return out;
}

double GaussSum::slope(double rho) const {
  double out = 0.0;
  for (const GaussTerm& t : terms_) {
    const double p = term_power(t, e_);
    const double lead = p == 0.0 ? 0.0 : p * std::pow(rho, p - 1.0);
    out += t.coef * (lead - 2.0 * t.kappa * std::pow(rho, p + 1.0)) * std::exp(-t.kappa * rho * rho);
  }
  return out;
}

GaussSum GaussSum::radial() const {
  GaussSum out(e_);
  for (const GaussTerm& t : terms_) {
    const double p = term_power(t, e_);
    if (t.j >= 1) {
      const double low = t.shifted ? 4.0 * t.j * (t.j + e_) : 4.0 * t.j * (t.j - e_);
      accumulate(out.terms_, t.coef * low, t.j - 1, t.shifted, t.kappa);
    }
    accumulate(out.terms_, -2.0 * t.kappa * (2.0 * p + 2.0 - 2.0 * e_) * t.coef, t.j, t.shifted, t.kappa);
    accumulate(out.terms_, 4.0 * t.kappa * t.kappa * t.coef, t.j + 1, t.shifted, t.kappa);
  }
  return out;
}

GaussSum GaussSum::mode_operator(const ModeIndex& mode) const {
  GaussSum out = radial();
  const double l2 = mode.lambda * mode.lambda;
  const double mu = spectral::mode_eigenvalue(mode);
  for (const GaussTerm& t : terms_) {
    accumulate(out.terms_, -l2 * t.coef, t.j + 1, t.shifted, t.kappa);
    accumulate(out.terms_, -mu * t.coef, t.j, t.shifted, t.kappa);
  }
  return out;
}

GaussSum GaussSum::fourth_operator(const ModeIndex& mode) const {
  GaussSum out = mode_operator(mode).mode_operator(mode);
  const double l2 = mode.lambda * mode.lambda;
  for (const GaussTerm& t : terms_) accumulate(out.terms_, -4.0 * l2 * t.coef, t.j, t.shifted, t.kappa);
  return out;
}

GaussSum GaussSum::scaled(double c) const {
  GaussSum out(e_);
  for (const GaussTerm& t : terms_) accumulate(out.terms_, c * t.coef, t.j, t.shifted, t.kappa);
  return out;
}

BranchCoefficients GaussSum::coefficients() const {
  // e^{-kappa rho^2} = sum (-kappa)^i / i! rho^{2i}; only i - j in {0, 1} is needed.
  BranchCoefficients c;
  for (const GaussTerm& t : terms_) {
    double& first = t.shifted ? c.beta0 : c.alpha0;
    double& second = t.shifted ? c.beta1 : c.alpha1;
    if (t.j == 0) {
      first += t.coef;
      second += -t.kappa * t.coef;
    } else if (t.j == 1) {
      second += t.coef;
    }
  }
  return c;
}

Field Field::combine(double a, const Field& other, double b) const {
  Field out;
  auto mix = [a, b](const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = a * x[i] + b * y[i];
    return r;
  };
  out.value = mix(value, other.value);
  out.slope = mix(slope, other.slope);
  out.op = mix(op, other.op);
  out.op2 = mix(op2, other.op2);
  out.coeffs = {a * coeffs.alpha0 + b * other.coeffs.alpha0, a * coeffs.alpha1 + b * other.coeffs.alpha1,
                a * coeffs.beta0 + b * other.coeffs.beta0, a * coeffs.beta1 + b * other.coeffs.beta1};
  return out;
}

ModeEnergy::ModeEnergy(const GammaParam& gp, const ModeIndex& mode, int level)
    : gp_(gp),
      mode_(mode),
      mu_(spectral::mode_eigenvalue(mode)),
      e_(weight_exponent(gp)),
      rule_(0.0, extend::rho_max_for(mode), level) {
  mode.validate();
  weight_.reserve(rule_.size());
  for (double r : rule_.nodes()) weight_.push_back(std::pow(r, 1.0 - 2.0 * e_));
}

Field ModeEnergy::sample(const GaussSum& f) const {
  if (f.exponent() != e_) throw DomainError("GaussSum weight exponent does not match the energy");
  Field out;
  const GaussSum op = f.mode_operator(mode_);
  const GaussSum op2 = gp_.floor() == 1 ? f.fourth_operator(mode_) : GaussSum(e_);
  for (double r : rule_.nodes()) {
    out.value.push_back(f.value(r));
    out.slope.push_back(f.slope(r));
    out.op.push_back(op.value(r));
    out.op2.push_back(op2.value(r));
  }
  out.coeffs = f.coefficients();
  return out;
}

Field ModeEnergy::sample(const extend::ClosedFormMode& u) const {
  if (gp_.floor() != 0 || u.gamma_eff() != gp_.gamma() || !(u.mode() == mode_)) {
    throw DomainError("closed-form minimizer does not match the energy");
  }
  Field out;
  for (double r : rule_.nodes()) {
    auto d = u.derivatives(r, 1);
    out.value.push_back(d[0]);
    out.slope.push_back(d[1]);
  }
  out.op.assign(out.value.size(), 0.0);
  out.op2.assign(out.value.size(), 0.0);
  const auto& lower = u.lower().coefficients();
  const auto& upper = u.upper().coefficients();
  out.coeffs.alpha0 = 1.0;
  out.coeffs.alpha1 = lower.size() > 1 ? lower[1] / lower[0] : 0.0;
  out.coeffs.beta0 = u.upper_amplitude();
  out.coeffs.beta1 = upper.size() > 1 ? u.upper_amplitude() * upper[1] / upper[0] : 0.0;
  return out;
}

Field ModeEnergy::sample(const extend::FourthOrderModeSolution& sol) const {
  if (gp_.floor() != 1 || sol.gp.gamma() != gp_.gamma() || !(sol.mode == mode_)) {
    throw DomainError("fourth-order minimizer does not match the energy");
  }
  const double g = e_;
  Field out;
  for (double r : rule_.nodes()) {
    double v = 0.0;
    double s = 0.0;
    double l = 0.0;
    if (sol.A != 0.0) {
      auto d = sol.w1_eval.derivatives(r, 1);
      v += sol.A * d[0];
      s += sol.A * d[1];
      l += 2.0 * sol.A * d[1] / r;
    }
    if (sol.B != 0.0) {
      auto d = sol.w2_eval.derivatives(r, 1);
      const double r2g = std::pow(r, 2.0 * g);
      v += sol.B * r2g * d[0];
      s += sol.B * (2.0 * g * r2g / r * d[0] + r2g * d[1]);
      l += 2.0 * sol.B * r2g / r * d[1];
    }
    out.value.push_back(v);
    out.slope.push_back(s);
    out.op.push_back(l);
  }
  out.op2.assign(out.value.size(), 0.0);
  out.coeffs = extend::branch_coefficients(sol);
  return out;
}

BoundaryValues ModeEnergy::boundary(const Field& f) const {
  if (gp_.floor() == 1) return extend::boundary_from_coefficients(f.coeffs, e_, mu_);
  BoundaryValues b;
  b.b0 = f.coeffs.alpha0;
  b.b2gamma = -2.0 * e_ * f.coeffs.beta0;
  return b;
}

double ModeEnergy::integrate(const std::vector<double>& integrand, double* error) const {
  const double fine = rule_.integrate(integrand);
  if (error != nullptr) *error = std::abs(fine - rule_.integrate_coarse(integrand));
  return fine;
}

EnergyBreakdown ModeEnergy::form(const Field& u, const Field& v) const {
  const double l2 = mode_.lambda * mode_.lambda;
  const auto nodes = rule_.nodes();
  std::vector<double> f(nodes.size());
  EnergyBreakdown out;
  if (gp_.floor() == 0) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double r = nodes[i];
      f[i] = (u.slope[i] * v.slope[i] + (mu_ + l2 * r * r) * u.value[i] * v.value[i]) * weight_[i];
    }
  } else {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      f[i] = (u.op[i] * v.op[i] - 4.0 * l2 * u.value[i] * v.value[i]) * weight_[i];
    }
    const BoundaryValues bu = boundary(u);
    const BoundaryValues bv = boundary(v);
    out.boundary = (mu_ / e_) * (bu.b0 * bv.b2frac + bu.b2frac * bv.b0);
  }
  out.bulk = integrate(f, &out.quadrature_error_estimate);
  out.total = out.bulk + out.boundary;
  return out;
}

EnergyBreakdown ModeEnergy::definition_form(const Field& u, const Field& v) const {
  const auto nodes = rule_.nodes();
  std::vector<double> f(nodes.size());
  const BoundaryValues bu = boundary(u);
  const BoundaryValues bv = boundary(v);
  EnergyBreakdown out;
  if (gp_.floor() == 0) {
    for (std::size_t i = 0; i < nodes.size(); ++i) f[i] = -u.value[i] * v.op[i] * weight_[i];
    out.boundary = bu.b0 * bv.b2gamma;
  } else {
    for (std::size_t i = 0; i < nodes.size(); ++i) f[i] = u.value[i] * v.op2[i] * weight_[i];
    out.boundary = bu.b0 * bv.b2gamma - bu.b2frac * bv.b2;
  }
  out.bulk = integrate(f, &out.quadrature_error_estimate);
  out.total = out.bulk + out.boundary;
  return out;
}

EnergyBreakdown mode_energy_2(const extend::ModeProfile& profile, const GammaParam& gp) {
  if (gp.floor() != 0) throw DomainError("mode_energy_2 needs gamma in (0,1)");
  if (profile.gamma_eff != gp.gamma()) throw DomainError("profile solves a different gamma");
  ModeEnergy me(gp, profile.mode);
  Field u = me.sample(extend::ClosedFormMode(gp.gamma(), profile.mode));
  return me.energy(u.combine(profile.series.c0, u, 0.0));
}

EnergyBreakdown mode_energy_4(const extend::FourthOrderModeSolution& sol, const GammaParam& gp) {
  if (gp.floor() != 1) throw DomainError("mode_energy_4 needs gamma in (1,2)");
  ModeEnergy me(gp, sol.mode);
  return me.energy(me.sample(sol));
}

GaussSum random_test_function(const GammaParam& gp, const ModeIndex& mode, std::mt19937_64& rng,
                              bool constrained) {
  const double e = weight_exponent(gp);
  const double base = 0.5 * (spectral::mode_eigenvalue(mode) + std::abs(mode.lambda));
  std::uniform_real_distribution<double> log_spread(-1.0, 1.0);
  std::uniform_int_distribution<int> extra(1, 2);
  std::uniform_int_distribution<int> power(0, 3);
  std::bernoulli_distribution coin(0.5);
  std::normal_distribution<double> normal(0.0, 1.0);
  GaussSum f(e);
  f.add(constrained ? 1.0 : normal(rng), 1, false, base * std::exp(log_spread(rng)));
  const int count = extra(rng);
  for (int i = 0; i < count; ++i) {
    const bool shifted = coin(rng);
    int j = power(rng);
    // rho^{2e} alone still vanishes at 0 for gamma < 1, but for gamma > 1 it
    // carries B2frac data.
    const int lowest = !constrained || (shifted && gp.floor() == 0) ? 0 : 1;
    j = std::max(j, lowest);
    f.add(normal(rng), j, shifted, base * std::exp(log_spread(rng)));
  }
  return f;
}

double sharp_trace_rhs(const GammaParam& gp, const ModeIndex& mode, double phi, double psi) {
  spectral::TheoremConstants c = spectral::theorem_constant(gp);
  double rhs = c.first * spectral::gjms_symbol(gp.gamma(), mode) * phi * phi;
  if (c.has_second) rhs += std::abs(c.second) * spectral::gjms_symbol(gp.gamma_tilde(), mode) * psi * psi;
  return rhs;
}

double sharp_trace_rhs_literal(const GammaParam& gp, const ModeIndex& mode, double phi, double psi) {
  spectral::TheoremConstants c = spectral::theorem_constant(gp);
  double rhs = c.first * spectral::gjms_symbol(gp.gamma(), mode) * phi * phi;
  if (c.has_second) rhs += c.second * spectral::gjms_symbol(gp.gamma_tilde(), mode) * psi * psi;
  return rhs;
}

report::VerificationReport dirichlet_principle_check(const GammaParam& gp, const ModeIndex& mode, int trials,
                                                     std::uint64_t seed, const CheckTolerances& tol) {
  ModeEnergy me(gp, mode);
  std::mt19937_64 rng(seed);
  const Field u = minimizer_field(me, 1.0, 1.0);
  const EnergyBreakdown eu = me.energy(u);
  double cross = 0.0;
  double excess = 0.0;
  double quad = relative(eu.quadrature_error_estimate, eu.total);
  int not_strict = 0;
  for (int trial = 0; trial < trials; ++trial) {
    double ew = 0.0;
    const Field w = normalized_perturbation(me, gp, rng, eu.total, &ew);
    if (!(ew > 0.0)) {
      ++not_strict;
      continue;
    }
    cross = std::max(cross, std::abs(me.form(u, w).total) / std::sqrt(eu.total * ew));
    for (double t : {-1.0, -0.5, 0.5, 1.0}) {
      const EnergyBreakdown et = me.energy(u.combine(1.0, w, t));
      quad = std::max(quad, relative(et.quadrature_error_estimate, et.total));
      const double gain = et.total - eu.total;
      excess = std::max(excess, relative(gain - t * t * ew, t * t * ew));
      if (t == 1.0 && !(gain > 0.0)) ++not_strict;
    }
  }
  report::Json params = mode_parameters(gp, mode);
  params["trials"] = trials;
  params["seed"] = seed;
  const std::string principle = "Dirichlet principle: the extension minimizes the energy among functions with its boundary data";
  report::VerificationReport rep;
  rep.add(report::make_entry("energy.dirichlet.cross_term", principle + " (pairing with admissible W vanishes)", params,
                             cross, tol.cross_term));
  rep.add(report::make_entry("energy.dirichlet.quadratic_excess", principle + " (E(u+tW) - E(u) = t^2 E(W))", params,
                             excess, tol.excess));
  rep.add(report::make_entry("energy.dirichlet.strict_increase", principle + " (E(W) > 0 and strict increase)",
                             params, static_cast<double>(not_strict), 0.0));
  rep.add(report::make_entry("energy.quadrature.step_halving", "energy quadrature control (step halving)", params,
                             quad, tol.quadrature));
  return rep;
}

report::VerificationReport trace_inequality_check(const GammaParam& gp, const ModeIndex& mode, double phi,
                                                  double psi, double scale, std::uint64_t seed,
                                                  const CheckTolerances& tol) {
  if (gp.floor() == 0) psi = 0.0;
  ModeEnergy me(gp, mode);
  std::mt19937_64 rng(seed);
  const Field u = minimizer_field(me, phi, psi);
  const EnergyBreakdown eu = me.energy(u);
  const double rhs = sharp_trace_rhs(gp, mode, phi, psi);
  const double literal = sharp_trace_rhs_literal(gp, mode, phi, psi);

  double ew = 0.0;
  const Field w = normalized_perturbation(me, gp, rng, eu.total, &ew);
  const double ep = me.energy(u.combine(1.0, w, scale)).total;
  const double excess_err = ew > 0.0 ? relative(ep - rhs - scale * scale * ew, scale * scale * ew)
                                     : std::numeric_limits<double>::infinity();

  report::Json params = mode_parameters(gp, mode);
  params["phi"] = phi;
  if (gp.floor() == 1) params["psi"] = psi;
  const std::string anchor = gp.floor() == 0
                                 ? std::string("sharp trace inequality, gamma in (0,1): equality at the extension")
                                 : std::string("sharp trace inequality, gamma in (1,2): equality at the extension");
  report::VerificationReport rep;
  rep.add(report::make_entry("energy.trace.equality", anchor, params, relative(eu.total - rhs, rhs), tol.equality));
  report::Json pparams = params;
  pparams["scale"] = scale;
  pparams["seed"] = seed;
  rep.add(report::make_entry("energy.trace.excess", "sharp trace inequality: excess of a perturbed profile is t^2 E(W)",
                             pparams, excess_err, tol.excess));
  if (gp.floor() == 1) {
    // Bound with the signed second constant, up to the equality tolerance; strict whenever psi != 0.
    rep.add(report::make_entry("energy.trace.signed_constant_bound",
                               "sharp trace inequality, gamma in (1,2): bound with the signed second constant", params,
                               std::max(0.0, literal - eu.total) / std::abs(rhs), tol.equality));
  }
  return rep;
}

report::VerificationReport symmetry_check(const GammaParam& gp, const ModeIndex& mode, int pairs,
                                          std::uint64_t seed, const CheckTolerances& tol) {
  ModeEnergy me(gp, mode);
  std::mt19937_64 rng(seed);
  double asym = 0.0;
  double agree = 0.0;
  for (int i = 0; i < pairs; ++i) {
    const Field u = me.sample(random_test_function(gp, mode, rng, false));
    const Field v = me.sample(random_test_function(gp, mode, rng, false));
    const double quv = me.definition_form(u, v).total;
    const double qvu = me.definition_form(v, u).total;
    const double suv = me.form(u, v).total;
    const double scale = std::max({std::abs(quv), std::abs(qvu),
                                   std::sqrt(std::abs(me.energy(u).total * me.energy(v).total))});
    asym = std::max(asym, relative(quv - qvu, scale));
    agree = std::max(agree, relative(quv - suv, scale));
  }
  report::Json params = mode_parameters(gp, mode);
  params["pairs"] = pairs;
  params["seed"] = seed;
  report::VerificationReport rep;
  rep.add(report::make_entry("energy.symmetry.definition_form", "symmetry of the Dirichlet form", params, asym,
                             tol.symmetry));
  rep.add(report::make_entry("energy.symmetry.explicit_formula",
                             "Dirichlet form equals its explicit symmetric formula", params, agree, tol.symmetry));
  return rep;
}

}  // namespace crext::energy
