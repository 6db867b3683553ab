#include "crext/extend.hpp"

#include "crext/errors.hpp"
#include "crext/special.hpp"

#include <Eigen/Dense>
#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <utility>
#include <cmath>
#include <functional>
#include <limits>

namespace crext::extend {

namespace {

constexpr int kSeriesOrder = 80;

void validate_gamma_eff(double g) { spectral::validate_gamma(g); }

// Pochhammer (a)_i.
double rising(double a, int i) {
  double r = 1.0;
  for (int t = 0; t < i; ++t) r *= a + t;
  return r;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (points < 8) throw DomainError("grid needs at least 8 points");
  std::vector<double> g(static_cast<std::size_t>(points));
  const double step = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) g[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
  g.back() = hi;
  return g;
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::string to_string(Method m) { return m == Method::closed_form ? "closed_form" : "numeric"; }

double rho_max_for(const ModeIndex& mode) {
  mode.validate();
  return std::max(8.0 / std::sqrt(std::abs(mode.lambda)), 12.0);
}

double series_scale(const ModeIndex& mode) {
  return 1.0 / std::sqrt(spectral::mode_eigenvalue(mode) + std::abs(mode.lambda));
}

std::vector<double> fit_window(const ModeIndex& mode) {
  const double sigma = series_scale(mode);
  std::vector<double> pts;
  for (int i = 8; i >= 0; --i) pts.push_back(sigma * std::pow(2.0, -0.25 * i));
  return pts;
}

ClosedFormMode::ClosedFormMode(double gamma_eff, const ModeIndex& mode) : gamma_eff_(gamma_eff), mode_(mode) {
  validate_gamma_eff(gamma_eff);
  mu_ = spectral::mode_eigenvalue(mode);
  a_ = 0.5 * (1.0 - gamma_eff + 2.0 * mode.k + mode.n);
  b_ = 1.0 - gamma_eff;
  norm_ = special::gamma_fn(1.0 - b_) * special::rgamma(a_ - b_ + 1.0);
  c1_ = special::gamma_fn(b_ - 1.0) * special::gamma_fn(a_ - b_ + 1.0) /
        (special::gamma_fn(a_) * special::gamma_fn(1.0 - b_)) * std::pow(std::abs(mode.lambda), gamma_eff);
  cutoff_ = series_scale(mode) / 8.0;
  lower_ = series::lower_branch(gamma_eff, mu_, mode.lambda, kSeriesOrder);
  upper_ = series::upper_branch(gamma_eff, mu_, mode.lambda, kSeriesOrder);
}

std::array<double, 5> ClosedFormMode::derivatives(double rho, int order, bool use_series) const {
  if (!(rho > 0.0)) throw DomainError("ClosedFormMode: needs rho > 0");
  if (order < 0 || order > 4) throw DomainError("ClosedFormMode: derivative order must be in 0..4");
  if (use_series && rho < cutoff_) {
    auto lo = lower_.derivatives(rho, order);
    auto up = upper_.derivatives(rho, order);
    std::array<double, 5> out{};
    for (int i = 0; i <= order; ++i) out[static_cast<std::size_t>(i)] = lo[static_cast<std::size_t>(i)] + c1_ * up[static_cast<std::size_t>(i)];
    return out;
  }
  const double c = std::abs(mode_.lambda);
  const double w = c * rho * rho;
  // U^{(i)}(w) = (-1)^i (a)_i U(a+i, b+i, w).
  std::array<double, 5> du{};
  for (int i = 0; i <= order; ++i) {
    du[static_cast<std::size_t>(i)] =
        (i % 2 == 0 ? 1.0 : -1.0) * rising(a_, i) * special::kummer_u(a_ + i, b_ + i, w);
  }
  // F(w) = e^{-w/2} U(w) / N; F^{(n)} = e^{-w/2}/N sum C(n,i) (-1/2)^{n-i} U^{(i)}.
  const double scale = std::exp(-0.5 * w) / norm_;
  std::array<double, 5> f{};
  for (int n = 0; n <= order; ++n) {
    double s = 0.0;
    for (int i = 0; i <= n; ++i) s += binom(n, i) * std::pow(-0.5, n - i) * du[static_cast<std::size_t>(i)];
    f[static_cast<std::size_t>(n)] = scale * s;
  }
  std::array<double, 5> u{};
  u[0] = f[0];
  if (order >= 1) u[1] = 2.0 * c * rho * f[1];
  if (order >= 2) u[2] = 2.0 * c * f[1] + 4.0 * c * c * rho * rho * f[2];
  if (order >= 3) u[3] = 12.0 * c * c * rho * f[2] + 8.0 * c * c * c * rho * rho * rho * f[3];
  if (order >= 4) {
    u[4] = 12.0 * c * c * f[2] + 48.0 * c * c * c * rho * rho * f[3] + 16.0 * c * c * c * c * std::pow(rho, 4) * f[4];
  }
  return u;
}

double ClosedFormMode::equation_residual(double rho, bool use_series) const {
  auto d = derivatives(rho, 2, use_series);
  const double l2 = mode_.lambda * mode_.lambda;
  const double t1 = d[2];
  const double t2 = (1.0 - 2.0 * gamma_eff_) * d[1] / rho;
  const double t3 = (l2 * rho * rho + mu_) * d[0];
  const double scale = std::abs(t1) + std::abs(t2) + std::abs(t3);
  return scale == 0.0 ? 0.0 : std::abs(t1 + t2 - t3) / scale;
}

std::vector<double> frobenius_series(double gamma_eff, const ModeIndex& mode, int order) {
  validate_gamma_eff(gamma_eff);
  if (order < 0) throw DomainError("frobenius_series: order must be nonnegative");
  return series::lower_branch(gamma_eff, spectral::mode_eigenvalue(mode), mode.lambda, order).coefficients();
}

AmplitudeFit fit_amplitudes(double gamma_eff, const ModeIndex& mode, const std::vector<double>& rho,
                            const std::vector<double>& values) {
  if (rho.size() != values.size()) throw DomainError("fit_amplitudes: size mismatch");
  if (rho.size() < 3) throw ConvergenceError("fit_amplitudes: ill-conditioned fit, fewer than three samples");
  const double mu = spectral::mode_eigenvalue(mode);
  const double rmax = *std::max_element(rho.begin(), rho.end());
  const int order = std::max(8, series::terms_for_radius(gamma_eff, mu, mode.lambda, rmax));
  auto lower = series::lower_branch(gamma_eff, mu, mode.lambda, order);
  auto upper = series::upper_branch(gamma_eff, mu, mode.lambda, order);
  Eigen::MatrixXd basis(static_cast<Eigen::Index>(rho.size()), 2);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(rho.size()));
  for (std::size_t i = 0; i < rho.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    basis(row, 0) = lower.value(rho[i]);
    basis(row, 1) = upper.value(rho[i]);
    rhs(row) = values[i];
  }
  Eigen::VectorXd sol = basis.colPivHouseholderQr().solve(rhs);
  AmplitudeFit out;
  out.c0 = sol(0);
  out.c1 = sol(1);
  const double norm = rhs.norm();
  out.misfit = norm == 0.0 ? 0.0 : (basis * sol - rhs).norm() / norm;
  return out;
}

double extract_dtn(const ModeProfile& profile) {
  AmplitudeFit fit = fit_amplitudes(profile.gamma_eff, profile.mode, profile.fit_rho, profile.fit_values);
  if (fit.c0 == 0.0) throw ConvergenceError("extract_dtn: vanishing constant amplitude");
  return -2.0 * profile.gamma_eff * fit.c1 / fit.c0;
}

namespace {

double two_branch_misfit(const ModeProfile& p, double r0, double r1) {
  const int order = 40;
  series::BranchSeries s0;
  series::BranchSeries s1;
  try {
    s0 = series::trial_branch(r0, p.gamma_eff, p.mu, p.mode.lambda, order);
    s1 = series::trial_branch(r1, p.gamma_eff, p.mu, p.mode.lambda, order);
  } catch (const PoleError&) {
    return std::numeric_limits<double>::infinity();
  }
  const auto rows = static_cast<Eigen::Index>(p.fit_rho.size());
  Eigen::MatrixXd basis(rows, 2);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double r = p.fit_rho[static_cast<std::size_t>(i)];
    basis(i, 0) = s0.value(r);
    basis(i, 1) = s1.value(r);
    rhs(i) = p.fit_values[static_cast<std::size_t>(i)];
  }
  Eigen::VectorXd sol = basis.colPivHouseholderQr().solve(rhs);
  return (basis * sol - rhs).norm() / rhs.norm();
}

// Nelder-Mead on a two-dimensional function.
template <class F>
std::array<double, 2> nelder_mead(F&& f, std::array<double, 2> start, double step, int max_iter) {
  using Point = std::array<double, 2>;
  std::array<Point, 3> x{start, Point{start[0] + step, start[1]}, Point{start[0], start[1] + step}};
  std::array<double, 3> fx{f(x[0]), f(x[1]), f(x[2])};
  auto along = [](const Point& from, const Point& to, double t) {
    return Point{from[0] + t * (to[0] - from[0]), from[1] + t * (to[1] - from[1])};
  };
  for (int it = 0; it < max_iter; ++it) {
    std::array<int, 3> idx{0, 1, 2};
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return fx[static_cast<std::size_t>(i)] < fx[static_cast<std::size_t>(j)]; });
    const auto best = static_cast<std::size_t>(idx[0]);
    const auto mid = static_cast<std::size_t>(idx[1]);
    const auto worst = static_cast<std::size_t>(idx[2]);
    const double spread = std::max(std::abs(x[worst][0] - x[best][0]), std::abs(x[worst][1] - x[best][1]));
    if (spread < 1e-11) break;
    const Point centroid{0.5 * (x[best][0] + x[mid][0]), 0.5 * (x[best][1] + x[mid][1])};
    const Point reflected = along(x[worst], centroid, 2.0);
    const double fr = f(reflected);
    if (fr < fx[best]) {
      const Point expanded = along(x[worst], centroid, 3.0);
      const double fe = f(expanded);
      if (fe < fr) {
        x[worst] = expanded;
        fx[worst] = fe;
      } else {
        x[worst] = reflected;
        fx[worst] = fr;
      }
    } else if (fr < fx[mid]) {
      x[worst] = reflected;
      fx[worst] = fr;
    } else {
      const Point contracted = along(x[worst], centroid, 0.5);
      const double fc = f(contracted);
      if (fc < fx[worst]) {
        x[worst] = contracted;
        fx[worst] = fc;
      } else {
        for (std::size_t i : {mid, worst}) {
          x[i] = along(x[best], x[i], 0.5);
          fx[i] = f(x[i]);
        }
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < 3; ++i) {
    if (fx[i] < fx[best]) best = i;
  }
  return x[best];
}

}  // namespace

std::array<double, 2> fit_free_exponents(const ModeProfile& profile) {
  if (profile.fit_rho.size() < 3) throw ConvergenceError("fit_free_exponents: too few window samples");
  auto objective = [&](const std::array<double, 2>& r) {
    if (r[0] < -0.45 || r[0] > 0.45 || r[1] < 0.05 || r[1] > 3.95) return std::numeric_limits<double>::infinity();
    // Near r = 2g' - 2j the trial series blows up and its column collapses
    // onto the true upper branch; such r say nothing about the exponent.
    for (double x : r) {
      for (int j = 1; j <= 3; ++j) {
        if (std::abs(x - (2.0 * profile.gamma_eff - 2.0 * j)) < 0.02) return std::numeric_limits<double>::infinity();
      }
    }
    return std::log(two_branch_misfit(profile, r[0], r[1]) + 1e-300);
  };
  // Coarse scan, then refine from the best few cells: near a pole the misfit
  // falls off only linearly, so the best cell alone can sit next to one. The
  // scan lattice is offset so that round exponents are not hit exactly.
  std::vector<std::pair<double, std::array<double, 2>>> cells;
  for (int i = -8; i <= 8; ++i) {
    for (int j = 1; j <= 78; ++j) {
      std::array<double, 2> r{0.05 * i + 0.0137, 0.05 * j + 0.0137};
      const double v = objective(r);
      if (std::isfinite(v)) cells.emplace_back(v, r);
    }
  }
  if (cells.empty()) throw ConvergenceError("fit_free_exponents: empty search region");
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::array<double, 2>> starts;
  for (const auto& [v, r] : cells) {
    bool distinct = true;
    for (const auto& s : starts) distinct = distinct && std::abs(s[0] - r[0]) + std::abs(s[1] - r[1]) > 0.2;
    if (distinct) starts.push_back(r);
    if (starts.size() == 6) break;
  }
  std::array<double, 2> best = starts.front();
  double best_value = std::numeric_limits<double>::infinity();
  for (const auto& s : starts) {
    const std::array<double, 2> r = nelder_mead(objective, s, 0.02, 2000);
    const double v = objective(r);
    if (v < best_value) {
      best_value = v;
      best = r;
    }
  }
  return best;
}

namespace {

using State = std::array<double, 2>;

// Inward integration of v = e^{|lambda| rho^2 / 2} u:
//   v'' + ((1-2g')/rho - 2c rho) v' - (c(2-2g') + mu) v = 0.
// The decaying solution of the u-equation is the growing one inward, so the
// start values only need the leading asymptotics.
void integrate_numeric(double gamma_eff, const ModeIndex& mode, const std::vector<double>& rho_desc,
                       double tolerance, std::vector<State>& states) {
  namespace odeint = boost::numeric::odeint;
  const double c = std::abs(mode.lambda);
  const double mu = spectral::mode_eigenvalue(mode);
  const double a = 0.5 * (1.0 - gamma_eff + 2.0 * mode.k + mode.n);
  const double b = 1.0 - gamma_eff;
  auto rhs = [&](const State& y, State& dy, double rho) {
    dy[0] = y[1];
    dy[1] = -((1.0 - 2.0 * gamma_eff) / rho - 2.0 * c * rho) * y[1] + (c * (2.0 - 2.0 * gamma_eff) + mu) * y[0];
  };
  const double rho0 = rho_desc.front();
  const double w0 = c * rho0 * rho0;
  // v ~ w^{-a} (1 - a(a-b+1)/w), scaled by w0^a to keep numbers O(1).
  const double corr = a * (a - b + 1.0) / w0;
  State y{1.0 - corr, 0.0};
  // dv/dw = -a w^{-a-1}(1 - (a+1)(a-b+1)/w) times dw/drho = 2 c rho.
  y[1] = -a / w0 * (1.0 - (a + 1.0) * (a - b + 1.0) / w0) * 2.0 * c * rho0;
  states.clear();
  states.reserve(rho_desc.size());
  auto stepper = odeint::make_dense_output(tolerance, tolerance, odeint::runge_kutta_dopri5<State>());
  auto observer = [&](const State& s, double) { states.push_back(s); };
  odeint::integrate_times(stepper, rhs, y, rho_desc.begin(), rho_desc.end(), -1e-3 * rho0, observer);
  if (states.size() != rho_desc.size()) throw ConvergenceError("numeric mode integration stopped early");
}

}  // namespace

ModeProfile solve_mode(double gamma_eff, const ModeIndex& mode, Method method, const SolveOptions& options) {
  validate_gamma_eff(gamma_eff);
  mode.validate();
  ModeProfile p;
  p.gamma_eff = gamma_eff;
  p.mode = mode;
  p.method = method;
  p.mu = spectral::mode_eigenvalue(mode);
  p.rho_max = rho_max_for(mode);
  p.sigma = series_scale(mode);
  p.grid = log_grid(p.sigma * 1e-4, p.rho_max, options.grid_points);
  p.fit_rho = fit_window(mode);
  const double l2 = mode.lambda * mode.lambda;
  // Residual is reported relative to the largest term magnitude on the grid;
  // far-field points where u underflows would make pointwise ratios noise.
  double worst = 0.0;
  double scale = 0.0;

  if (method == Method::closed_form) {
    ClosedFormMode cf(gamma_eff, mode);
    for (double r : p.grid) {
      auto d = cf.derivatives(r, 2);
      p.values.push_back(d[0]);
      p.slopes.push_back(d[1]);
      const double t2 = (1.0 - 2.0 * gamma_eff) * d[1] / r;
      const double t3 = (l2 * r * r + p.mu) * d[0];
      worst = std::max(worst, std::abs(d[2] + t2 - t3));
      scale = std::max(scale, std::abs(d[2]) + std::abs(t2) + std::abs(t3));
    }
    for (double r : p.fit_rho) p.fit_values.push_back(cf.derivatives(r, 0, false)[0]);
  } else {
    const double rho_lo = p.sigma / 4.0;
    std::vector<double> times;
    for (double r : p.grid) {
      if (r >= rho_lo) times.push_back(r);
    }
    times.insert(times.end(), p.fit_rho.begin(), p.fit_rho.end());
    std::sort(times.begin(), times.end(), std::greater<>());
    times.erase(std::unique(times.begin(), times.end()), times.end());
    std::vector<State> states;
    integrate_numeric(gamma_eff, mode, times, options.ode_tolerance, states);
    const double c = std::abs(mode.lambda);
    auto u_of = [&](std::size_t i) { return std::exp(-0.5 * c * times[i] * times[i]) * states[i][0]; };
    auto du_of = [&](std::size_t i) {
      return std::exp(-0.5 * c * times[i] * times[i]) * (states[i][1] - c * times[i] * states[i][0]);
    };
    std::vector<double> raw_fit;
    for (double r : p.fit_rho) {
      auto it = std::find(times.begin(), times.end(), r);
      raw_fit.push_back(u_of(static_cast<std::size_t>(it - times.begin())));
    }
    AmplitudeFit fit = fit_amplitudes(gamma_eff, mode, p.fit_rho, raw_fit);
    if (!(std::abs(fit.c0) > 0.0)) throw ConvergenceError("numeric matching produced a zero amplitude");
    const double inv = 1.0 / fit.c0;
    for (double v : raw_fit) p.fit_values.push_back(v * inv);
    const double c1 = fit.c1 * inv;
    auto lower = series::lower_branch(gamma_eff, p.mu, mode.lambda, kSeriesOrder);
    auto upper = series::upper_branch(gamma_eff, p.mu, mode.lambda, kSeriesOrder);
    for (double r : p.grid) {
      if (r < rho_lo) {
        auto lo = lower.derivatives(r, 1);
        auto up = upper.derivatives(r, 1);
        p.values.push_back(lo[0] + c1 * up[0]);
        p.slopes.push_back(lo[1] + c1 * up[1]);
      } else {
        auto it = std::find(times.begin(), times.end(), r);
        const auto i = static_cast<std::size_t>(it - times.begin());
        p.values.push_back(u_of(i) * inv);
        p.slopes.push_back(du_of(i) * inv);
      }
    }
    // Residual by fourth-order differences of u' in log rho (grid is log-uniform).
    const double h = std::log(p.grid[1] / p.grid[0]);
    for (std::size_t i = 2; i + 2 < p.grid.size(); ++i) {
      if (p.grid[i - 2] < rho_lo) continue;
      const double r = p.grid[i];
      const double d_log = (-p.slopes[i + 2] + 8.0 * p.slopes[i + 1] - 8.0 * p.slopes[i - 1] + p.slopes[i - 2]) / (12.0 * h);
      const double u2 = d_log / r;
      const double t2 = (1.0 - 2.0 * gamma_eff) * p.slopes[i] / r;
      const double t3 = (l2 * r * r + p.mu) * p.values[i];
      worst = std::max(worst, std::abs(u2 + t2 - t3));
      scale = std::max(scale, std::abs(u2) + std::abs(t2) + std::abs(t3));
    }
  }
  p.residual = scale > 0.0 ? worst / scale : 0.0;

  AmplitudeFit fit = fit_amplitudes(gamma_eff, mode, p.fit_rho, p.fit_values);
  p.series.c0 = fit.c0;
  p.series.a1 = p.mu / (4.0 * (1.0 - gamma_eff));
  p.series.c1 = fit.c1;
  p.decay = std::abs(p.values.back());
  return p;
}

FourthOrderModeSolution assemble_fourth(const GammaParam& gp, const ModeIndex& mode, double phi, double psi,
                                        const SolveOptions& options) {
  if (gp.floor() != 1) throw DomainError("assemble_fourth needs gamma in (1,2)");
  const double g = gp.frac();
  FourthOrderModeSolution sol{gp,
                              mode,
                              solve_mode(gp.gamma(), mode, Method::closed_form, options),
                              solve_mode(gp.gamma_tilde(), mode, Method::closed_form, options),
                              ClosedFormMode(gp.gamma(), mode),
                              ClosedFormMode(gp.gamma_tilde(), mode)};
  sol.phi = phi;
  sol.psi = psi;
  sol.A = phi;
  sol.B = -psi / (2.0 * g);
  sol.poisson_phi = std::pow(2.0, 0.5 * (gp.m() - gp.gamma()));
  sol.poisson_psi = std::pow(2.0, 0.5 * (gp.m() - gp.gamma_tilde()));
  for (double r : sol.w1.grid) {
    if (r < sol.w1.sigma / 8.0) continue;
    auto res = sol.l4_value(r);
    if (res[1] > 0.0) sol.l4_residual = std::max(sol.l4_residual, std::abs(res[0]) / res[1]);
  }
  return sol;
}

double FourthOrderModeSolution::value(double rho) const {
  const double g = gp.frac();
  return A * w1_eval.value(rho) + B * std::pow(rho, 2.0 * g) * w2_eval.value(rho);
}

double FourthOrderModeSolution::l_value(double rho) const {
  const double g = gp.frac();
  double out = 0.0;
  if (A != 0.0) out += 2.0 * A * w1_eval.derivatives(rho, 1)[1] / rho;
  if (B != 0.0) out += 2.0 * B * std::pow(rho, 2.0 * g - 1.0) * w2_eval.derivatives(rho, 1)[1];
  return out;
}

std::array<double, 2> FourthOrderModeSolution::l4_value(double rho) const {
  const double g = gp.frac();
  const double l2 = mode.lambda * mode.lambda;
  const double mu = spectral::mode_eigenvalue(mode);
  // v = sum coef * rho^q W'(rho); v', v'' by the product rule.
  double v = 0.0;
  double dv = 0.0;
  double d2v = 0.0;
  double u = 0.0;
  auto add = [&](double coef, double q, const ClosedFormMode& w, double pre_power) {
    if (coef == 0.0) return;
    auto d = w.derivatives(rho, 3);
    const double rq = std::pow(rho, q);
    v += coef * rq * d[1];
    dv += coef * (q * rq / rho * d[1] + rq * d[2]);
    d2v += coef * (q * (q - 1.0) * rq / (rho * rho) * d[1] + 2.0 * q * rq / rho * d[2] + rq * d[3]);
    u += coef / 2.0 * std::pow(rho, pre_power) * d[0];
  };
  add(2.0 * A, -1.0, w1_eval, 0.0);
  add(2.0 * B, 2.0 * g - 1.0, w2_eval, 2.0 * g);
  const double t1 = d2v;
  const double t2 = (1.0 - 2.0 * g) * dv / rho;
  const double t3 = (l2 * rho * rho + mu) * v;
  const double t4 = 4.0 * l2 * u;
  return {t1 + t2 - t3 - t4, std::abs(t1) + std::abs(t2) + std::abs(t3) + std::abs(t4)};
}

BranchCoefficients branch_coefficients(const FourthOrderModeSolution& sol) {
  // W1 = c0 L(g) + c1 rho^{2g+2} (...),  rho^{2[g]} W2 = rho^{2[g]} c0' L(g~) + c1' rho^2 (...).
  const SeriesData& s1 = sol.w1.series;
  const SeriesData& s2 = sol.w2.series;
  BranchCoefficients c;
  c.alpha0 = sol.A * s1.c0;
  c.alpha1 = sol.A * s1.c0 * s1.a1 + sol.B * s2.c1;
  c.beta0 = sol.B * s2.c0;
  c.beta1 = sol.A * s1.c1 + sol.B * s2.c0 * s2.a1;
  return c;
}

BoundaryValues boundary_from_coefficients(const BranchCoefficients& c, double g, double mu) {
  BoundaryValues b;
  b.b0 = c.alpha0;
  b.b2 = -4.0 * (1.0 - g) * c.alpha1 - ((1.0 - g) / g) * mu * c.alpha0;
  b.b2frac = -2.0 * g * c.beta0;
  b.b2gamma = 8.0 * g * (1.0 + g) * c.beta1 - 2.0 * (1.0 + g) * mu * c.beta0;
  return b;
}

BoundaryValues eval_boundary_ops(const FourthOrderModeSolution& sol) {
  return boundary_from_coefficients(branch_coefficients(sol), sol.gp.frac(),
                                    spectral::mode_eigenvalue(sol.mode));
}

}  // namespace crext::extend
