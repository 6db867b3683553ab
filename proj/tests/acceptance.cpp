// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "crext/report.hpp"
#include "crext/suite.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <vector>

using crext::report::VerificationReport;
using crext::suite::SuiteConfig;

namespace {

struct Criterion {
  int number;
  std::string title;
  // Check ids (or id prefixes ending in '.') that make up the criterion.
  std::vector<std::string> ids;
  std::function<VerificationReport(const SuiteConfig&)> run;
  // Wall-clock budget in seconds, 0 for none.
  double budget = 0.0;
};

bool matches(const std::string& id, const std::string& key) {
  if (!key.empty() && key.back() == '.') return id.rfind(key, 0) == 0;
  return id == key;
}

int evaluate(const Criterion& c, const SuiteConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  std::string error;
  try {
    rep = c.run(config);
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  int selected = 0;
  int failed = 0;
  double worst = 0.0;
  std::vector<bool> seen(c.ids.size(), false);
  for (const auto& e : rep.entries()) {
    bool hit = e.check_id.ends_with(".solver");
    for (std::size_t i = 0; i < c.ids.size(); ++i) {
      if (matches(e.check_id, c.ids[i])) {
        seen[i] = true;
        hit = true;
      }
    }
    if (!hit) continue;
    ++selected;
    if (!e.pass) {
      ++failed;
      std::printf("    failing: %s error=%.3e tol=%.1e %s\n", e.check_id.c_str(), e.measured_error, e.tolerance,
                  e.parameters.dump().c_str());
    }
    if (e.tolerance > 0.0 && e.measured_error / e.tolerance > worst) worst = e.measured_error / e.tolerance;
  }
  bool ok = error.empty() && failed == 0 && selected > 0;
  for (std::size_t i = 0; i < c.ids.size(); ++i) {
    if (!seen[i]) {
      ok = false;
      std::printf("    missing: %s\n", c.ids[i].c_str());
    }
  }
  const bool in_time = c.budget <= 0.0 || seconds < c.budget;
  if (!in_time) std::printf("    over budget: %.1f s > %.0f s\n", seconds, c.budget);
  ok = ok && in_time;
  std::printf("criterion %2d %s  %s  (%d checks, worst error/tol %.2e, %.1f s)%s%s\n", c.number, ok ? "PASS" : "FAIL",
              c.title.c_str(), selected, worst, seconds, error.empty() ? "" : "  aborted: ", error.c_str());
  std::fflush(stdout);
  return ok ? 0 : 1;
}

SuiteConfig with_gammas(SuiteConfig c, std::vector<double> gammas) {
  c.gamma_list = std::move(gammas);
  return c;
}

}  // namespace

int main() {
  SuiteConfig config;
  crext::suite::validate(config);

  const std::vector<double> low{0.25, 0.5, 0.75};
  const std::vector<double> high{1.25, 1.5, 1.75};
  // The energy suite is shared by criteria 7 and 8.
  std::optional<VerificationReport> energy;
  auto energy_report = [&energy](const SuiteConfig& c) {
    if (!energy) energy = crext::suite::run_energy(c);
    return *energy;
  };

  const std::vector<Criterion> criteria{
      {1, "factorization of the weighted poly-sublaplacian, k = 1..6", {"algebra.factorization"},
       [](SuiteConfig c) {
         c.commutator_max_k = 3;
         VerificationReport r = crext::suite::run_algebra(c);
         VerificationReport out;
         for (const auto& e : r.entries()) {
           if (e.check_id == "algebra.factorization") out.add(e);
         }
         return out;
       },
       10.0},
      {2, "commutator chain, k = 3..5", {"algebra.commutator_chain"},
       [](SuiteConfig c) {
         c.factorization_max_k = 1;
         VerificationReport r = crext::suite::run_algebra(c);
         VerificationReport out;
         for (const auto& e : r.entries()) {
           if (e.check_id == "algebra.commutator_chain") out.add(e);
         }
         return out;
       },
       10.0},
      {3, "expansion closed form vs recursion and duality, l <= 8, 20 rational s",
       {"expansion.closed_form", "expansion.duality"},
       [](const SuiteConfig& c) { return crext::suite::run_expansion(c); }},
      {4, "sub-Laplacian eigenvalue on explicit modes, n = 1, 2", {"spectral.mode_eigenvalue"},
       [](const SuiteConfig& c) { return crext::suite::run_spectral(c); }},
      {5, "DtN ratio for gamma in (0,1): closed form 1e-8, numeric ODE 1e-4",
       {"dtn.closed_form_ratio", "dtn.numeric_ratio"},
       [&](const SuiteConfig& c) { return crext::suite::run_dtn(with_gammas(c, low)); }},
      {6, "both DtN constants for gamma in (1,2) at 1e-6, mutual exclusion at 1e-8",
       {"dtn.first_constant", "dtn.second_constant", "dtn.mutual_exclusion"},
       [&](const SuiteConfig& c) { return crext::suite::run_dtn(with_gammas(c, high)); }},
      {7, "sharp trace equality and Dirichlet principle excess, 20 perturbations",
       {"energy.trace.", "energy.dirichlet.", "energy.quadrature."},
       energy_report},
      {8, "symmetry of the Dirichlet form, 20 pairs per branch", {"energy.symmetry."},
       energy_report},
      {9, "constants agree across formulations to 1e-12",
       {"spectral.trace_constant_forms", "spectral.boundary_chain", "spectral.gamma_shift_identity"},
       [](const SuiteConfig& c) { return crext::suite::run_spectral(c); }},
      {10, "Kummer equation residual 1e-6 and Gamma reflection 1e-12",
       {"spectral.kummer_equation_residual", "spectral.gamma_reflection"},
       [](const SuiteConfig& c) { return crext::suite::run_spectral(c); }},
  };

  int failures = 0;
  for (const Criterion& c : criteria) failures += evaluate(c, config);
  std::printf("%s: %d of %zu criteria passed\n", failures == 0 ? "ACCEPTED" : "REJECTED",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
