#pragma once

// Batch verification: configuration, the five check suites and their
// aggregation into one report.

#include "crext/report.hpp"
#include "crext/spectral.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crext::suite {

using spectral::GammaParam;
using spectral::ModeIndex;

struct ModeGrid {
  std::vector<double> lambdas;
  std::vector<int> ks;
  std::vector<int> ns;

  /// n-major, then lambda, then k (same order as default_mode_grid).
  std::vector<ModeIndex> modes() const;
};

/// Canonical suite order.
inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebra", "expansion", "spectral", "dtn", "energy"};
  return names;
}

struct SuiteConfig {
  /// Expanded and in canonical order ("all" is resolved by validate()).
  std::vector<std::string> suites{"all"};
  std::vector<double> gamma_list{0.25, 0.5, 0.75, 1.25, 1.5, 1.75};
  ModeGrid mode_grid{{0.25, 0.5, 1.0, 2.0, 4.0}, {0, 1, 2, 3, 4, 5, 6, 7, 8}, {1, 2, 3}};
  /// Modes for the energy suite, which costs about 0.25 s per (gamma, mode).
  ModeGrid energy_grid{{0.25, 1.0, 4.0}, {0, 3, 8}, {1, 3}};
  /// Keyed by suite name or check_id prefix; the longest matching key wins.
  std::map<std::string, double> tolerances;
  std::uint64_t seed = 20240611;
  std::optional<std::string> output_path;
  report::Format format = report::Format::json;

  int factorization_max_k = 6;
  int commutator_max_k = 5;
  int expansion_max_l = 8;
  int expansion_samples = 20;
  int energy_trials = 20;
  int symmetry_pairs = 20;
  /// Run the independent ODE path next to the closed form in the dtn suite.
  bool numeric_path = true;
};

/// Throws ConfigError with a message naming the offending field or value.
void validate(SuiteConfig& config);

/// Parses a config document on top of the defaults (unknown keys are errors).
SuiteConfig parse_config(const report::Json& doc);
/// Reads and parses a JSON file; ConfigError for unreadable or malformed files.
SuiteConfig load_config(const std::string& path);

/// Runs the selected suites and applies tolerance overrides.
report::VerificationReport run_suite(const SuiteConfig& config);

report::VerificationReport run_algebra(const SuiteConfig& config);
report::VerificationReport run_expansion(const SuiteConfig& config);
report::VerificationReport run_spectral(const SuiteConfig& config);
report::VerificationReport run_dtn(const SuiteConfig& config);
report::VerificationReport run_energy(const SuiteConfig& config);

struct DtnOptions {
  bool numeric_path = true;
  /// Free exponent fits on every stride-th mode.
  int indicial_stride = 4;
};

/// DtN identities for one gamma over `modes`: the constant times the GJMS
/// symbol for gamma < 1, both constants plus mutual exclusion and the
/// Poisson-normalized branch constants for gamma > 1.
report::VerificationReport verify_dtn_theorem(double gamma, const std::vector<ModeIndex>& modes,
                                              const DtnOptions& options = {});

}  // namespace crext::suite
