// verify: run the verification suites described by a JSON config.
//
// Exit status: 0 all checks pass, 1 some check failed, 2 configuration or
// output error. The output path comes from the config, then the
// CREXT_VERIFY_OUT environment variable, then --out (later wins); without
// one the report goes to stdout.

#include "crext/errors.hpp"
#include "crext/report.hpp"
#include "crext/suite.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  CLI::App app{"Run the crext verification suites and emit a report"};
  std::string config_path;
  std::vector<std::string> suites;
  std::vector<double> gammas;
  std::string format;
  std::string out;
  std::uint64_t seed = 0;
  app.add_option("--config", config_path, "JSON config file")->required();
  app.add_option("--suite", suites, "suite to run (repeatable): algebra, expansion, spectral, dtn, energy, all");
  app.add_option("--gamma", gammas, "gamma value (repeatable); replaces gamma_list");
  app.add_option("--format", format, "json or table");
  app.add_option("--out", out, "output path");
  auto* seed_opt = app.add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  crext::suite::SuiteConfig config;
  try {
    config = crext::suite::load_config(config_path);
    if (!suites.empty()) config.suites = suites;
    if (!gammas.empty()) config.gamma_list = gammas;
    if (!format.empty()) config.format = crext::report::parse_format(format);
    if (*seed_opt) config.seed = seed;
    if (const char* env = std::getenv("CREXT_VERIFY_OUT"); env != nullptr && *env != '\0') config.output_path = env;
    if (!out.empty()) config.output_path = out;
    crext::suite::validate(config);
  } catch (const crext::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }

  crext::report::VerificationReport report;
  try {
    report = crext::suite::run_suite(config);
  } catch (const crext::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification aborted: " << e.what() << '\n';
    return 1;
  }

  try {
    if (config.output_path) {
      crext::report::emit_report(report, config.format, *config.output_path);
    } else {
      crext::report::write_report(report, config.format, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "output error: " << e.what() << '\n';
    return 2;
  }

  int passed = 0;
  for (const auto& e : report.entries()) passed += e.pass ? 1 : 0;
  std::cerr << passed << "/" << report.entries().size() << " checks passed\n";
  return report.all_pass() ? 0 : 1;
}
