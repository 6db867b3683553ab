#pragma once

// Verification results: one entry per check, a per-suite summary, and the two
// output formats. Suite membership is the check_id prefix before the first '.'.

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace crext::report {

using Json = nlohmann::ordered_json;

struct CheckEntry {
  std::string check_id;
  std::string paper_anchor;
  Json parameters = Json::object();
  double measured_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// measured_error <= tolerance, false for NaN.
CheckEntry make_entry(std::string check_id, std::string anchor, Json parameters, double measured_error,
                      double tolerance);

struct SuiteSummary {
  std::string suite;
  int total = 0;
  int passed = 0;
  int failed = 0;
  double max_error = 0.0;
};

class VerificationReport {
 public:
  void add(CheckEntry entry);
  void append(const VerificationReport& other);

  const std::vector<CheckEntry>& entries() const { return entries_; }
  bool all_pass() const;
  /// Suites in order of first appearance.
  std::vector<SuiteSummary> summary() const;

  Json to_json() const;

 private:
  std::vector<CheckEntry> entries_;
};

std::string suite_of(const std::string& check_id);

enum class Format { json, table };

/// Throws ConfigError for anything but "json" / "table".
Format parse_format(const std::string& name);

void write_report(const VerificationReport& report, Format format, std::ostream& out);
std::string render_report(const VerificationReport& report, Format format);
/// Writes to `path`; std::runtime_error naming the path on I/O failure.
void emit_report(const VerificationReport& report, Format format, const std::string& path);

}  // namespace crext::report
