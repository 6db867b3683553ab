#include "crext/report.hpp"

#include "crext/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace crext::report {

namespace {

std::string format_error(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

// Fixed-width table cell; long text is not truncated, it just pushes the row.
std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

CheckEntry make_entry(std::string check_id, std::string anchor, Json parameters, double measured_error,
                      double tolerance) {
  CheckEntry e;
  e.check_id = std::move(check_id);
  e.paper_anchor = std::move(anchor);
  e.parameters = std::move(parameters);
  e.measured_error = measured_error;
  e.tolerance = tolerance;
  e.pass = measured_error <= tolerance;
  return e;
}

std::string suite_of(const std::string& check_id) { return check_id.substr(0, check_id.find('.')); }

void VerificationReport::add(CheckEntry entry) { entries_.push_back(std::move(entry)); }

void VerificationReport::append(const VerificationReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool VerificationReport::all_pass() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const CheckEntry& e) { return e.pass; });
}

std::vector<SuiteSummary> VerificationReport::summary() const {
  std::vector<SuiteSummary> out;
  std::map<std::string, std::size_t> index;
  for (const CheckEntry& e : entries_) {
    std::string suite = suite_of(e.check_id);
    auto [it, fresh] = index.try_emplace(suite, out.size());
    if (fresh) out.push_back(SuiteSummary{suite});
    SuiteSummary& s = out[it->second];
    ++s.total;
    if (e.pass) {
      ++s.passed;
    } else {
      ++s.failed;
    }
    if (!(e.measured_error <= s.max_error)) s.max_error = e.measured_error;
  }
  return out;
}

Json VerificationReport::to_json() const {
  Json entries = Json::array();
  for (const CheckEntry& e : entries_) {
    Json j;
    j["check_id"] = e.check_id;
    j["paper_anchor"] = e.paper_anchor;
    j["parameters"] = e.parameters;
    j["measured_error"] = e.measured_error;
    j["tolerance"] = e.tolerance;
    j["pass"] = e.pass;
    entries.push_back(std::move(j));
  }
  int total = 0;
  int passed = 0;
  double max_error = 0.0;
  Json suites = Json::object();
  for (const SuiteSummary& s : summary()) {
    total += s.total;
    passed += s.passed;
    if (!(s.max_error <= max_error)) max_error = s.max_error;
    suites[s.suite] = Json{{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}, {"max_error", s.max_error}};
  }
  Json out;
  out["entries"] = std::move(entries);
  out["summary"] = Json{{"total", total},
                        {"passed", passed},
                        {"failed", total - passed},
                        {"max_error", max_error},
                        {"all_pass", all_pass()},
                        {"suites", std::move(suites)}};
  return out;
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "table") return Format::table;
  throw ConfigError("unknown format '" + name + "' (expected json or table)");
}

void write_report(const VerificationReport& report, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << report.to_json().dump(2) << '\n';
    return;
  }
  std::size_t id_width = 8;
  std::size_t param_width = 10;
  std::vector<std::string> params;
  for (const CheckEntry& e : report.entries()) {
    id_width = std::max(id_width, e.check_id.size());
    params.push_back(e.parameters.dump());
    param_width = std::max(param_width, params.back().size());
  }
  out << pad("check_id", id_width) << "  pass  " << pad("error", 10) << "  " << pad("tolerance", 10) << "  "
      << pad("parameters", param_width) << "  anchor\n";
  for (std::size_t i = 0; i < report.entries().size(); ++i) {
    const CheckEntry& e = report.entries()[i];
    out << pad(e.check_id, id_width) << "  " << (e.pass ? "ok  " : "FAIL") << "  "
        << pad(format_error(e.measured_error), 10) << "  " << pad(format_error(e.tolerance), 10) << "  "
        << pad(params[i], param_width) << "  " << e.paper_anchor << '\n';
  }
  out << '\n';
  for (const SuiteSummary& s : report.summary()) {
    out << pad(s.suite, id_width) << "  " << s.passed << "/" << s.total << " passed, max error "
        << format_error(s.max_error) << '\n';
  }
  out << (report.all_pass() ? "ALL PASS" : "FAILURES PRESENT") << '\n';
}

std::string render_report(const VerificationReport& report, Format format) {
  std::ostringstream os;
  write_report(report, format, os);
  return os.str();
}

void emit_report(const VerificationReport& report, Format format, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open report output '" + path + "'");
  write_report(report, format, file);
  file.flush();
  if (!file) throw std::runtime_error("write failed for report output '" + path + "'");
}

}  // namespace crext::report
