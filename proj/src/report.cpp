#include "fuzzyd/report.hpp"

#include <cstdio>
#include <sstream>

namespace fuzzyd {

void VerificationReport::add(std::string name, double deviation, double tolerance, std::string notes) {
  Check c;
  c.name = std::move(name);
  c.deviation = deviation;
  c.tolerance = tolerance;
  c.pass = deviation <= tolerance;
  c.notes = std::move(notes);
  checks.push_back(std::move(c));
}

void VerificationReport::append(const VerificationReport& other, const std::string& prefix) {
  for (auto c : other.checks) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
}

bool VerificationReport::all_pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 0 : 1;
  return n;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& c : checks)
    j.push_back({{"name", c.name}, {"deviation", c.deviation}, {"tolerance", c.tolerance}, {"pass", c.pass}, {"notes", c.notes}});
  return {{"checks", j}, {"pass", all_pass()}};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

}  // namespace

std::string VerificationReport::to_csv() const {
  std::ostringstream os;
  os << "name,deviation,tolerance,pass,notes\n";
  char buf[64];
  for (const auto& c : checks) {
    os << csv_field(c.name) << ',';
    std::snprintf(buf, sizeof buf, "%.6e,%.1e", c.deviation, c.tolerance);
    os << buf << ',' << (c.pass ? "true" : "false") << ',' << csv_field(c.notes) << '\n';
  }
  return os.str();
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  char buf[256];
  for (const auto& c : checks) {
    std::snprintf(buf, sizeof buf, "[%s] %-48s dev=%.3e tol=%.1e", c.pass ? "PASS" : "FAIL", c.name.c_str(), c.deviation, c.tolerance);
    os << buf;
    if (!c.notes.empty()) os << "  (" << c.notes << ')';
    os << '\n';
  }
  os << (all_pass() ? "all checks passed" : std::to_string(failures()) + " check(s) failed") << '\n';
  return os.str();
}

}  // namespace fuzzyd
