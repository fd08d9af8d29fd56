#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace fuzzyd {

struct Check {
  std::string name;
  double deviation = 0;
  double tolerance = 0;
  bool pass = false;
  std::string notes;
};

struct VerificationReport {
  std::vector<Check> checks;

  // pass is deviation <= tolerance; a NaN deviation fails
  void add(std::string name, double deviation, double tolerance, std::string notes = "");
  void append(const VerificationReport& other, const std::string& prefix = "");
  bool all_pass() const;
  std::size_t failures() const;

  nlohmann::json to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
};

}  // namespace fuzzyd
