#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace qhowe {

using json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool pass = true;
  json witness;  // null when absent
  json value;    // null when absent
};

// Outcome of a check suite.
struct VerifyReport {
  std::string suite;
  json params = json::object();
  std::vector<Check> checks;
  json derived_values = json::object();
  double elapsed_ms = 0;

  Check& add(std::string name, bool pass, json witness = nullptr, json value = nullptr);
  bool passed() const;
  int failures() const;
  // Appends other's checks with a name prefix and merges its derived values.
  void absorb(const VerifyReport& other, const std::string& prefix = "");
  json to_json(bool with_time = true) const;
};

}  // namespace qhowe
