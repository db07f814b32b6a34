#include "qhowe/report.hpp"

namespace qhowe {

Check& VerifyReport::add(std::string name, bool pass, json witness, json value) {
  checks.push_back(Check{std::move(name), pass, std::move(witness), std::move(value)});
  return checks.back();
}

bool VerifyReport::passed() const { return failures() == 0; }

int VerifyReport::failures() const {
  int f = 0;
  for (const auto& c : checks) f += !c.pass;
  return f;
}

void VerifyReport::absorb(const VerifyReport& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back(Check{prefix + c.name, c.pass, c.witness, c.value});
  for (const auto& [k, v] : other.derived_values.items()) derived_values[prefix + k] = v;
}

json VerifyReport::to_json(bool with_time) const {
  json j;
  j["suite"] = suite;
  j["params"] = params;
  json cs = json::array();
  for (const auto& c : checks) {
    json e;
    e["name"] = c.name;
    e["status"] = c.pass ? "pass" : "fail";
    if (!c.witness.is_null()) e["witness"] = c.witness;
    if (!c.value.is_null()) e["value"] = c.value;
    cs.push_back(std::move(e));
  }
  j["checks"] = std::move(cs);
  j["derived_values"] = derived_values;
  if (with_time) j["elapsed_ms"] = elapsed_ms;
  return j;
}

}  // namespace qhowe
