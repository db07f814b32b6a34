#include <fstream>
#include <iostream>

#include "qhowe/suites.hpp"

using namespace qhowe;

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : QHOWE_EXPECTATIONS;
  json expectations = json::object();
  if (std::ifstream in(path); in) expectations = json::parse(in);

  int failed = 0;
  for (const auto& c : acceptance_criteria()) {
    VerifyReport r;
    try {
      r = c.run(expectations);
    } catch (const std::exception& e) {
      r.add("exception", false, e.what());
    }
    std::string first_failure;
    for (const auto& k : r.checks)
      if (!k.pass) {
        first_failure = k.name;
        break;
      }
    std::cout << (r.passed() ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << "  (" << r.checks.size()
              << " checks" << (first_failure.empty() ? "" : ", first failure: " + first_failure) << ")\n";
    failed += !r.passed();
  }
  return failed == 0 ? 0 : 1;
}
