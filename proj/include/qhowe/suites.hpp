#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qhowe/cache.hpp"
#include "qhowe/duality.hpp"

namespace qhowe {

struct UnsupportedScale : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InvalidConfig : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Bounds {
  int n = 4, m = 5, degree = 4;
};

struct RunConfig {
  std::string command;  // relations | hc | sergeev | howe | coord | fixture | classical | census
  int n = 1, m = 1, degree = 1;
  Param param = Param::q;
  Mode mode = Mode::exact;
  int trials = 5;
  std::uint64_t seed = 1;
  std::string report;
  std::string cache;
  bool verbatim = false;  // fixture: the table as printed
  Bounds bounds;

  CheckOptions options() const { return CheckOptions{mode, trials, seed}; }
};

const std::vector<std::string>& suite_names();
void validate(const RunConfig& cfg);

// Derived Chevalley operators on V against the transcribed table, entry by entry.
VerifyReport chevalley_table_check(const AlgebraSpec& spec);
// Defining relations on V^{⊗k} for k = 1..m, plus the table check.
VerifyReport relations_suite(const AlgebraSpec& spec, int m, const CheckOptions& opt, OperatorCache& cache);
// HC relations on V^{⊗m}; with m = n also the braid action on the zero weight block.
VerifyReport hc_suite(const AlgebraSpec& spec, int m, OperatorCache& cache);
VerifyReport coord_suite(int n, int m, int degree, const CheckOptions& opt);
VerifyReport census_suite(int n, int m, int degree);
// {n, m, l, dimension, independent_monomials}
json component_census(int n, int m, int l);

VerifyReport run(const RunConfig& cfg, OperatorCache& cache);

struct Criterion {
  int id;
  std::string title;
  std::function<VerifyReport(const json& expectations)> run;
};
// The desk-scale battery; each entry is one acceptance criterion.
const std::vector<Criterion>& acceptance_criteria();
// Machine-derived regression values checked by the battery.
json derive_expectations();

}  // namespace qhowe
