#include "qhowe/suites.hpp"

#include <algorithm>
#include <chrono>
#include <tuple>

namespace qhowe {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string key(int n, int m) { return std::to_string(n) + "," + std::to_string(m); }

VerifyReport start(const std::string& suite, json params) {
  VerifyReport r;
  r.suite = suite;
  r.params = std::move(params);
  return r;
}

// Adds a check comparing `got` to expectations[section][k].
void frozen(VerifyReport& r, const json& expectations, const std::string& section, const std::string& k,
            const json& got) {
  const json* want = nullptr;
  if (expectations.contains(section) && expectations[section].contains(k)) want = &expectations[section][k];
  r.add("frozen." + section + "." + k, want && *want == got, want ? json(nullptr) : json("missing expectation"),
        {{"got", got}, {"expected", want ? *want : json(nullptr)}});
}

json sergeev_values(const VerifyReport& r) {
  const auto& d = r.derived_values;
  return {{"queer_image_dim", d["queer_image_dim"]},
          {"hc_image_dim", d["hc_image_dim"]},
          {"commutant_dim", d["commutant_dim"]},
          {"commutant_even_odd", d["commutant_even_odd"]}};
}

json howe_values(const VerifyReport& r) {
  json a = json::array();
  for (const auto& [l, v] : r.derived_values["graded_dimensions"].items()) a.push_back(v["dimension"]);
  return a;
}

json census_values(const IsotypicCensus& c) {
  json a = json::array();
  for (const auto& e : c.entries)
    a.push_back({{"lambda", e.lambda.parts},
                 {"submodule_dim", e.submodule_dim},
                 {"copies", e.copies},
                 {"irreducible_dim", e.irreducible_dim},
                 {"type", e.detected_type}});
  return a;
}

const std::vector<std::pair<int, int>> kSergeevCases = {{1, 1}, {1, 2}, {2, 2}};
// (n, m, top degree)
const std::vector<std::tuple<int, int, int>> kHoweCases = {{1, 1, 2}, {2, 2, 3}};
const std::vector<std::pair<int, int>> kCensusCases = {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"relations", "hc",        "sergeev",   "howe",
                                                 "coord",     "fixture",   "classical", "census"};
  return names;
}

void validate(const RunConfig& cfg) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), cfg.command) == names.end())
    throw InvalidConfig("unknown command: " + cfg.command);
  if (cfg.n < 1 || cfg.m < 1 || cfg.degree < 0) throw InvalidConfig("n, m must be >= 1 and degree >= 0");
  if (cfg.mode == Mode::probabilistic && cfg.trials < 1) throw InvalidConfig("probabilistic mode needs trials >= 1");
  if (cfg.n > cfg.bounds.n || cfg.m > cfg.bounds.m || cfg.degree > cfg.bounds.degree)
    throw UnsupportedScale("parameters exceed n <= " + std::to_string(cfg.bounds.n) + ", m <= " +
                           std::to_string(cfg.bounds.m) + ", degree <= " + std::to_string(cfg.bounds.degree));
}

VerifyReport chevalley_table_check(const AlgebraSpec& spec) {
  VerifyReport r = start("chevalley_table", {{"n", spec.n}, {"param", to_string(spec.param)}});
  const auto derived = chevalley_ops(vector_rep(spec)).named();
  const auto table = chevalley_table(spec).named();
  json bad = json::array();
  int entries = 0;
  for (size_t k = 0; k < derived.size(); ++k) {
    const SOp& a = derived[k].op;
    const SOp& b = table[k].op;
    const int d = a.dom()->dim();
    for (int row = 0; row < d; ++row)
      for (int col = 0; col < d; ++col, ++entries)
        if (a.get(row, col) != b.get(row, col))
          bad.push_back({derived[k].name, a.cod()->label(row).str(), a.dom()->label(col).str(),
                         a.get(row, col).str(), b.get(row, col).str()});
  }
  r.add("derived_equals_table", bad.empty(), bad.empty() ? json(nullptr) : bad,
        {{"operators", derived.size()}, {"entries", entries}});
  r.derived_values["e_scalar"] = "-1/(q - q^-1)";
  return r;
}

VerifyReport relations_suite(const AlgebraSpec& spec, int m, const CheckOptions& opt, OperatorCache& cache) {
  const auto t0 = Clock::now();
  VerifyReport r = start("relations", {{"n", spec.n}, {"m", m}, {"param", to_string(spec.param)},
                                       {"mode", opt.mode == Mode::exact ? "exact" : "prob"}});
  if (opt.mode == Mode::probabilistic) {
    r.params["trials"] = opt.trials;
    r.params["seed"] = opt.seed;
  }
  r.absorb(chevalley_table_check(spec), "table.");
  for (int k = 1; k <= m; ++k)
    r.absorb(check_defining_relations(cache.tensor_rep(spec, k), opt), "power" + std::to_string(k) + ".");
  r.elapsed_ms = ms_since(t0);
  return r;
}

VerifyReport hc_suite(const AlgebraSpec& spec, int m, OperatorCache& cache) {
  const auto t0 = Clock::now();
  VerifyReport r = start("hc", {{"n", spec.n}, {"m", m}, {"param", to_string(spec.param)}});
  r.absorb(hc_check(cache.hc_action(spec, m)), "tensor.");
  if (m == spec.n) {
    const ChevalleyOps ops = chevalley_ops(cache.tensor_rep(spec, m));
    const HCAction zw = zero_weight_hc(ops);
    r.absorb(hc_check(zw), "zero_weight.");
    r.derived_values["zero_weight_dim"] = zw.space->dim();
    r.derived_values["zero_weight_param"] = to_string(zw.param);
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

json component_census(int n, int m, int l) {
  const GradedComponent c = graded_component(n, m, l);
  json mono = json::array();
  for (const auto& x : c.independent) mono.push_back(x.str());
  return {{"n", n}, {"m", m}, {"l", l}, {"dimension", c.dim}, {"independent_monomials", mono}};
}

VerifyReport coord_suite(int n, int m, int degree, const CheckOptions& opt) {
  const auto t0 = Clock::now();
  VerifyReport r = start("coord", {{"n", n}, {"m", m}, {"degree", degree}});
  r.absorb(qca1_check(n), "qca1.");
  r.absorb(qca2_check(n), "qca2.");
  r.absorb(omega_twist_check(n), "omega.");
  r.absorb(delta_circ_check(n, 8, opt.seed, true), "coproduct.");
  if (degree >= 1) r.absorb(coord_actions_check(n, m, degree), "actions.");
  r.absorb(zero_weight_iso(n, m), "zero_weight_iso.");
  r.derived_values["census"] = component_census(n, m, degree);
  r.elapsed_ms = ms_since(t0);
  return r;
}

VerifyReport census_suite(int n, int m, int degree) {
  const auto t0 = Clock::now();
  VerifyReport r = census_verify(n, m);
  r.params["degree"] = degree;
  r.derived_values["component"] = component_census(n, m, degree);
  r.elapsed_ms = ms_since(t0);
  return r;
}

VerifyReport run(const RunConfig& cfg, OperatorCache& cache) {
  validate(cfg);
  const AlgebraSpec spec{cfg.n, cfg.param};
  const auto t0 = Clock::now();
  VerifyReport r;
  const std::string& c = cfg.command;
  if (c == "relations") {
    r = relations_suite(spec, cfg.m, cfg.options(), cache);
  } else if (c == "hc") {
    r = hc_suite(spec, cfg.m, cache);
  } else if (c == "sergeev") {
    r = sergeev_verify(cfg.n, cfg.m, cfg.options());
  } else if (c == "howe") {
    r = howe_verify(cfg.n, cfg.m, cfg.degree);
  } else if (c == "coord") {
    r = coord_suite(cfg.n, cfg.m, cfg.degree, cfg.options());
  } else if (c == "fixture") {
    r = fixture_verify(!cfg.verbatim);
  } else if (c == "classical") {
    r = classical_crosscheck(cfg.n, cfg.m);
  } else {
    r = census_suite(cfg.n, cfg.m, cfg.degree);
  }
  r.elapsed_ms = ms_since(t0);
  return r;
}

json derive_expectations() {
  json e;
  e["_note"] = "machine-derived; regenerate with: qhowe_cli --write-expectations <path>";
  for (auto [n, m] : kSergeevCases) e["sergeev"][key(n, m)] = sergeev_values(sergeev_verify(n, m));
  for (auto [n, m, l] : kHoweCases) e["howe"][key(n, m)] = howe_values(howe_verify(n, m, l));
  for (auto [n, m] : kCensusCases) e["census"][key(n, m)] = census_values(isotypic_census(n, m));
  e["zero_weight_rank"][key(2, 2)] = zero_weight_iso(2, 2).derived_values["rank"];
  return e;
}

const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> list = {
      {1, "relation soundness",
       [](const json&) {
         VerifyReport r = start("relation_soundness", json::object());
         OperatorCache none;
         const std::vector<std::pair<int, int>> cases = {{1, 4}, {2, 3}, {3, 2}};
         auto t0 = Clock::now();
         for (auto [n, m] : cases) r.absorb(relations_suite(AlgebraSpec{n}, m, {}, none), "exact." + key(n, m) + ".");
         const double exact_ms = ms_since(t0);
         t0 = Clock::now();
         for (auto [n, m] : cases)
           r.absorb(relations_suite(AlgebraSpec{n}, m, CheckOptions{Mode::probabilistic, 5, 1}, none),
                    "prob." + key(n, m) + ".");
         const double prob_ms = ms_since(t0);
         r.add("exact_within_2min", exact_ms <= 120000, nullptr, {{"ms", static_cast<long>(exact_ms)}});
         r.add("prob_within_10s", prob_ms <= 10000, nullptr, {{"ms", static_cast<long>(prob_ms)}});
         return r;
       }},
      {2, "Chevalley table fidelity",
       [](const json&) {
         VerifyReport r = start("chevalley_table", json::object());
         for (int n = 1; n <= 3; ++n)
           for (Param p : {Param::q, Param::qinv})
             r.absorb(chevalley_table_check(AlgebraSpec{n, p}), "n" + std::to_string(n) + "." + to_string(p) + ".");
         return r;
       }},
      {3, "HC presentation",
       [](const json&) {
         VerifyReport r = start("hc_presentation", json::object());
         for (int n = 1; n <= 2; ++n)
           for (int m = 1; m <= 4; ++m) r.absorb(hc_check(hc_tensor_action(AlgebraSpec{n}, m)), key(n, m) + ".");
         return r;
       }},
      {4, "supercommutation",
       [](const json&) {
         VerifyReport r = start("supercommutation", json::object());
         for (int n = 1; n <= 2; ++n)
           for (int m = 1; m <= 3; ++m) r.absorb(supercommutation_check(n, m), key(n, m) + ".");
         return r;
       }},
      {5, "mutual centralizer",
       [](const json& ex) {
         VerifyReport r = start("mutual_centralizer", json::object());
         for (auto [n, m] : kSergeevCases) {
           const VerifyReport s = sergeev_verify(n, m);
           for (const auto& c : s.checks)
             if (c.name.rfind("census.", 0) != 0) r.checks.push_back(Check{key(n, m) + "." + c.name, c.pass, c.witness, c.value});
           frozen(r, ex, "sergeev", key(n, m), sergeev_values(s));
         }
         return r;
       }},
      {6, "census",
       [](const json& ex) {
         VerifyReport r = start("census", json::object());
         for (auto [n, m] : kCensusCases) {
           r.absorb(census_verify(n, m), key(n, m) + ".");
           frozen(r, ex, "census", key(n, m), census_values(isotypic_census(n, m)));
         }
         return r;
       }},
      {7, "fixture",
       [](const json&) { return fixture_verify(true); }},
      {8, "zero-weight HC structure",
       [](const json&) {
         VerifyReport r = start("zero_weight_hc", json::object());
         const ChevalleyOps fx = fixture_module(true);
         const HCAction a = zero_weight_hc(fx);
         r.absorb(hc_check_with(a, RatFunc::q().inv()), "fixture.");
         const HCAction b = zero_weight_hc(chevalley_ops(tensor_rep(vector_rep(AlgebraSpec{2}), 2)));
         r.absorb(hc_check_with(b, RatFunc::q().inv()), "tensor_square.");
         r.add("parameter_is_qinv", a.param == Param::qinv && b.param == Param::qinv);
         return r;
       }},
      {9, "coordinate relations",
       [](const json&) {
         VerifyReport r = start("coordinate_relations", json::object());
         r.absorb(qca1_check(2), "qca1.");
         r.absorb(qca2_check(2), "qca2.");
         return r;
       }},
      {10, "zero-weight isomorphism",
       [](const json& ex) {
         VerifyReport r = zero_weight_iso(2, 2);
         frozen(r, ex, "zero_weight_rank", key(2, 2), r.derived_values["rank"]);
         return r;
       }},
      {11, "Howe census",
       [](const json& ex) {
         VerifyReport r = start("howe", json::object());
         for (auto [n, m, l] : kHoweCases) {
           const VerifyReport h = howe_verify(n, m, l);
           r.absorb(h, key(n, m) + ".");
           frozen(r, ex, "howe", key(n, m), howe_values(h));
         }
         return r;
       }},
      {12, "classical limit",
       [](const json&) {
         VerifyReport r = start("classical", json::object());
         for (int n = 1; n <= 2; ++n)
           for (int m = 1; m <= 3; ++m) r.absorb(classical_crosscheck(n, m), key(n, m) + ".");
         return r;
       }},
  };
  return list;
}

}  // namespace qhowe
