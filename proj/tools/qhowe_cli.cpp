#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qhowe/suites.hpp"

using namespace qhowe;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) return json::object();
  return json::parse(in);
}

void emit(const json& report, const std::string& path) {
  const std::string text = report.dump(2);
  std::cout << text << "\n";
  if (!path.empty()) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text << "\n";
  }
}

VerifyReport run_all(const json& expectations) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport all;
  all.suite = "all";
  for (const auto& c : acceptance_criteria()) {
    const VerifyReport r = c.run(expectations);
    all.absorb(r, "c" + std::to_string(c.id) + ".");
    std::cerr << (r.passed() ? "PASS" : "FAIL") << "  " << c.id << "  " << c.title << "\n";
  }
  all.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for the quantum queer superalgebra and its dualities"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  RunConfig cfg;
  std::string param = "q", mode = "exact", expectations_in = QHOWE_EXPECTATIONS, expectations_out;
  bool all = false;
  app.add_option("--n", cfg.n, "rank of the queer algebra");
  app.add_option("--m", cfg.m, "tensor power or second rank");
  app.add_option("--degree", cfg.degree, "degree bound");
  app.add_option("--param", param, "q or qinv")->check(CLI::IsMember({"q", "qinv"}));
  app.add_option("--mode", mode, "exact or prob")->check(CLI::IsMember({"exact", "prob"}));
  app.add_option("--trials", cfg.trials, "sample points in prob mode");
  app.add_option("--seed", cfg.seed, "seed in prob mode");
  app.add_option("--report", cfg.report, "write the JSON report here");
  app.add_option("--cache", cfg.cache, "operator cache directory");
  app.add_flag("--all", all, "run the full acceptance battery");
  app.add_option("--expectations", expectations_in, "frozen values read by --all");
  app.add_option("--write-expectations", expectations_out, "derive the frozen values and write them here");

  const char* help[] = {"defining relations on tensor powers of V", "Hecke-Clifford relations",
                        "mutual centralizers on V^m",               "graded dimensions of the coordinate algebra",
                        "coordinate algebra relations and actions", "the 8-dimensional rank-2 module",
                        "specialization at q = 1",                  "isotypic census of V^m"};
  for (size_t k = 0; k < suite_names().size(); ++k) {
    auto* sub = app.add_subcommand(suite_names()[k], help[k]);
    sub->final_callback([&cfg, name = suite_names()[k]] { cfg.command = name; });
    if (suite_names()[k] == "fixture") sub->add_flag("--verbatim", cfg.verbatim, "use the table as printed");
  }

  CLI11_PARSE(app, argc, argv);
  cfg.param = param == "q" ? Param::q : Param::qinv;
  cfg.mode = mode == "exact" ? Mode::exact : Mode::probabilistic;

  try {
    if (!expectations_out.empty()) {
      std::ofstream out(expectations_out);
      out << derive_expectations().dump(2) << "\n";
      return out ? 0 : 1;
    }
    if (all) {
      const VerifyReport r = run_all(load_json(expectations_in));
      emit(r.to_json(), cfg.report);
      return r.passed() ? 0 : 1;
    }
    if (cfg.command.empty()) {
      std::cerr << app.help();
      return 2;
    }
    OperatorCache cache = cfg.cache.empty() ? OperatorCache() : OperatorCache(cfg.cache);
    const VerifyReport r = run(cfg, cache);
    emit(r.to_json(), cfg.report);
    return r.passed() ? 0 : 1;
  } catch (const UnsupportedScale& e) {
    std::cerr << "unsupported scale: " << e.what() << "\n";
    return 3;
  } catch (const InvalidConfig& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return 2;
  }
}
