#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "qhowe/suites.hpp"

using namespace qhowe;

namespace {

RunConfig config(const std::string& command, int n = 1, int m = 1, int degree = 1) {
  RunConfig c;
  c.command = command;
  c.n = n;
  c.m = m;
  c.degree = degree;
  return c;
}

VerifyReport run_plain(const RunConfig& c) {
  OperatorCache none;
  return run(c, none);
}

}  // namespace

TEST(Config, Bounds) {
  EXPECT_THROW(validate(config("sergeev", 5, 1)), UnsupportedScale);
  EXPECT_THROW(validate(config("sergeev", 1, 6)), UnsupportedScale);
  EXPECT_THROW(validate(config("howe", 1, 1, 5)), UnsupportedScale);
  EXPECT_NO_THROW(validate(config("howe", 4, 5, 4)));
}

TEST(Config, Invalid) {
  EXPECT_THROW(validate(config("nonsense")), InvalidConfig);
  EXPECT_THROW(validate(config("hc", 0, 1)), InvalidConfig);
  auto c = config("relations");
  c.mode = Mode::probabilistic;
  c.trials = 0;
  EXPECT_THROW(validate(c), InvalidConfig);
  c.mode = Mode::exact;
  EXPECT_NO_THROW(validate(c));
}

TEST(Run, SergeevRankTwo) {
  auto r = run_plain(config("sergeev", 2, 2));
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.derived_values.empty());
}

TEST(Run, FixtureAndVerbatim) {
  EXPECT_TRUE(run_plain(config("fixture")).passed());
  auto c = config("fixture");
  c.verbatim = true;
  EXPECT_FALSE(run_plain(c).passed());
}

TEST(Run, HoweDegreeOne) {
  auto r = run_plain(config("howe", 1, 1, 1));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.derived_values["graded_dimensions"]["1"]["dimension"], 2);
}

TEST(Run, CoordEmitsComponentCensus) {
  auto r = run_plain(config("coord", 1, 1, 2));
  EXPECT_TRUE(r.passed()) << r.to_json().dump();
  const json& c = r.derived_values["census"];
  EXPECT_EQ(c["l"], 2);
  EXPECT_EQ(c["dimension"], 2);
  EXPECT_EQ(c["independent_monomials"], json::parse(R"(["t[-1,1]t[1,1]","t[1,1]t[1,1]"])"));
}

TEST(Run, EverySuiteSmallest) {
  for (const auto& name : suite_names()) {
    auto r = run_plain(config(name, 1, 2, 1));
    EXPECT_TRUE(r.passed()) << name << " " << r.to_json().dump();
  }
}

TEST(Run, QinvParameter) {
  auto c = config("relations", 2, 2);
  c.param = Param::qinv;
  EXPECT_TRUE(run_plain(c).passed());
  c.command = "hc";
  auto r = run_plain(c);
  EXPECT_TRUE(r.passed()) << r.to_json().dump();
  EXPECT_EQ(r.derived_values["zero_weight_param"], "q");
}

TEST(Run, DeterministicApartFromTime) {
  for (const auto& name : suite_names()) {
    auto c = config(name, 2, 2, 1);
    c.mode = Mode::probabilistic;
    c.trials = 2;
    c.seed = 9;
    EXPECT_EQ(run_plain(c).to_json(false).dump(), run_plain(c).to_json(false).dump()) << name;
  }
}

TEST(Run, CacheNeverChangesOutcome) {
  const auto dir = std::filesystem::temp_directory_path() / ("qhowe_cli_cache_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  for (const std::string name : {"relations", "hc"}) {
    auto c = config(name, 2, 2);
    const std::string plain = run_plain(c).to_json(false).dump();
    OperatorCache cold(dir);
    EXPECT_EQ(run(c, cold).to_json(false).dump(), plain);
    EXPECT_GT(cold.misses(), 0);
    OperatorCache warm(dir);
    EXPECT_EQ(run(c, warm).to_json(false).dump(), plain);
    EXPECT_GT(warm.hits(), 0);
    EXPECT_EQ(warm.misses(), 0);
    std::filesystem::remove_all(dir);
    OperatorCache again(dir);
    EXPECT_EQ(run(c, again).to_json(false).dump(), plain);
  }
  std::filesystem::remove_all(dir);
}

TEST(Expectations, FileMatchesFreshDerivation) {
  std::ifstream in(QHOWE_EXPECTATIONS);
  ASSERT_TRUE(in) << QHOWE_EXPECTATIONS;
  EXPECT_EQ(json::parse(in), derive_expectations());
}
