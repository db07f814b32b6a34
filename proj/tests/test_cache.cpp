#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>

#include "qhowe/cache.hpp"

using namespace qhowe;

namespace {

std::filesystem::path fresh_dir(const std::string& tag) {
  auto d = std::filesystem::temp_directory_path() / ("qhowe_cache_" + tag + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(d);
  return d;
}

}  // namespace

TEST(Serialization, LabelRoundTrip) {
  for (const Label& l : {Label{"", {1, -2}}, Label{"u0", {}}, Label{"x", {-3}}}) EXPECT_EQ(parse_label(l.str()), l);
}

TEST(Serialization, OperatorRoundTripIsExact) {
  auto rep = tensor_rep(vector_rep(AlgebraSpec{2}), 2);
  for (const auto& [ij, op] : rep.gens) {
    const json j = op_to_json(op);
    const SOp back = op_from_json(j);
    EXPECT_EQ(back.parity(), op.parity());
    EXPECT_EQ(op_to_json(back).dump(), j.dump());
    EXPECT_EQ(op_from_json(j, op.dom(), op.cod()), op);
  }
}

TEST(Serialization, EntriesSorted) {
  auto rep = vector_rep(AlgebraSpec{2});
  const json j = op_to_json(rep.L(-1, 2));
  std::vector<std::pair<std::string, std::string>> keys;
  for (const auto& e : j["entries"]) keys.emplace_back(e[0], e[1]);
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_FALSE(keys.empty());
}

TEST(Cache, RepStoredThenRead) {
  const auto dir = fresh_dir("rep");
  const AlgebraSpec spec{2, Param::qinv};
  OperatorCache c(dir);
  const QueerRep a = c.tensor_rep(spec, 2);
  EXPECT_EQ(c.misses(), 1);
  EXPECT_TRUE(std::filesystem::exists(c.rep_path(spec, 2)));
  const QueerRep b = c.tensor_rep(spec, 2);
  EXPECT_EQ(c.hits(), 1);
  ASSERT_EQ(a.gens.size(), b.gens.size());
  for (const auto& [ij, op] : a.gens) EXPECT_EQ(b.L(ij.first, ij.second), op);
  EXPECT_EQ(a.odd_unit_sq, b.odd_unit_sq);
  EXPECT_TRUE(check_defining_relations(b).passed());
  std::filesystem::remove_all(dir);
}

TEST(Cache, HcStoredThenRead) {
  const auto dir = fresh_dir("hc");
  const AlgebraSpec spec{1};
  OperatorCache c(dir);
  const HCAction a = c.hc_action(spec, 3);
  const HCAction b = c.hc_action(spec, 3);
  EXPECT_EQ(c.hits(), 1);
  ASSERT_EQ(a.T.size(), b.T.size());
  for (size_t k = 0; k < a.T.size(); ++k) EXPECT_EQ(a.T[k], b.T[k]);
  for (size_t k = 0; k < a.C.size(); ++k) EXPECT_EQ(a.C[k], b.C[k]);
  EXPECT_TRUE(hc_check(b).passed());
  std::filesystem::remove_all(dir);
}

TEST(Cache, DisabledOrSampledBaseBypasses) {
  OperatorCache off;
  EXPECT_FALSE(off.enabled());
  off.tensor_rep(AlgebraSpec{1}, 2);
  EXPECT_EQ(off.misses(), 0);
  const auto dir = fresh_dir("sampled");
  OperatorCache c(dir);
  c.tensor_rep(AlgebraSpec{1, Param::q, RatFunc(3)}, 2);
  EXPECT_FALSE(std::filesystem::exists(dir));
}

TEST(Cache, CorruptFileIsRecomputed) {
  const auto dir = fresh_dir("corrupt");
  OperatorCache c(dir);
  const AlgebraSpec spec{1};
  c.tensor_rep(spec, 2);
  std::ofstream(c.rep_path(spec, 2)) << "{not json";
  const QueerRep r = c.tensor_rep(spec, 2);
  EXPECT_EQ(c.misses(), 2);
  EXPECT_TRUE(check_defining_relations(r).passed());
  std::filesystem::remove_all(dir);
}
