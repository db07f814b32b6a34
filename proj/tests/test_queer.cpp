#include <gtest/gtest.h>

#include "qhowe/queer.hpp"

using namespace qhowe;

namespace {

RatFunc q() { return RatFunc::q(); }
AlgebraSpec spec(int n, Param p = Param::q) { return AlgebraSpec{n, p, RatFunc::q()}; }

int at(const SpacePtr& s, std::vector<int> w) { return s->index_of_word(w); }

}  // namespace

TEST(SMatrix, Entries) {
  SOp s1 = s_matrix(spec(1));
  auto vv = s1.dom();
  EXPECT_EQ(s1.get(at(vv, {1, 1}), at(vv, {1, 1})), q());
  EXPECT_EQ(s1.col(at(vv, {-1, -1})), SVec::unit(at(vv, {-1, -1}), q().inv()));
  SOp s2 = s_matrix(spec(2));
  auto w = s2.dom();
  // ξ (E_21 + E_{-2,-1}) ⊗ E_12 applied to v1 ⊗ v2
  EXPECT_EQ(s2.get(at(w, {2, 1}), at(w, {1, 2})), q() - q().inv());
  EXPECT_EQ(s2.get(at(w, {-2, 1}), at(w, {-1, 2})), q() - q().inv());
  EXPECT_EQ(s_matrix(spec(1, Param::qinv)).get(at(vv, {1, 1}), at(vv, {1, 1})), q().inv());
}

TEST(VectorRep, TableEntries) {
  auto ops = chevalley_ops(vector_rep(spec(2)));
  auto v = ops.space;
  EXPECT_EQ(ops.k[0].apply(SVec::unit(at(v, {2}))), SVec::unit(at(v, {2})));
  EXPECT_EQ(ops.kbar[0].apply(SVec::unit(at(v, {1}))), SVec::unit(at(v, {-1})));
  EXPECT_EQ(ops.ebar[0].apply(SVec::unit(at(v, {2}))), SVec::unit(at(v, {-1})));
  EXPECT_EQ(ops.f[0].apply(SVec::unit(at(v, {1}))), SVec::unit(at(v, {2})));
  EXPECT_TRUE(ops.e[0].apply(SVec::unit(at(v, {1}))).empty());
  EXPECT_EQ(ops.kbar[0], SOp::unit(v, at(v, {1}), at(v, {-1})) + SOp::unit(v, at(v, {-1}), at(v, {1})));
}

TEST(VectorRep, MatchesTableUpToRankThree) {
  for (int n = 1; n <= 3; ++n)
    for (Param p : {Param::q, Param::qinv}) {
      auto derived = chevalley_ops(vector_rep(spec(n, p))).named();
      auto table = chevalley_table(spec(n, p)).named();
      ASSERT_EQ(derived.size(), table.size());
      for (size_t t = 0; t < derived.size(); ++t) EXPECT_EQ(derived[t].op, table[t].op) << n << " " << table[t].name;
    }
}

TEST(VectorRep, PrintedEScalarDoesNotReproduceTable) {
  // e_1 with the printed scalar -ξ instead of -ξ^{-1}
  auto rep = vector_rep(spec(2));
  RatFunc xi = q() - q().inv();
  SOp printed = -xi * (rep.L(2, 2) * rep.L(-2, -1));
  EXPECT_NE(printed, chevalley_table(spec(2)).e[0]);
}

TEST(TensorRep, KbarCoproduct) {
  auto v = vector_rep(spec(1));
  auto vv = tensor_rep(v, 2);
  auto c1 = chevalley_ops(v);
  auto c2 = chevalley_ops(vv);
  SOp expected = graded_tensor(c1.kinv[0], c1.kbar[0], vv.space, vv.space) +
                 graded_tensor(c1.kbar[0], c1.k[0], vv.space, vv.space);
  EXPECT_EQ(c2.kbar[0], expected);
  EXPECT_EQ(c2.k[0], q().pow(2) * SOp::identity(vv.space));
  EXPECT_EQ(tensor_rep(v, 1).gens, v.gens);
}

TEST(TensorRep, Coassociative) {
  auto v = vector_rep(spec(2));
  auto left = tensor_product(tensor_product(v, v), v);
  auto right = tensor_product(v, tensor_product(v, v));
  for (const auto& [key, op] : left.gens) EXPECT_EQ(op.flatten(), right.L(key.first, key.second).flatten());
}

TEST(Relations, VectorAndTensorPowers) {
  for (auto [n, m] : {std::pair{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}) {
    auto rep = tensor_rep(vector_rep(spec(n)), m);
    auto r = check_defining_relations(rep);
    EXPECT_TRUE(r.passed()) << n << "," << m << " " << r.to_json().dump();
  }
  auto r = check_defining_relations(tensor_rep(vector_rep(spec(2, Param::qinv)), 2));
  EXPECT_TRUE(r.passed());
}

TEST(Relations, ProbabilisticMode) {
  auto rep = tensor_rep(vector_rep(spec(2)), 2);
  CheckOptions opt{Mode::probabilistic, 3, 42};
  auto r = check_defining_relations(rep, opt);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checks.size(), 6u);
}

TEST(Relations, PlantedDefectIsCaught) {
  auto rep = vector_rep(spec(1));
  rep.gens.at({1, 1}) = q() * rep.L(1, 1);
  auto r = check_defining_relations(rep);
  EXPECT_FALSE(r.passed());
  ASSERT_FALSE(r.checks[0].pass);
  // the witness is a basis vector on which L_11 L_{-1,-1} is not the identity
  const std::string w = r.checks[0].witness[0]["witness"];
  const int c = w == "(1)" ? 1 : 0;
  EXPECT_EQ(rep.space->label(c).str(), w);
  EXPECT_NE((rep.L(1, 1) * rep.L(-1, -1)).col(c), SVec::unit(c));
}

TEST(Relations, ComultiplicationSignCollapses) {
  // the signed coproduct Σ (-1)^{(|i|+|k|)(|k|+|j|)} L_ik ⊗ L_kj agrees with the unsigned one on V⊗V
  auto v = vector_rep(spec(2));
  auto vv = tensor_rep(v, 2);
  for (auto [i, j] : generator_indices(2)) {
    SOp sum(vv.space, vv.space, gpar(i, j));
    for (int k : index_set(2))
      if (i <= k && k <= j)
        sum = sum + RatFunc(sgn((par(i) + par(k)) * (par(k) + par(j)))) *
                        graded_tensor(v.L(i, k), v.L(k, j), vv.space, vv.space);
    EXPECT_EQ(sum, vv.L(i, j)) << i << "," << j;
  }
}

TEST(Antipode, DiagonalAndInverse) {
  auto rep = vector_rep(spec(2));
  auto s = antipode(rep);
  auto ops = chevalley_ops(rep);
  EXPECT_EQ(s.at({1, 1}), ops.kinv[0]);
  const SOp id = SOp::identity(rep.space);
  for (int i : index_set(2))
    for (int j : index_set(2)) {
      if (i > j) continue;
      SOp sum(rep.space, rep.space, gpar(i, j));
      SOp sum2 = sum;
      for (int k : index_set(2))
        if (i <= k && k <= j) {
          sum = sum + s.at({i, k}) * rep.L(k, j);
          sum2 = sum2 + rep.L(i, k) * s.at({k, j});
        }
      EXPECT_EQ(sum, i == j ? id : SOp::zero(rep.space, rep.space));
      EXPECT_EQ(sum2, i == j ? id : SOp::zero(rep.space, rep.space));
    }
}

TEST(Antipode, SingularDiagonalRejected) {
  auto rep = vector_rep(spec(1));
  rep.gens.at({1, 1}) = SOp::zero(rep.space, rep.space);
  EXPECT_THROW(antipode(rep), NonInvertibleDiagonal);
}

TEST(DualRep, RelationsAndWeights) {
  for (int n = 1; n <= 2; ++n) {
    auto d = dual_rep(vector_rep(spec(n)));
    EXPECT_TRUE(check_defining_relations(d).passed()) << n;
  }
  auto d = dual_rep(vector_rep(spec(2)));
  const int f1 = d.space->index(Label{"*", {1}});
  EXPECT_EQ(d.L(1, 1).get(f1, f1), q().inv());
  EXPECT_TRUE(check_defining_relations(dual_rep(tensor_rep(vector_rep(spec(1)), 2))).passed());
}

TEST(DualRep, DoubleDualIsomorphicToV) {
  auto v = vector_rep(spec(2));
  auto dd = dual_rep(dual_rep(v));
  std::vector<SOp> a, b;
  for (const auto& [key, op] : v.gens) {
    a.push_back(op);
    b.push_back(dd.L(key.first, key.second));
  }
  auto hom = intertwiners(a, b, 0);
  ASSERT_FALSE(hom.empty());
  bool invertible = false;
  for (const auto& x : hom) {
    std::vector<SVec> cols;
    for (int c = 0; c < x.dom()->dim(); ++c) cols.push_back(x.col(c));
    invertible |= span_dim(cols).dim == x.dom()->dim();
  }
  EXPECT_TRUE(invertible);
}

TEST(SigmaTwist, IsRepOfOppositeParameter) {
  for (int n = 1; n <= 2; ++n)
    for (int m = 1; m <= 2; ++m) {
      auto t = sigma_twist(tensor_rep(vector_rep(spec(n)), m));
      EXPECT_EQ(t.spec.param, Param::qinv);
      EXPECT_TRUE(check_defining_relations(t).passed()) << n << "," << m;
    }
}

TEST(SigmaTwist, GeneratorImages) {
  auto rep = vector_rep(spec(2));
  auto t = sigma_twist(rep);
  // σ(L_11) = L_{-1,-1}; S^{-1}(L_{-1,-1}) = L_11
  EXPECT_EQ(t.L(1, 1), rep.L(1, 1));
  // σ(L_12) = L_{-2,-1}
  auto sinv = antipode_inv(rep);
  EXPECT_EQ(t.L(1, 2), sinv.at({-2, -1}));
}

TEST(SigmaTwist, TwiceIsIsomorphic) {
  for (int n = 1; n <= 2; ++n) {
    auto v = vector_rep(spec(n));
    auto tt = sigma_twist(sigma_twist(v));
    EXPECT_EQ(tt.spec.param, Param::q);
    std::vector<SOp> a, b;
    for (const auto& [key, op] : v.gens) {
      a.push_back(op);
      b.push_back(tt.L(key.first, key.second));
    }
    EXPECT_FALSE(intertwiners(a, b, 0).empty()) << n;
  }
}

TEST(Weights, Spaces) {
  auto ops = chevalley_ops(vector_rep(spec(2)));
  auto ws = weight_spaces(ops);
  std::vector<int> expect{at(ops.space, {-1}), at(ops.space, {1})};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(ws.at({1, 0}), expect);
  auto ops2 = chevalley_ops(tensor_rep(vector_rep(spec(2)), 2));
  auto ws2 = weight_spaces(ops2);
  EXPECT_EQ(ws2.at({1, 1}).size(), 8u);
  EXPECT_EQ(ws2.at({2, 0}).size(), 4u);
}

TEST(Weights, StrictPredicate) {
  EXPECT_TRUE(is_strict_dominant({2, 0}));
  EXPECT_TRUE(is_strict_dominant({2, 1}));
  EXPECT_FALSE(is_strict_dominant({1, 1}));
  EXPECT_TRUE(is_strict_dominant({0, 0}));
  EXPECT_FALSE(is_strict_dominant({0, 1}));
}

TEST(Weights, RaisingShiftsWeight) {
  auto ops = chevalley_ops(tensor_rep(vector_rep(spec(2)), 2));
  auto ws = weight_spaces(ops);
  std::map<int, Weight> of;
  for (const auto& [w, b] : ws)
    for (int x : b) of[x] = w;
  for (const auto& x : ops.raising())
    for (int c = 0; c < ops.space->dim(); ++c)
      for (const auto& [r, v] : x.col(c).entries()) {
        Weight expect = of[c];
        expect[0] += 1;
        expect[1] -= 1;
        EXPECT_EQ(of[r], expect);
      }
}

TEST(HighestWeight, Examples) {
  auto ops = chevalley_ops(tensor_rep(vector_rep(spec(2)), 2));
  auto hw = highest_weight_vectors(ops, {2, 0});
  Echelon e;
  for (const auto& v : hw) e.insert(v);
  EXPECT_TRUE(e.contains(SVec::unit(at(ops.space, {1, 1}))));
  EXPECT_TRUE(highest_weight_vectors(ops, {1, 1}).empty());

  auto ops3 = chevalley_ops(tensor_rep(vector_rep(spec(2)), 3));
  std::vector<Weight> found;
  for (const auto& [w, b] : weight_spaces(ops3))
    if (!highest_weight_vectors(ops3, w).empty()) found.push_back(w);
  EXPECT_EQ(found, (std::vector<Weight>{{2, 1}, {3, 0}}));
}

TEST(Submodule, Generation) {
  auto rep = tensor_rep(vector_rep(spec(2)), 2);
  EXPECT_EQ(generate_submodule(rep, {SVec::unit(at(rep.space, {1, 1}))}).dim(), 8);
  EXPECT_EQ(generate_submodule(rep, {}).dim(), 0);
  std::vector<SVec> all;
  for (int i = 0; i < rep.space->dim(); ++i) all.push_back(SVec::unit(i));
  EXPECT_EQ(generate_submodule(rep, all).dim(), 16);
}

TEST(Omega, Values) {
  SOp w = omega_map(2);
  auto v = w.dom();
  EXPECT_EQ(w.apply(SVec::unit(at(v, {2}))), SVec::unit(at(v, {-2})));
  EXPECT_EQ(w.apply(SVec::unit(at(v, {-2}))), SVec::unit(at(v, {2}), RatFunc(-1)));
  EXPECT_EQ(w * w, -SOp::identity(v));
}

TEST(Omega, GradedCommutesWithGenerators) {
  for (int n = 1; n <= 3; ++n) {
    SOp w = omega_map(n);
    for (const auto& x : chevalley_ops(vector_rep(spec(n))).named())
      EXPECT_TRUE(supercommutator(w, x.op).is_zero()) << n << " " << x.name;
  }
}

TEST(Classical, Limit) {
  auto c = classical_limit(chevalley_ops(vector_rep(spec(2))));
  auto v = SuperSpace::vector_space(2);
  EXPECT_EQ(c.get("h1").get(at(v, {1}), at(v, {1})), RatFunc(1));
  EXPECT_EQ(c.get("h1").get(at(v, {2}), at(v, {2})), RatFunc(0));
  EXPECT_EQ(c.get("kbar1"), SOp::unit(v, at(v, {1}), at(v, {-1})) + SOp::unit(v, at(v, {-1}), at(v, {1})));
  EXPECT_THROW(specialize_op(RatFunc(1) / (q() - RatFunc(1)) * SOp::identity(v), 1, "x"), PoleAtPoint);
}

TEST(GenWordEval, ProductAndSum) {
  auto rep = vector_rep(spec(2));
  GenWord w = GenWord::gen(1, 1) * GenWord::gen(-1, -1);
  EXPECT_EQ(w.eval(rep), SOp::identity(rep.space));
  EXPECT_EQ(w.parity(), 0);
  EXPECT_EQ(GenWord::gen(-1, 1).parity(), 1);
  EXPECT_EQ((q() * GenWord::one() + GenWord::gen(1, 1)).eval(rep), q() * SOp::identity(rep.space) + rep.L(1, 1));
}
