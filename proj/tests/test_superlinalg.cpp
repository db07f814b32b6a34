#include <gtest/gtest.h>

#include <random>

#include "qhowe/linalg.hpp"

using namespace qhowe;

namespace {

RatFunc q() { return RatFunc::q(); }

SOp random_op(const SpacePtr& v, int parity, std::mt19937_64& rng) {
  SOp r(v, v, parity);
  std::uniform_int_distribution<int> coef(-3, 3), pw(-2, 2), keep(0, 2);
  for (int i = 0; i < v->dim(); ++i)
    for (int j = 0; j < v->dim(); ++j)
      if (((v->parity(i) + v->parity(j) + parity) & 1) == 0 && keep(rng) == 0)
        r.set(i, j, RatFunc(coef(rng)) * q().pow(pw(rng)));
  return r;
}

}  // namespace

TEST(TensorSpace, Dimensions) {
  auto v2 = SuperSpace::vector_space(2);
  EXPECT_EQ(SuperSpace::tensor_power(v2, 1)->dim(), 4);
  auto v22 = SuperSpace::tensor_power(v2, 2);
  EXPECT_EQ(v22->dim(), 16);
  EXPECT_EQ(v22->parity(v22->index_of_word({1, -1})), 1);
  EXPECT_EQ(SuperSpace::tensor_power(SuperSpace::vector_space(3), 3)->dim(), 216);
  EXPECT_EQ(v22->even_dim(), 8);
}

TEST(GradedTensor, Signs) {
  auto v = SuperSpace::vector_space(1);
  SOp id = SOp::identity(v);
  EXPECT_EQ(graded_tensor(id, id), SOp::identity(SuperSpace::tensor(v, v)));
  const int m1 = v->index_of_word({-1}), p1 = v->index_of_word({1});
  SOp odd = SOp::unit(v, p1, m1) + SOp::unit(v, m1, p1);
  SOp t = graded_tensor(id, odd);
  auto vv = t.dom();
  EXPECT_EQ(t.get(vv->index_of_word({1, -1}), vv->index_of_word({1, 1})), RatFunc(1));
  EXPECT_EQ(t.get(vv->index_of_word({-1, -1}), vv->index_of_word({-1, 1})), RatFunc(-1));
  SOp tt = graded_tensor(odd, odd);
  EXPECT_EQ(tt.get(vv->index_of_word({1, 1}), vv->index_of_word({-1, -1})), RatFunc(-1));
}

TEST(GradedTensor, KoszulCoherenceRandomized) {
  std::mt19937_64 rng(17);
  auto v = SuperSpace::vector_space(1);
  for (int t = 0; t < 30; ++t) {
    int pa = t & 1, pb = (t >> 1) & 1, pc = (t >> 2) & 1, pd = (t >> 3) & 1;
    SOp a = random_op(v, pa, rng), b = random_op(v, pb, rng), c = random_op(v, pc, rng), d = random_op(v, pd, rng);
    SOp lhs = graded_tensor(a, b) * graded_tensor(c, d);
    SOp rhs = RatFunc(sgn(pb * pc)) * graded_tensor(a * c, b * d);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(JointKernel, Cases) {
  auto v = SuperSpace::named({"a", "b"}, {0, 0});
  EXPECT_TRUE(joint_kernel({SOp::identity(v)}).empty());
  EXPECT_EQ(joint_kernel({SOp::zero(v, v)}).size(), 2u);
  auto ker = joint_kernel({SOp::unit(v, 0, 1)});
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_EQ(ker[0], SVec::unit(0));
}

TEST(JointKernel, ContainedInEachKernel) {
  std::mt19937_64 rng(3);
  auto v = SuperSpace::tensor_power(SuperSpace::vector_space(1), 2);
  for (int t = 0; t < 10; ++t) {
    SOp a = random_op(v, 0, rng), b = random_op(v, 1, rng);
    for (const auto& x : joint_kernel({a, b})) {
      EXPECT_TRUE(a.apply(x).empty());
      EXPECT_TRUE(b.apply(x).empty());
    }
  }
}

TEST(SpanDim, Cases) {
  SVec v = SVec::unit(0, q()) + SVec::unit(2, RatFunc(3));
  EXPECT_EQ(span_dim(std::vector<SVec>{v, v.scaled(RatFunc(2))}).dim, 1);
  EXPECT_EQ(span_dim(std::vector<SVec>{}).dim, 0);
  auto space = SuperSpace::vector_space(1);
  SOp kbar = SOp::unit(space, 0, 1) + SOp::unit(space, 1, 0);
  std::vector<SOp> words{SOp::identity(space), kbar, kbar * kbar};
  EXPECT_EQ(span_dim(words).dim, 2);
}

TEST(Echelon, ExpressAndContains) {
  Echelon e(true);
  SVec a = SVec::unit(0) + SVec::unit(1, q());
  SVec b = SVec::unit(1) + SVec::unit(2, RatFunc(2));
  EXPECT_TRUE(e.insert(a));
  EXPECT_TRUE(e.insert(b));
  EXPECT_FALSE(e.insert(a + b));
  SVec target = a.scaled(q()) - b.scaled(RatFunc(5));
  auto c = e.express(target);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->get(0), q());
  EXPECT_EQ(c->get(1), RatFunc(-5));
  EXPECT_FALSE(e.contains(SVec::unit(2)));
}

TEST(Commutant, IdentityGivesEverything) {
  auto v = SuperSpace::vector_space(2);
  auto c = graded_commutant({SOp::identity(v)}, v);
  EXPECT_EQ(c.dim(), 16);
  EXPECT_EQ(c.even.size(), 8u);
}

TEST(Commutant, SmallQueerExample) {
  auto v = SuperSpace::vector_space(1);
  const int m1 = v->index_of_word({-1}), p1 = v->index_of_word({1});
  SOp k = RatFunc::q() * SOp::identity(v);
  SOp kbar = SOp::unit(v, p1, m1) + SOp::unit(v, m1, p1);
  auto c = graded_commutant({k, kbar}, v);
  ASSERT_EQ(c.dim(), 2);
  ASSERT_EQ(c.odd.size(), 1u);
  SOp j = SOp::unit(v, m1, p1) - SOp::unit(v, p1, m1);
  // the odd part is proportional to E_{-1,1} - E_{1,-1}
  EXPECT_EQ(span_dim(std::vector<SOp>{c.odd[0], j}).dim, 1);
  EXPECT_EQ(span_dim(std::vector<SOp>{c.even[0], SOp::identity(v)}).dim, 1);
}

TEST(Commutant, ElementsSupercommuteRandomized) {
  std::mt19937_64 rng(41);
  auto v = SuperSpace::vector_space(2);
  for (int t = 0; t < 4; ++t) {
    std::vector<SOp> gens{random_op(v, 0, rng), random_op(v, 1, rng)};
    for (const auto& x : graded_commutant(gens, v).all())
      for (const auto& g : gens) EXPECT_TRUE(supercommutator(x, g).is_zero());
  }
}

TEST(Closure, InvariantAndRestriction) {
  auto v = SuperSpace::vector_space(2);
  SOp shift = SOp::unit(v, v->index_of_word({2}), v->index_of_word({1}));
  Subspace s = closure({shift}, {SVec::unit(v->index_of_word({1})), SVec::unit(v->index_of_word({1}))});
  EXPECT_EQ(s.dim(), 2);
  auto sub = SuperSpace::named({"x", "y"}, {0, 0});
  SOp r = restrict_to(shift, s, sub);
  EXPECT_EQ(r.get(1, 0), RatFunc(1));
  EXPECT_EQ(r.nnz(), 1u);
}

TEST(Inverse, RoundTrip) {
  std::mt19937_64 rng(1);
  auto v = SuperSpace::vector_space(2);
  for (int t = 0; t < 5; ++t) {
    SOp a = SOp::identity(v) + random_op(v, 0, rng);
    if (span_dim(std::vector<SVec>{a.col(0), a.col(1), a.col(2), a.col(3)}).dim < 4) continue;
    EXPECT_EQ(inverse(a) * a, SOp::identity(v));
  }
}
