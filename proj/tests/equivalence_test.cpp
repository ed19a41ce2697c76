#include <gtest/gtest.h>

#include "autoequiv/constructions.hpp"
#include "autoequiv/equivalence.hpp"
#include "autoequiv/errors.hpp"
#include "support/fixtures.hpp"
#include "support/random_models.hpp"

namespace autoequiv {
namespace {

using testing::fixture;

TEST(Matching, LowestIndexAugmentingPaths) {
  const std::vector<IndexPair> edges{{0, 0}, {0, 1}, {1, 1}, {2, 2}, {1, 0}};
  EXPECT_EQ(bipartite_perfect_matching(3, edges),
            (std::vector<IndexPair>{{0, 1}, {1, 0}, {2, 2}}));
}

TEST(Matching, NoneAndEmpty) {
  const std::vector<IndexPair> edges{{0, 0}, {1, 0}};
  EXPECT_FALSE(bipartite_perfect_matching(2, edges).has_value());
  EXPECT_EQ(bipartite_perfect_matching(0, {}), std::vector<IndexPair>{});
  const std::vector<IndexPair> bad{{0, 3}};
  EXPECT_THROW(bipartite_perfect_matching(2, bad), PreconditionError);
}

TEST(ModelEquiv, Figure7) {
  const auto g1 = fixture("fig7_g1.json").model(0);
  const auto g2 = fixture("fig7_g2.json").model(0);
  const auto w = models_automorphically_equivalent(g1, g2);
  ASSERT_TRUE(w.has_value());
  // Least witness: the centre goes to the isolated vertex, leaves onto the triangle.
  EXPECT_EQ(w->mu, Permutation({3, 0, 1, 2}));
  EXPECT_TRUE(verify_model_witness(g1, g2, *w).ok);
  EXPECT_TRUE(verify_model_witness(g1, g2, {Permutation({3, 1, 2, 0})}).ok);
  const auto bad = verify_model_witness(g1, g2, {Permutation::identity(4)});
  EXPECT_FALSE(bad.ok);
  EXPECT_FALSE(bad.reason.empty());
}

TEST(ModelEquiv, Figure8IdentityWitness) {
  const auto g1 = fixture("fig8_g1.json").model(0);
  const auto g2 = fixture("fig8_g2.json").model(0);
  const auto w = models_automorphically_equivalent(g1, g2);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->mu.is_identity());
}

TEST(ModelEquiv, StarVersusPath) {
  EXPECT_FALSE(models_automorphically_equivalent(fixture("fig7_g1.json").model(0),
                                                 fixture("path4.json").model(0)));
}

TEST(ModelEquiv, NonIsomorphicAlgebras) {
  EXPECT_FALSE(models_automorphically_equivalent(fixture("c4.json").model(0),
                                                 fixture("klein4.json").model(0)));
}

TEST(AlgebraEquiv, ConstantVersusSwapWithoutIsomorphism) {
  const auto a = fixture("const3.json").algebra;
  const auto b = fixture("swap3.json").algebra;
  const auto delta = algebras_automorphically_equivalent(a, b);
  ASSERT_TRUE(delta.has_value());
  EXPECT_TRUE(delta->is_identity());
  EXPECT_TRUE(verify_algebra_witness(a, b, *delta).ok);
  EXPECT_TRUE(signature_mismatch(a, b).has_value());
}

TEST(AlgebraEquiv, CyclicVersusKlein) {
  EXPECT_FALSE(algebras_automorphically_equivalent(fixture("c4.json").algebra,
                                                   fixture("klein4.json").algebra));
}

TEST(MultiEquiv, PipelineVerdicts) {
  EXPECT_EQ(decide_multimodel_equivalence(fixture("c4.json"), fixture("klein4.json")).verdict,
            Verdict::algebras_not_isomorphic);
  EXPECT_EQ(decide_multimodel_equivalence(fixture("match_f1.json"), fixture("single3.json")).verdict,
            Verdict::interpretation_counts_differ);
  const auto d = decide_multimodel_equivalence(fixture("match_f1.json"), fixture("match_f2.json"));
  EXPECT_EQ(d.verdict, Verdict::no_perfect_matching);
  EXPECT_EQ(d.edges, (std::vector<IndexPair>{{0, 0}, {1, 0}}));
  EXPECT_EQ(decide_multimodel_equivalence(fixture("fig7_g1.json"), fixture("path4.json")).verdict,
            Verdict::unmatched_interpretation);
  const auto yes = decide_multimodel_equivalence(fixture("fig7_g1.json"), fixture("fig7_g2.json"));
  EXPECT_EQ(yes.verdict, Verdict::equivalent);
  ASSERT_TRUE(yes.witness.has_value());
  EXPECT_EQ(yes.witness->alpha, (std::vector<IndexPair>{{0, 0}}));
}

TEST(MultiEquiv, StrictSingleMu) {
  // On 4 vertices, Aut of the undirected edge {0,1} and of {2,3} is the same
  // group H = <(0 1),(2 3)>, while Aut of {0,2} is H' = <(0 2),(1 3)> != H.
  // Every pair is equivalent on its own, but no single mu can conjugate H
  // onto both H and H'.
  MultiModel c;
  c.algebra.domain = SortedDomain({{"V", 4}});
  c.relations = {{"E", {0, 0}}};
  auto edge = [](std::uint32_t u, std::uint32_t v) {
    return std::vector<Tuple>{{{0, u}, {0, v}}, {{0, v}, {0, u}}};
  };
  c.interpretations = {{"f0", {{"E", edge(0, 1)}}}, {"f1", {{"E", edge(2, 3)}}}};
  MultiModel d = c;
  d.interpretations = {{"g0", {{"E", edge(0, 1)}}}, {"g1", {{"E", edge(0, 2)}}}};
  const auto per_pair = decide_multimodel_equivalence(c, d);
  EXPECT_EQ(per_pair.verdict, Verdict::equivalent);
  EXPECT_TRUE(verify_multimodel_witness(c, d, *per_pair.witness).ok);
  const auto strict = decide_multimodel_equivalence(c, d, {{}, true});
  EXPECT_EQ(strict.verdict, Verdict::no_shared_conjugator);
}

TEST(MultiEquiv, BudgetAppliesToWholeDecision) {
  EquivalenceOptions o;
  o.budget.max_nodes = 10;
  EXPECT_THROW(decide_multimodel_equivalence(fixture("fig8_g1.json"), fixture("fig8_g2.json"), o),
               ResourceError);
}

TEST(MultiEquiv, SortOrderOfSecondArgumentIsIrrelevant) {
  MultiModel a;
  a.algebra.domain = SortedDomain({{"P", 2}, {"Q", 3}});
  a.relations = {{"R", {0, 1}}};
  a.interpretations = {{"f", {{"R", {{{0, 0}, {1, 1}}, {{0, 1}, {1, 1}}}}}}};
  const auto b = reorder_sorts(a, SortedDomain({{"Q", 3}, {"P", 2}}));
  const auto d = decide_multimodel_equivalence(a, b);
  ASSERT_EQ(d.verdict, Verdict::equivalent);
  EXPECT_TRUE(d.witness->mus[0].is_identity());
  EXPECT_TRUE(verify_multimodel_witness(a, b, *d.witness).ok);
}

class EquivalenceLaws : public ::testing::TestWithParam<int> {};

TEST_P(EquivalenceLaws, ReflexiveSymmetricTransitive) {
  testing::ModelGenerator gen(2000 + GetParam());
  testing::RandomShape shape;
  shape.max_interpretations = 3;
  const auto a = gen.multimodel(shape);
  const auto b = gen.shuffle_sorts(testing::relabel(a, gen.bijection(a.domain())));
  auto c = testing::relabel(a, gen.bijection(a.domain()));
  std::reverse(c.interpretations.begin(), c.interpretations.end());

  const auto aa = multimodels_automorphically_equivalent(a, a);
  ASSERT_TRUE(aa.has_value());
  EXPECT_TRUE(verify_multimodel_witness(a, a, *aa).ok);

  const auto ab = multimodels_automorphically_equivalent(a, b);
  const auto ba = multimodels_automorphically_equivalent(b, a);
  const auto bc = multimodels_automorphically_equivalent(b, c);
  const auto ac = multimodels_automorphically_equivalent(a, c);
  ASSERT_TRUE(ab && ba && bc && ac);
  EXPECT_TRUE(verify_multimodel_witness(a, b, *ab).ok);
  EXPECT_TRUE(verify_multimodel_witness(b, a, *ba).ok);
  EXPECT_TRUE(verify_multimodel_witness(a, c, *ac).ok);

  // Against an unrelated random model the verdict is symmetric.
  const auto other = gen.multimodel(shape);
  EXPECT_EQ(multimodels_automorphically_equivalent(a, other).has_value(),
            multimodels_automorphically_equivalent(other, a).has_value());
}

TEST_P(EquivalenceLaws, ConstructionsAreEquivalent) {
  testing::ModelGenerator gen(3000 + GetParam());
  testing::RandomShape shape;
  shape.max_interpretations = 3;
  const auto a = gen.multimodel(shape);
  const auto comp = complement(a);
  const auto d = decide_multimodel_equivalence(a, comp);
  ASSERT_EQ(d.verdict, Verdict::equivalent);

  const auto aut = algebra_automorphisms(a.algebra);
  const auto& sigma = aut.elements()[gen.uniform(0, aut.order() - 1)];
  const auto moved = sigma_transform(a, sigma);
  const auto w = multimodels_automorphically_equivalent(a, moved);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(verify_multimodel_witness(a, moved, *w).ok);
}

INSTANTIATE_TEST_SUITE_P(Seeds, EquivalenceLaws, ::testing::Range(0, 40));

}  // namespace
}  // namespace autoequiv
