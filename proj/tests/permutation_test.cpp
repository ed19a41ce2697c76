#include <gtest/gtest.h>

#include "autoequiv/errors.hpp"
#include "autoequiv/permutation.hpp"
#include "support/random_models.hpp"

namespace autoequiv {
namespace {

const SortedDomain kV4({{"V", 4}});

Permutation cyc(const SortedDomain& d, const char* text) { return parse_cycles(d, text); }

TEST(Permutation, ComposeInvertIdentity) {
  const auto p = cyc(kV4, "V:(0 1 2)");
  const auto q = cyc(kV4, "V:(2 3)");
  // (p o q)(x) = p(q(x)).
  EXPECT_EQ(compose(p, q)(2), p(3));
  EXPECT_EQ(compose(p, invert(p)), Permutation::identity(kV4));
  EXPECT_TRUE(Permutation::identity(4).is_identity());
  EXPECT_THROW(compose(p, Permutation::identity(3)), DomainMismatch);
}

TEST(Permutation, SmallCases) {
  const SortedDomain d3({{"V", 3}});
  const auto t01 = cyc(d3, "V:(0 1)");
  EXPECT_TRUE(compose(t01, t01).is_identity());
  EXPECT_EQ(compose(t01, cyc(d3, "V:(1 2)")), cyc(d3, "V:(0 1 2)"));
  EXPECT_EQ(compose(Permutation::identity(d3), t01), t01);
  EXPECT_EQ(invert(cyc(d3, "V:(0 1 2)")), cyc(d3, "V:(0 2 1)"));
  EXPECT_EQ(invert(t01), t01);
  EXPECT_EQ(closure(d3, {t01}).order(), 2u);
  EXPECT_EQ(closure(d3, {t01, cyc(d3, "V:(1 2)")}).order(), 6u);
  EXPECT_TRUE(groups_equal(closure(d3, {t01, cyc(d3, "V:(1 2)")}),
                           closure(d3, {cyc(d3, "V:(0 1 2)"), t01})));
  EXPECT_FALSE(groups_equal(closure(d3, {t01}), closure(d3, {t01, cyc(d3, "V:(1 2)")})));
  EXPECT_THROW(groups_equal(closure(d3, {}), closure(kV4, {})), DomainMismatch);
}

TEST(Permutation, CycleNotation) {
  const SortedDomain d({{"V", 4}, {"W", 2}});
  const auto p = Permutation::from_sorts(d, {{3, 2, 1, 0}, {1, 0}});
  EXPECT_EQ(format_cycles(d, p), "V:(0 3)(1 2) W:(0 1)");
  EXPECT_EQ(parse_cycles(d, "V:(0 3)(1 2); W:(0 1)"), p);
  EXPECT_EQ(format_cycles(d, Permutation::identity(d)), "id");
  EXPECT_EQ(parse_cycles(d, "id"), Permutation::identity(d));
  EXPECT_EQ(parse_cycles(kV4, "(1 3)"), cyc(kV4, "V:(1 3)"));
  for (const char* bad : {"V:(0 4)", "V:(0 0)", "X:(0 1)", "V:(0 1", "(0 1)(1 2)", "V:(a b)"}) {
    EXPECT_THROW(parse_cycles(kV4, bad), ParseError) << bad;
  }
  EXPECT_THROW(parse_cycles(d, "(0 1)"), ParseError);
}

TEST(Permutation, SortRespect) {
  const SortedDomain d({{"V", 2}, {"W", 2}});
  EXPECT_TRUE(respects_sorts(d, Permutation::identity(d)));
  EXPECT_FALSE(respects_sorts(d, Permutation({2, 1, 0, 3})));
  EXPECT_FALSE(respects_sorts(d, Permutation({0, 1, 2})));
  EXPECT_THROW(Permutation::from_sorts(d, {{0, 0}, {0, 1}}), PreconditionError);
}

TEST(Closure, SymmetricGroup) {
  const auto g = closure(kV4, {cyc(kV4, "V:(0 1)"), cyc(kV4, "V:(0 1 2 3)")});
  EXPECT_EQ(g.order(), 24u);
  EXPECT_TRUE(g.elements().front().is_identity());
  EXPECT_TRUE(std::is_sorted(g.elements().begin(), g.elements().end()));
  EXPECT_TRUE(g.contains(cyc(kV4, "V:(1 3)")));
}

TEST(Closure, TrivialAndCap) {
  EXPECT_EQ(closure(kV4, {}).order(), 1u);
  EXPECT_THROW(closure(kV4, {cyc(kV4, "V:(0 1)"), cyc(kV4, "V:(0 1 2 3)")}, 10), ResourceError);
}

TEST(Closure, FromElementsChecksClosure) {
  const auto g = PermGroup::from_elements(kV4, {Permutation::identity(kV4), cyc(kV4, "V:(0 1)")});
  EXPECT_EQ(g.order(), 2u);
  EXPECT_THROW(PermGroup::from_elements(kV4, {Permutation::identity(kV4), cyc(kV4, "V:(0 1 2)")}),
               PreconditionError);
}

TEST(Conjugation, SymFixingZeroByTransposition) {
  // Sym{1,2,3} fixing 0, conjugated by (0 3), is Sym{0,1,2} fixing 3.
  const auto g = closure(kV4, {cyc(kV4, "V:(1 2)"), cyc(kV4, "V:(1 2 3)")});
  ASSERT_EQ(g.order(), 6u);
  const auto h = conjugate_group(g, cyc(kV4, "V:(0 3)"));
  EXPECT_EQ(h.order(), 6u);
  for (const auto& x : h.elements()) EXPECT_EQ(x(3), 3u);
  EXPECT_TRUE(groups_equal(h, closure(kV4, {cyc(kV4, "V:(0 1)"), cyc(kV4, "V:(0 1 2)")})));
  EXPECT_FALSE(groups_equal(g, h));
}

TEST(Conjugation, ElementwiseDefinition) {
  const auto g = cyc(kV4, "V:(0 1 2)");
  const auto mu = cyc(kV4, "V:(1 3)");
  EXPECT_EQ(conjugate(g, mu), compose(compose(mu, g), invert(mu)));
}

TEST(Orbits, PartitionAndProfile) {
  const SortedDomain d({{"V", 4}, {"W", 3}});
  const auto g = closure(d, {parse_cycles(d, "V:(0 1) W:(0 2)")});
  const auto o = orbits(g);
  EXPECT_EQ(o.orbit_of[1], 0u);
  EXPECT_EQ(o.orbit_size[0], 2u);
  EXPECT_EQ(o.orbit_of[3], 3u);
  EXPECT_EQ(o.orbit_size[3], 1u);
  EXPECT_EQ(o.orbit_of[6], 4u);
  EXPECT_EQ(orbit_profile(g), (std::vector<std::vector<std::size_t>>{{1, 1, 2}, {1, 2}}));
}

// Random subgroups of small symmetric groups.
class GroupLaws : public ::testing::TestWithParam<int> {};

TEST_P(GroupLaws, ClosureConjugationLagrange) {
  testing::ModelGenerator gen(GetParam());
  const SortedDomain d({{"V", gen.uniform(1, 5)}, {"W", gen.uniform(1, 3)}});
  std::vector<Permutation> gens;
  for (std::size_t k = gen.uniform(0, 2); k > 0; --k) gens.push_back(gen.bijection(d));
  const auto g = closure(d, gens);

  // Idempotence: closing the element set again changes nothing.
  EXPECT_EQ(closure(d, g.elements()).elements(), g.elements());
  EXPECT_TRUE(groups_equal(PermGroup::from_elements(d, g.elements()), g));

  // Lagrange: a generated subgroup's order divides the group order.
  if (!gens.empty()) {
    const auto sub = closure(d, {gens[0]});
    EXPECT_EQ(g.order() % sub.order(), 0u);
  }

  // Conjugating by mu then mu^-1 is the identity on groups.
  const auto mu = gen.bijection(d);
  const auto h = conjugate_group(g, mu);
  EXPECT_EQ(h.order(), g.order());
  EXPECT_EQ(conjugate_group(h, invert(mu)).elements(), g.elements());
}

INSTANTIATE_TEST_SUITE_P(Seeds, GroupLaws, ::testing::Range(0, 40));

}  // namespace
}  // namespace autoequiv
