#include <gtest/gtest.h>

#include "autoequiv/errors.hpp"
#include "autoequiv/search.hpp"
#include "support/fixtures.hpp"
#include "support/random_models.hpp"

namespace autoequiv {
namespace {

using testing::fixture;

std::vector<std::string> cycles(const PermGroup& g) {
  std::vector<std::string> out;
  for (const auto& p : g.elements()) out.push_back(format_cycles(g.domain(), p));
  return out;
}

TEST(AlgebraAut, GroupTables) {
  // Aut(Z4) = {id, x -> -x}; Aut(Klein four) = GL(2,2) of order 6.
  EXPECT_EQ(cycles(algebra_automorphisms(fixture("c4.json").algebra)),
            (std::vector<std::string>{"id", "G:(1 3)"}));
  EXPECT_EQ(algebra_automorphisms(fixture("klein4.json").algebra).order(), 6u);
}

TEST(AlgebraAut, NoOperationsGivesFullSymmetricGroup) {
  Algebra a;
  a.domain = SortedDomain({{"S", 4}, {"T", 2}});
  EXPECT_EQ(algebra_automorphisms(a).order(), 48u);
}

TEST(AlgebraAut, ConstantsAreFixed) {
  const auto a = fixture("const3.json").algebra;
  EXPECT_EQ(cycles(algebra_automorphisms(a)), (std::vector<std::string>{"id", "S:(1 2)"}));
}

TEST(ModelAut, Figure7Star) {
  const auto g = model_automorphisms(fixture("fig7_g1.json").model(0));
  EXPECT_EQ(g.order(), 6u);
  for (const auto& p : g.elements()) EXPECT_EQ(p(0), 0u);
}

TEST(ModelAut, Figure7TriangleFixesIsolatedVertex) {
  const auto g = model_automorphisms(fixture("fig7_g2.json").model(0));
  EXPECT_EQ(g.order(), 6u);
  for (const auto& p : g.elements()) EXPECT_EQ(p(3), 3u);
}

TEST(ModelAut, Figure8) {
  for (const char* name : {"fig8_g1.json", "fig8_g2.json"}) {
    EXPECT_EQ(cycles(model_automorphisms(fixture(name).model(0))),
              (std::vector<std::string>{"id", "V:(3 4)"}))
        << name;
  }
}

TEST(ModelAut, EmptyRelationIsFullGroup) {
  EXPECT_EQ(model_automorphisms(fixture("empty4.json").model(0)).order(), 24u);
}

TEST(ModelAut, ReadingsDiffer) {
  // With the constant c = 0, Aut(A) already fixes 0; relations-only does not.
  auto m = fixture("const3.json").model(0);
  m.relations = {{"R", {0}}};
  m.interpretation.tuples = {{"R", {}}};
  EXPECT_EQ(model_automorphisms(m).order(), 2u);
  EXPECT_EQ(model_automorphisms(m, {}, AutReading::relations_only).order(), 6u);
}

TEST(Search, BudgetExhaustionIsReported) {
  const auto m = fixture("fig8_g1.json").model(0);
  SearchBudget b;
  b.max_nodes = 4;
  try {
    model_automorphisms(m, b);
    FAIL() << "expected ResourceError";
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.nodes_visited(), 4u);
    EXPECT_NE(std::string(e.what()).find("budget"), std::string::npos);
  }
}

TEST(Search, GroupCapIsReported) {
  Algebra a;
  a.domain = SortedDomain({{"S", 6}});
  SearchBudget b;
  b.group_cap = 100;
  EXPECT_THROW(algebra_automorphisms(a, b), ResourceError);
}

TEST(Isomorphisms, SignatureMismatchNote) {
  const auto list = algebra_isomorphisms(fixture("const3.json").algebra,
                                         fixture("swap3.json").algebra);
  EXPECT_TRUE(list.isomorphisms.empty());
  ASSERT_TRUE(list.note.has_value());
}

TEST(Isomorphisms, CyclicVersusKleinIsEmpty) {
  const auto list = algebra_isomorphisms(fixture("c4.json").algebra, fixture("klein4.json").algebra);
  EXPECT_TRUE(list.isomorphisms.empty());
  EXPECT_FALSE(list.note.has_value());
}

TEST(Isomorphisms, CountsEqualAutOrder) {
  Algebra a;
  a.domain = SortedDomain({{"S", 3}});
  EXPECT_EQ(algebra_isomorphisms(a, a).isomorphisms.size(), 6u);
  const auto c4 = fixture("c4.json").algebra;
  EXPECT_EQ(algebra_isomorphisms(c4, c4).isomorphisms.size(), 2u);
}

TEST(Isomorphisms, MaxResultsTruncates) {
  Algebra a;
  a.domain = SortedDomain({{"S", 4}});
  SearchBudget b;
  b.max_results = 5;
  const auto list = algebra_isomorphisms(a, a, b);
  EXPECT_EQ(list.isomorphisms.size(), 5u);
  EXPECT_TRUE(list.truncated);
}

class SearchLaws : public ::testing::TestWithParam<int> {};

TEST_P(SearchLaws, IsoOfSelfIsAutAndSubgroups) {
  testing::ModelGenerator gen(1000 + GetParam());
  testing::RandomShape shape;
  const auto m = gen.model(shape);
  const auto aut_a = algebra_automorphisms(m.algebra);
  const auto aut_f = model_automorphisms(m);

  // Iso(A, A) = Aut(A), enumerated in canonical order.
  const auto iso = algebra_isomorphisms(m.algebra, m.algebra);
  EXPECT_EQ(iso.isomorphisms, aut_a.elements());

  // Aut(f) is a subgroup of Aut(A), and each element passes the direct check.
  for (const auto& s : aut_f.elements()) {
    EXPECT_TRUE(aut_a.contains(s));
    EXPECT_TRUE(is_algebra_automorphism(m.algebra, s));
  }
  EXPECT_EQ(aut_a.order() % aut_f.order(), 0u);

  // Isomorphisms onto a relabelled copy are exactly pi o Aut(A).
  const auto pi = gen.bijection(m.domain());
  const auto copy = testing::relabel(MultiModel::from_model(m), pi).algebra;
  const auto onto = algebra_isomorphisms(m.algebra, copy);
  ASSERT_EQ(onto.isomorphisms.size(), aut_a.order());
  for (const auto& mu : onto.isomorphisms) {
    EXPECT_TRUE(aut_a.contains(compose(invert(pi), mu)));
    EXPECT_TRUE(is_algebra_isomorphism(m.algebra, copy, mu));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, SearchLaws, ::testing::Range(0, 60));

}  // namespace
}  // namespace autoequiv
