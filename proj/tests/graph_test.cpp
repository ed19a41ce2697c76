#include <gtest/gtest.h>

#include "autoequiv/errors.hpp"
#include "autoequiv/graph.hpp"
#include "support/fixtures.hpp"

namespace autoequiv {
namespace {

using testing::fixture;

Graph graph_of(const char* name) { return model_to_graph(fixture(name).model(0)); }

TEST(Graph, UndirectedIsStoredSymmetric) {
  const auto g = make_graph(3, {{0, 1}}, false);
  EXPECT_EQ(g.edges, (std::set<std::pair<Point, Point>>{{0, 1}, {1, 0}}));
  EXPECT_THROW(make_graph(3, {{0, 3}}, false), PreconditionError);
  EXPECT_THROW(make_graph(0, {}, true), PreconditionError);
}

TEST(Graph, ModelRoundTrip) {
  for (bool directed : {false, true}) {
    const auto g = make_graph(5, {{0, 1}, {1, 2}, {4, 4}}, directed);
    const auto m = graph_to_model(g);
    EXPECT_EQ(m.domain().name(0), "V");
    EXPECT_EQ(m.interpretation.label, "G");
    EXPECT_EQ(model_to_graph(m), g);
  }
}

TEST(Graph, ShapeErrors) {
  EXPECT_THROW(model_to_graph(fixture("c4.json").model(0)), ShapeError);
}

TEST(Graph, Figure7Predicates) {
  EXPECT_TRUE(is_tree(graph_of("fig7_g1.json")));
  EXPECT_TRUE(is_connected(graph_of("fig7_g1.json")));
  EXPECT_FALSE(is_tree(graph_of("fig7_g2.json")));
  EXPECT_FALSE(is_connected(graph_of("fig7_g2.json")));
  EXPECT_EQ(graph_of("fig7_g2.json").edges.size(), 6u);
}

TEST(Graph, Figure8UsesUnderlyingUndirectedGraph) {
  EXPECT_TRUE(graph_of("fig8_g1.json").directed);
  EXPECT_TRUE(is_tree(graph_of("fig8_g1.json")));
  EXPECT_FALSE(is_tree(graph_of("fig8_g2.json")));
  EXPECT_FALSE(is_connected(graph_of("fig8_g2.json")));
}

TEST(Graph, LoopsAreIgnored) {
  EXPECT_TRUE(is_tree(make_graph(2, {{0, 1}, {0, 0}, {1, 1}}, false)));
  EXPECT_TRUE(is_tree(make_graph(1, {}, false)));
  EXPECT_FALSE(is_connected(make_graph(2, {{0, 0}}, true)));
  // Opposite arcs form a single undirected edge, not a cycle.
  EXPECT_TRUE(is_tree(make_graph(2, {{0, 1}, {1, 0}}, true)));
}

}  // namespace
}  // namespace autoequiv
