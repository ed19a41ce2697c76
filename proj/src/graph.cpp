#include "autoequiv/graph.hpp"

#include <numeric>
#include <string>

#include "autoequiv/errors.hpp"

namespace autoequiv {

Graph make_graph(std::size_t vertex_count, const std::set<std::pair<Point, Point>>& edges,
                 bool directed) {
  if (vertex_count == 0) throw PreconditionError("a graph needs at least one vertex");
  Graph g{vertex_count, {}, directed};
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an endpoint outside 0.." + std::to_string(vertex_count - 1));
    }
    g.edges.emplace(u, v);
    if (!directed) g.edges.emplace(v, u);
  }
  return g;
}

Model graph_to_model(const Graph& g) {
  Model m;
  m.algebra.domain = SortedDomain({Sort{kGraphSort, g.vertex_count}});
  m.relations.push_back(RelationSymbol{kGraphRelation, std::vector<std::size_t>{0, 0}});
  m.interpretation.label = "G";
  auto& tuples = m.interpretation.tuples[kGraphRelation];
  for (const auto& [u, v] : g.edges) tuples.push_back({Element{0, u}, Element{0, v}});
  return m;
}

Graph model_to_graph(const Model& m) {
  if (m.domain().sort_count() != 1 || !m.algebra.operations.empty() || m.relations.size() != 1 ||
      m.relations.front().signature.size() != 2) {
    throw ShapeError("a graph model has one sort, no operations and exactly one binary relation");
  }
  require_valid(m);
  std::set<std::pair<Point, Point>> edges;
  for (const auto& t : m.interpretation.tuples.at(m.relations.front().name)) {
    edges.emplace(t[0].index, t[1].index);
  }
  bool symmetric = true;
  for (const auto& [u, v] : edges) symmetric = symmetric && edges.contains({v, u});
  return Graph{m.domain().size(0), std::move(edges), !symmetric};
}

namespace {

std::size_t component_count(const Graph& g, std::size_t& undirected_edges) {
  std::vector<std::size_t> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::set<std::pair<Point, Point>> seen;
  std::size_t components = g.vertex_count;
  for (const auto& [u, v] : g.edges) {
    if (u == v) continue;
    seen.emplace(std::min(u, v), std::max(u, v));
    auto a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  undirected_edges = seen.size();
  return components;
}

}  // namespace

bool is_connected(const Graph& g) {
  std::size_t edges = 0;
  return component_count(g, edges) == 1;
}

bool is_tree(const Graph& g) {
  std::size_t edges = 0;
  return component_count(g, edges) == 1 && edges + 1 == g.vertex_count;
}

}  // namespace autoequiv
