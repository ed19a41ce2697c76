#pragma once

// Graphs as single-relation models, plus the two structural predicates
// used to show what automorphic equivalence does not preserve.

#include <cstddef>
#include <set>
#include <utility>

#include "autoequiv/model.hpp"

namespace autoequiv {

/// Vertices are 0..vertex_count-1. Undirected graphs store both
/// orientations of every edge.
struct Graph {
  std::size_t vertex_count = 1;
  std::set<std::pair<Point, Point>> edges;
  bool directed = false;

  friend bool operator==(const Graph&, const Graph&) = default;
};

/// Builds a graph, symmetrically closing the edge set when undirected.
/// Throws PreconditionError on out-of-range endpoints or zero vertices.
Graph make_graph(std::size_t vertex_count, const std::set<std::pair<Point, Point>>& edges,
                 bool directed);

inline constexpr const char* kGraphSort = "V";
inline constexpr const char* kGraphRelation = "E";

/// One sort "V", no operations, one binary relation "E" interpreted as the
/// edge set (label "G").
Model graph_to_model(const Graph& g);

/// Inverse of graph_to_model for one-sort, operation-free models with a
/// single binary relation. The result is undirected exactly when the
/// relation is symmetric. Throws ShapeError otherwise.
Graph model_to_graph(const Model& m);

/// Weak connectivity of the underlying undirected, loop-free graph.
bool is_connected(const Graph& g);

/// Connected and acyclic on the underlying undirected, loop-free graph.
bool is_tree(const Graph& g);

}  // namespace autoequiv
