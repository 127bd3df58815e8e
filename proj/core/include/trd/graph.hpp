#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "trd/vertex_set.hpp"

namespace trd {

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr auto operator<=>(const Edge&) const = default;
};

/**
 * Immutable simple undirected graph on vertices 0..n-1.
 *
 * Adjacency is one VertexSet row per vertex; rows are symmetric and never
 * contain their own vertex. Editing operations return new graphs.
 * Isolated vertices are allowed here; invariant computations that need
 * their absence check for it themselves.
 */
class Graph {
 public:
  /// Edgeless graph on n vertices, 1 <= n <= kMaxOrder.
  explicit Graph(int n);

  /// Throws OutOfRange, SelfLoop, TooSmall or TooLarge. Duplicate pairs collapse.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;

  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  VertexSet closed_neighbors(Vertex v) const { return adj_[v] | VertexSet::single(v); }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  int degree(Vertex v) const { return adj_[v].size(); }
  int max_degree() const;
  int min_degree() const;

  /// Edges in lexicographic (u, v) order.
  std::vector<Edge> edges() const;
  /// Non-edges in lexicographic (u, v) order.
  std::vector<Edge> non_edges() const;

  bool has_isolated_vertex() const;
  VertexSet isolated_vertices() const;
  bool is_complete() const { return size() == order() * (order() - 1) / 2; }

  Graph complement() const;
  /// Throws EdgeExists, SelfLoop or OutOfRange.
  Graph with_edge(Vertex u, Vertex v) const;
  /// Throws NotANonEdge (the pair is not an edge), SelfLoop or OutOfRange.
  Graph without_edge(Vertex u, Vertex v) const;
  /// Subgraph induced by `keep`, relabelled in increasing vertex order.
  Graph induced(VertexSet keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;
  void check_vertex(Vertex v) const;

  std::vector<VertexSet> adj_;
};

/// Same as Graph::from_edges.
Graph build_graph(int n, std::span<const Edge> edges);
Graph complement(const Graph& g);
Graph add_edge(const Graph& g, Vertex u, Vertex v);
/// Places the graphs side by side, relabelling each block consecutively.
Graph disjoint_union(std::span<const Graph> parts);

struct GraphMetrics {
  std::vector<int> degrees;
  /// Each component as a vertex set, ordered by smallest member.
  std::vector<VertexSet> components;
  VertexSet isolated_vertices;
  /// Diameter of each component, parallel to `components`.
  std::vector<int> component_diameters;
  /// Diameter of the whole graph; empty when it is disconnected.
  std::optional<int> diameter;
  /// Lowest-numbered vertex of degree n-1, if any.
  std::optional<Vertex> universal_vertex;
};

GraphMetrics metrics(const Graph& g);

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex source);
/// True when the vertex set induces a clique.
bool is_clique(const Graph& g, VertexSet s);

}  // namespace trd
