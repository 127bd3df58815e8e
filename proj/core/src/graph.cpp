#include "trd/graph.hpp"

#include <algorithm>
#include <string>

#include "trd/error.hpp"

namespace trd {

namespace {

void check_order(int n) {
  if (n < 1) throw Error(Errc::TooSmall, "graph order must be at least 1, got " + std::to_string(n));
  if (n > kMaxOrder)
    throw Error(Errc::TooLarge, "graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    g.check_vertex(e.u);
    g.check_vertex(e.v);
    if (e.u == e.v) throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(e.u));
    g.adj_[e.u].insert(e.v);
    g.adj_[e.v].insert(e.u);
  }
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order())
    throw Error(Errc::OutOfRange,
                "vertex " + std::to_string(v) + " out of range for order " + std::to_string(order()));
}

int Graph::size() const {
  int twice = 0;
  for (VertexSet row : adj_) twice += row.size();
  return twice / 2;
}

int Graph::max_degree() const {
  int best = 0;
  for (VertexSet row : adj_) best = std::max(best, row.size());
  return best;
}

int Graph::min_degree() const {
  int best = order();
  for (VertexSet row : adj_) best = std::min(best, row.size());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
  return out;
}

std::vector<Edge> Graph::non_edges() const {
  std::vector<Edge> out;
  const VertexSet all = vertices();
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : all - adj_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
  return out;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adj_.begin(), adj_.end(), [](VertexSet row) { return row.empty(); });
}

VertexSet Graph::isolated_vertices() const {
  VertexSet out;
  for (Vertex v = 0; v < order(); ++v)
    if (adj_[v].empty()) out.insert(v);
  return out;
}

Graph Graph::complement() const {
  Graph g;
  g.adj_.resize(adj_.size());
  const VertexSet all = vertices();
  for (Vertex v = 0; v < order(); ++v) g.adj_[v] = all - adj_[v] - VertexSet::single(v);
  return g;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v))
    throw Error(Errc::EdgeExists, "edge " + std::to_string(u) + "-" + std::to_string(v) + " already present");
  Graph g = *this;
  g.adj_[u].insert(v);
  g.adj_[v].insert(u);
  return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(u));
  if (!adjacent(u, v))
    throw Error(Errc::NotANonEdge, "pair " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
  Graph g = *this;
  g.adj_[u].erase(v);
  g.adj_[v].erase(u);
  return g;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::vector<int> index(adj_.size(), -1);
  int next = 0;
  for (Vertex v : keep) index[v] = next++;
  Graph g(next);
  for (Vertex v : keep)
    for (Vertex w : adj_[v] & keep) g.adj_[index[v]].insert(index[w]);
  return g;
}

Graph build_graph(int n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

Graph complement(const Graph& g) { return g.complement(); }

Graph add_edge(const Graph& g, Vertex u, Vertex v) { return g.with_edge(u, v); }

Graph disjoint_union(std::span<const Graph> parts) {
  int total = 0;
  for (const Graph& p : parts) total += p.order();
  std::vector<Edge> edges;
  int offset = 0;
  for (const Graph& p : parts) {
    for (Edge e : p.edges()) edges.emplace_back(e.u + offset, e.v + offset);
    offset += p.order();
  }
  return Graph::from_edges(total, edges);
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  dist[source] = 0;
  VertexSet seen = VertexSet::single(source);
  VertexSet frontier = seen;
  for (int d = 1; !frontier.empty(); ++d) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next -= seen;
    for (Vertex v : next) dist[v] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::single(unseen.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
      comp |= frontier;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

bool is_clique(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if ((s - g.neighbors(v) - VertexSet::single(v)).size() != 0) return false;
  return true;
}

GraphMetrics metrics(const Graph& g) {
  GraphMetrics m;
  const int n = g.order();
  m.degrees.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    m.degrees.push_back(g.degree(v));
    if (!m.universal_vertex && g.degree(v) == n - 1) m.universal_vertex = v;
  }
  m.isolated_vertices = g.isolated_vertices();
  m.components = components(g);
  for (VertexSet comp : m.components) {
    int diam = 0;
    for (Vertex v : comp) {
      const auto dist = distances_from(g, v);
      for (Vertex w : comp) diam = std::max(diam, dist[w]);
    }
    m.component_diameters.push_back(diam);
  }
  if (m.components.size() == 1) m.diameter = m.component_diameters.front();
  return m;
}

}  // namespace trd
