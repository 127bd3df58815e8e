#include <string>

#include "trd/error.hpp"
#include "trd/families.hpp"

namespace trd {

namespace {

VertexSet leaves_of(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) out.insert(v);
  return out;
}

// Pendant P2's hanging off a core: every leaf has a private support of
// degree 2. On success `supports` and `core` are filled in.
bool split_pendant_paths(const Graph& g, VertexSet& supports, VertexSet& core) {
  const VertexSet leaves = leaves_of(g);
  if (leaves.empty()) return false;
  supports = VertexSet{};
  for (Vertex w : leaves) {
    const Vertex s = g.neighbors(w).front();
    if (leaves.contains(s) || supports.contains(s) || g.degree(s) != 2) return false;
    supports.insert(s);
  }
  core = g.vertices() - leaves - supports;
  for (Vertex s : supports)
    if ((g.neighbors(s) & core).size() != 1) return false;
  return true;
}

void require_connected(const Graph& g, int min_order) {
  if (g.order() < min_order)
    throw Error(Errc::TooSmall, "needs order >= " + std::to_string(min_order) + ", got " + std::to_string(g.order()));
  if (!is_connected(g)) throw Error(Errc::Disconnected, "graph is not connected");
}

}  // namespace

std::string_view to_string(Hen1Kind k) noexcept {
  switch (k) {
    case Hen1Kind::PathOrCycle: return "PathOrCycle";
    case Hen1Kind::Corona: return "Corona";
    case Hen1Kind::SubdividedStar: return "SubdividedStar";
    case Hen1Kind::FamilyG: return "FamilyG";
    case Hen1Kind::FamilyH: return "FamilyH";
    case Hen1Kind::None: return "None";
  }
  return "?";
}

bool is_path_or_cycle(const Graph& g) { return g.max_degree() <= 2 && is_connected(g); }

bool is_cycle_graph(const Graph& g) {
  return g.order() >= 3 && g.min_degree() == 2 && g.max_degree() == 2 && is_connected(g);
}

bool is_subdivided_star(const Graph& g) {
  const int n = g.order();
  if (n < 5 || n % 2 == 0 || !is_tree(g)) return false;
  const int k = (n - 1) / 2;
  for (Vertex c = 0; c < n; ++c) {
    if (g.degree(c) != k) continue;
    bool ok = true;
    for (Vertex x : g.neighbors(c)) ok = ok && g.degree(x) == 2;
    const VertexSet middle = g.neighbors(c);
    for (Vertex w : g.vertices() - middle - VertexSet::single(c))
      ok = ok && g.degree(w) == 1 && middle.contains(g.neighbors(w).front());
    if (ok) return true;
  }
  return false;
}

bool is_corona(const Graph& g, VertexSet* inner) {
  const int n = g.order();
  if (n % 2 != 0) return false;
  const VertexSet leaves = leaves_of(g);
  if (n == 2) {
    if (g.size() != 1) return false;
    if (inner) *inner = VertexSet::single(0);
    return true;
  }
  if (leaves.size() != n / 2) return false;
  const VertexSet rest = g.vertices() - leaves;
  for (Vertex v : rest)
    if ((g.neighbors(v) & leaves).size() != 1) return false;
  for (Vertex w : leaves)
    if (leaves.contains(g.neighbors(w).front())) return false;
  if (inner) *inner = rest;
  return true;
}

bool is_family_g(const Graph& g) {
  VertexSet supports, core;
  if (!split_pendant_paths(g, supports, core)) return false;
  if (core.size() != 4) return false;
  for (Vertex v : core)
    if ((g.neighbors(v) & core).size() != 2) return false;
  VertexSet anchors;
  for (Vertex s : supports) anchors |= g.neighbors(s) & core;
  if (anchors.size() > 2) return false;
  if (anchors.size() == 2) {
    const Vertex a = anchors.front();
    if (!g.adjacent(a, (anchors - VertexSet::single(a)).front())) return false;
  }
  const int k = supports.size();
  return g.order() == 4 + 2 * k && g.size() == 4 + 2 * k;
}

std::optional<int> family_h_r(const Graph& g) {
  if (!is_tree(g)) return std::nullopt;
  VertexSet supports, core;
  if (!split_pendant_paths(g, supports, core)) return std::nullopt;
  const int m = core.size();
  if (m < 2) return std::nullopt;
  const Graph spine = g.induced(core);
  if (!is_path_or_cycle(spine) || spine.size() != m - 1) return std::nullopt;
  // Supports may only hang off the two ends of the spine, and both ends need one.
  for (Vertex v : core) {
    const bool end = (g.neighbors(v) & core).size() <= 1;
    const bool anchored = !(g.neighbors(v) & supports).empty();
    if (end != anchored) return std::nullopt;
  }
  return m - 2;
}

Hen1Class hen1_classify(const Graph& g) {
  require_connected(g, 2);
  if (is_path_or_cycle(g)) return {Hen1Kind::PathOrCycle, std::nullopt};
  if (is_subdivided_star(g)) return {Hen1Kind::SubdividedStar, std::nullopt};
  if (is_corona(g)) return {Hen1Kind::Corona, std::nullopt};
  if (is_family_g(g)) return {Hen1Kind::FamilyG, std::nullopt};
  if (auto r = family_h_r(g)) return {Hen1Kind::FamilyH, r};
  return {};
}

bool is_galaxy(const Graph& g) {
  const auto comps = components(g);
  if (comps.size() < 2) return false;
  for (VertexSet c : comps) {
    const int k = c.size();
    if (k < 2) return false;
    const Graph part = g.induced(c);
    if (!is_tree(part) || part.max_degree() != k - 1) return false;
  }
  return true;
}

bool predict_n_critical(const Graph& g) {
  require_connected(g, 4);
  const Hen1Class c = hen1_classify(g);
  switch (c.kind) {
    case Hen1Kind::PathOrCycle:
      return is_cycle_graph(g);
    case Hen1Kind::SubdividedStar:
      return g.order() >= 7;
    case Hen1Kind::Corona: {
      VertexSet inner;
      is_corona(g, &inner);
      return inner.size() >= 3 && is_clique(g, inner);
    }
    case Hen1Kind::FamilyG:
      return true;
    case Hen1Kind::FamilyH:
      return *c.r != 0 && *c.r != 2;
    case Hen1Kind::None:
      return false;
  }
  return false;
}

bool is_union_of_complete(const Graph& g, int min_parts, int min_order) {
  const auto comps = components(g);
  if (static_cast<int>(comps.size()) < min_parts) return false;
  for (VertexSet c : comps)
    if (c.size() < min_order || !is_clique(g, c)) return false;
  return true;
}

bool is_union_of_k2(const Graph& g) { return g.min_degree() == 1 && g.max_degree() == 1; }

bool is_k2_plus_complete(const Graph& g) {
  const auto comps = components(g);
  if (comps.size() != 2) return false;
  const VertexSet small = comps[0].size() <= comps[1].size() ? comps[0] : comps[1];
  const VertexSet big = comps[0].size() <= comps[1].size() ? comps[1] : comps[0];
  return small.size() == 2 && big.size() >= 3 && is_clique(g, small) && is_clique(g, big);
}

bool is_regular(const Graph& g, int d) { return g.min_degree() == d && g.max_degree() == d; }

}  // namespace trd
