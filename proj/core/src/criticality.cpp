#include "trd/criticality.hpp"

#include <string>

#include "trd/error.hpp"
#include "trd/parallel.hpp"

namespace trd {

std::string_view to_string(EdgeClass c) noexcept {
  switch (c) {
    case EdgeClass::edge_critical: return "edge-critical";
    case EdgeClass::supercritical: return "supercritical";
    case EdgeClass::stable: return "stable";
    case EdgeClass::mixed: return "mixed";
    case EdgeClass::complete: return "complete";
  }
  return "?";
}

namespace {

void require_non_edge(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
    throw Error(Errc::OutOfRange, "pair " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
  if (u == v || g.adjacent(u, v))
    throw Error(Errc::NotANonEdge, "pair " + std::to_string(u) + "-" + std::to_string(v) + " is not a non-edge");
}

}  // namespace

int edge_delta(const Graph& g, Vertex u, Vertex v, const SolveOptions& options) {
  require_non_edge(g, u, v);
  const int base = gamma_tR_value(g, options);
  return base - gamma_tR_value(g.with_edge(u, v), options);
}

EdgeClass classify_deltas(const std::vector<EdgeDelta>& deltas) {
  if (deltas.empty()) return EdgeClass::complete;
  bool all_two = true;
  bool all_positive = true;
  bool all_zero = true;
  for (const auto& d : deltas) {
    all_two = all_two && d.delta == 2;
    all_positive = all_positive && d.delta >= 1;
    all_zero = all_zero && d.delta == 0;
  }
  if (all_two) return EdgeClass::supercritical;
  if (all_positive) return EdgeClass::edge_critical;
  if (all_zero) return EdgeClass::stable;
  return EdgeClass::mixed;
}

EdgeProfile edge_profile(const Graph& g, int jobs, const SolveOptions& options) {
  EdgeProfile p;
  p.base_value = gamma_tR_value(g, options);
  const auto missing = g.non_edges();
  p.deltas.resize(missing.size());
  parallel_for(missing.size(), jobs, [&](std::size_t i) {
    const Edge e = missing[i];
    p.deltas[i] = {e, p.base_value - gamma_tR_value(g.with_edge(e.u, e.v), options)};
  });
  p.classification = classify_deltas(p.deltas);
  return p;
}

bool is_edge_critical(const Graph& g, const SolveOptions& options) {
  return is_edge_critical(g, gamma_tR_value(g, options), options);
}

bool is_edge_critical(const Graph& g, int base_value, const SolveOptions& options) {
  const auto missing = g.non_edges();
  if (missing.empty()) return false;
  for (Edge e : missing)
    if (!has_trd_function_below(g.with_edge(e.u, e.v), base_value, options)) return false;
  return true;
}

Graph complete_to_critical(const Graph& g, const SolveOptions& options) {
  const int base = gamma_tR_value(g, options);
  if (base < 4)
    throw Error(Errc::ValueTooSmall, "gamma_tR = " + std::to_string(base) + " < 4; no critical completion exists");
  // Adding edges never raises gamma_tR, so a non-edge that is critical stays
  // critical as the graph grows. One ordered pass over the original
  // non-edges therefore always picks the lexicographically first
  // non-critical non-edge of the current graph.
  Graph h = g;
  for (Edge e : g.non_edges()) {
    Graph candidate = h.with_edge(e.u, e.v);
    if (!has_trd_function_below(candidate, base, options)) h = std::move(candidate);
  }
  return h;
}

int total_domination_delta(const Graph& g, Vertex u, Vertex v, const SolveOptions& options) {
  require_non_edge(g, u, v);
  return gamma_t(g, options).value - gamma_t(g.with_edge(u, v), options).value;
}

bool is_gamma_t_edge_critical(const Graph& g, int k, const SolveOptions& options) {
  if (gamma_t(g, options).value != k) return false;
  const auto missing = g.non_edges();
  if (missing.empty()) return false;
  for (Edge e : missing)
    if (gamma_t(g.with_edge(e.u, e.v), options).value >= k) return false;
  return true;
}

}  // namespace trd
