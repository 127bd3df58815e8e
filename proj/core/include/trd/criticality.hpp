#pragma once

#include <string_view>
#include <vector>

#include "trd/graph.hpp"
#include "trd/solver.hpp"

namespace trd {

/// How gamma_tR responds to adding each non-edge.
///  - complete: there are no non-edges
///  - supercritical: every delta is 2
///  - edge_critical: every delta is at least 1 (and not all 2)
///  - stable: every delta is 0
///  - mixed: anything else
enum class EdgeClass { edge_critical, supercritical, stable, mixed, complete };

std::string_view to_string(EdgeClass c) noexcept;

/// edge_critical or supercritical.
constexpr bool is_critical_class(EdgeClass c) {
  return c == EdgeClass::edge_critical || c == EdgeClass::supercritical;
}

struct EdgeDelta {
  Edge edge;
  int delta = 0;
};

struct EdgeProfile {
  int base_value = 0;
  /// One entry per non-edge, in lexicographic edge order.
  std::vector<EdgeDelta> deltas;
  EdgeClass classification = EdgeClass::complete;
};

/// gamma_tR(g) - gamma_tR(g + uv). Throws NotANonEdge, IsolatedVertex.
int edge_delta(const Graph& g, Vertex u, Vertex v, const SolveOptions& options = {});

/// Classification from a list of deltas, per the table on EdgeClass.
EdgeClass classify_deltas(const std::vector<EdgeDelta>& deltas);

/// Full delta map. Non-edges are evaluated on up to `jobs` threads
/// (0 = hardware concurrency); the result does not depend on `jobs`.
EdgeProfile edge_profile(const Graph& g, int jobs = 1, const SolveOptions& options = {});

/// Cheaper than edge_profile when only criticality matters: stops at the
/// first non-critical non-edge. False for complete graphs.
bool is_edge_critical(const Graph& g, const SolveOptions& options = {});
/// Same, with gamma_tR(g) already known.
bool is_edge_critical(const Graph& g, int base_value, const SolveOptions& options = {});

/// Adds, one at a time, the lexicographically first non-edge whose
/// addition keeps gamma_tR unchanged, until every non-edge is critical.
/// Throws IsolatedVertex, ValueTooSmall (gamma_tR < 4).
Graph complete_to_critical(const Graph& g, const SolveOptions& options = {});

/// gamma_t(g) - gamma_t(g + uv). Throws NotANonEdge, IsolatedVertex.
int total_domination_delta(const Graph& g, Vertex u, Vertex v, const SolveOptions& options = {});

/// gamma_t(g) == k and every non-edge lowers gamma_t (non-empty complement).
bool is_gamma_t_edge_critical(const Graph& g, int k, const SolveOptions& options = {});

}  // namespace trd
