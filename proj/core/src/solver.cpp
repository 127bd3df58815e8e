#include "trd/solver.hpp"

#include <numeric>
#include <string>

#include "domination_search.hpp"
#include "roman_search.hpp"
#include "trd/error.hpp"

namespace trd {

WeightFunction::WeightFunction(std::vector<std::uint8_t> values) : values_(std::move(values)) {
  for (auto x : values_)
    if (x > 2) throw Error(Errc::OutOfRange, "weight values must lie in {0,1,2}");
}

WeightFunction::WeightFunction(std::initializer_list<int> values) {
  values_.reserve(values.size());
  for (int x : values) {
    if (x < 0 || x > 2) throw Error(Errc::OutOfRange, "weight values must lie in {0,1,2}");
    values_.push_back(static_cast<std::uint8_t>(x));
  }
}

int WeightFunction::weight() const { return std::accumulate(values_.begin(), values_.end(), 0); }

VertexSet WeightFunction::level(int i) const {
  VertexSet out;
  for (int v = 0; v < size(); ++v)
    if (values_[v] == i) out.insert(v);
  return out;
}

std::string_view to_string(Invariant inv) noexcept {
  switch (inv) {
    case Invariant::gamma: return "gamma";
    case Invariant::gamma_t: return "gamma_t";
    case Invariant::gamma_R: return "gamma_R";
    case Invariant::gamma_tR: return "gamma_tR";
  }
  return "?";
}

namespace {

TrdVerdict check_function(const Graph& g, const WeightFunction& f, bool total) {
  if (f.size() != g.order())
    throw Error(Errc::LengthMismatch, "function has " + std::to_string(f.size()) + " values for a graph of order " +
                                          std::to_string(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    bool has_two = false;
    bool has_positive = false;
    for (Vertex u = 0; u < g.order(); ++u) {
      if (!g.adjacent(u, v)) continue;
      has_two = has_two || f[u] == 2;
      has_positive = has_positive || f[u] > 0;
    }
    if (f[v] == 0 && !has_two) return {false, TrdViolation::roman, v};
    if (total && f[v] > 0 && !has_positive) return {false, TrdViolation::total, v};
  }
  return {};
}

void require_total_input(const Graph& g, const SolveOptions& options) {
  if (g.order() < 2) throw Error(Errc::TooSmall, "total Roman domination needs at least 2 vertices");
  if (g.order() > options.max_order)
    throw Error(Errc::TooLarge, "order " + std::to_string(g.order()) + " above solver cap " +
                                    std::to_string(options.max_order));
  if (g.has_isolated_vertex())
    throw Error(Errc::IsolatedVertex, "vertex " + std::to_string(g.isolated_vertices().front()) + " is isolated");
}

void require_order(const Graph& g, int cap) {
  if (g.order() > cap)
    throw Error(Errc::TooLarge, "order " + std::to_string(g.order()) + " above cap " + std::to_string(cap));
}

SolveResult roman_solve(const Graph& g, bool total, const SolveOptions& options, Invariant inv) {
  detail::RomanSearch search(g, total, 0, options.node_budget);
  SolveResult r;
  r.invariant = inv;
  r.value = search.minimize(g.order());
  detail::RomanSearch lex(g, total, 0, options.node_budget);
  lex.enumerate(r.value, [&](const detail::RomanSearch::Assignment& a) {
    r.witness = WeightFunction(a);
    return false;
  });
  r.nodes_explored = search.nodes() + lex.nodes();
  return r;
}

SolveResult set_solve(const Graph& g, bool total, const SolveOptions& options, Invariant inv) {
  detail::DominationSearch search(g, total, options.node_budget);
  SolveResult r;
  r.invariant = inv;
  r.value = search.minimize();
  std::vector<std::uint8_t> indicator(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : VertexSet{search.best_set()}) indicator[v] = 1;
  r.witness = WeightFunction(std::move(indicator));
  r.nodes_explored = search.nodes();
  return r;
}

std::vector<WeightFunction> enumerate_min(const Graph& g, bool total) {
  detail::RomanSearch search(g, total, 0, SolveOptions{}.node_budget);
  const int value = search.minimize(g.order());
  std::vector<WeightFunction> out;
  detail::RomanSearch walk(g, total, 0, SolveOptions{}.node_budget);
  walk.enumerate(value, [&](const detail::RomanSearch::Assignment& a) {
    out.emplace_back(a);
    return true;
  });
  return out;
}

}  // namespace

TrdVerdict is_trd_function(const Graph& g, const WeightFunction& f) { return check_function(g, f, true); }

TrdVerdict is_rd_function(const Graph& g, const WeightFunction& f) { return check_function(g, f, false); }

SolveResult gamma_tR(const Graph& g, const SolveOptions& options) {
  require_total_input(g, options);
  return roman_solve(g, true, options, Invariant::gamma_tR);
}

int gamma_tR_value(const Graph& g, const SolveOptions& options) {
  require_total_input(g, options);
  detail::RomanSearch search(g, true, 0, options.node_budget);
  return search.minimize(g.order());
}

bool has_trd_function_below(const Graph& g, int bound, const SolveOptions& options) {
  require_total_input(g, options);
  if (bound > g.order()) return true;
  detail::RomanSearch search(g, true, 0, options.node_budget);
  return search.minimize(bound, true) < bound;
}

SolveResult gamma_R(const Graph& g, const SolveOptions& options) {
  require_order(g, options.max_order);
  return roman_solve(g, false, options, Invariant::gamma_R);
}

int gamma_R_value(const Graph& g, const SolveOptions& options) {
  require_order(g, options.max_order);
  detail::RomanSearch search(g, false, 0, options.node_budget);
  return search.minimize(g.order());
}

SolveResult gamma(const Graph& g, const SolveOptions& options) {
  require_order(g, options.max_order);
  return set_solve(g, false, options, Invariant::gamma);
}

SolveResult gamma_t(const Graph& g, const SolveOptions& options) {
  require_order(g, options.max_order);
  if (g.has_isolated_vertex())
    throw Error(Errc::IsolatedVertex, "total domination undefined: vertex " +
                                          std::to_string(g.isolated_vertices().front()) + " is isolated");
  return set_solve(g, true, options, Invariant::gamma_t);
}

ClassicalNumbers classical_numbers(const Graph& g, const SolveOptions& options) {
  ClassicalNumbers c;
  c.gamma_t = gamma_t(g, options).value;
  c.gamma = gamma(g, options).value;
  c.gamma_R = gamma_R_value(g, options);
  return c;
}

std::vector<WeightFunction> enumerate_min_trd(const Graph& g) {
  require_total_input(g, SolveOptions{});
  require_order(g, kEnumerationCap);
  return enumerate_min(g, true);
}

std::vector<WeightFunction> enumerate_min_rd(const Graph& g) {
  require_order(g, kEnumerationCap);
  return enumerate_min(g, false);
}

VertexSet dead_vertices(const Graph& g, DominationMode mode, const SolveOptions& options) {
  const bool total = mode == DominationMode::total_roman;
  if (total) require_total_input(g, options);
  else require_order(g, options.max_order);

  detail::RomanSearch base(g, total, 0, options.node_budget);
  const int value = base.minimize(g.order());
  VertexSet dead;
  for (Vertex v = 0; v < g.order(); ++v) {
    detail::RomanSearch forced(g, total, VertexSet::single(v).bits(), options.node_budget);
    if (forced.minimize(value + 1, true) > value) dead.insert(v);
  }
  return dead;
}

}  // namespace trd
