#include "registry.hpp"

#include <algorithm>
#include <sstream>

#include "trd/criticality.hpp"
#include "trd/error.hpp"
#include "trd/families.hpp"

namespace trd {

namespace corpus {

std::vector<FamilySpec> small_spiders() {
  std::vector<FamilySpec> out;
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int c = b; c <= 4; ++c) out.emplace_back(family::Spider{{a, b, c}});
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int c = b; c <= 4; ++c)
        for (int d = c; d <= 4; ++d) out.emplace_back(family::Spider{{a, b, c, d}});
  return out;
}

std::vector<FamilySpec> n_critical_families() {
  std::vector<FamilySpec> out;
  for (int n = 4; n <= 9; ++n) out.emplace_back(family::Cycle{n});
  for (int r = 2; r <= 5; ++r) out.push_back(corona_of(family::Complete{r}));
  for (int k = 2; k <= 4; ++k) out.emplace_back(family::SubdividedStar{k});
  for (int total = 1; total <= 3; ++total)
    for (int k2 = 0; 2 * k2 <= total; ++k2) out.emplace_back(family::FamilyG{total - k2, k2});
  for (int a = 1; a <= 2; ++a)
    for (int b = a; b <= 2; ++b)
      for (int r = 0; r <= 5; ++r) out.emplace_back(family::FamilyH{a, b, r});
  return out;
}

std::vector<FamilySpec> rook_graphs() {
  std::vector<FamilySpec> out;
  for (int n = 2; n <= 4; ++n)
    for (int m = n; m <= 4; ++m) out.emplace_back(family::CartesianComplete{n, m});
  return out;
}

}  // namespace corpus

namespace detail {

namespace {

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

std::string edge_str(Edge e) { return cat(e.u, '-', e.v); }

bool no_isolated(const Graph& g) { return g.order() >= 2 && !g.has_isolated_vertex(); }

bool connected_at_least(const Graph& g, int n) { return g.order() >= n && is_connected(g); }

int tr(const Graph& g, const SolveOptions& o) { return gamma_tR_value(g, o); }

std::string label(EdgeClass c) { return std::string(to_string(c)); }

bool supercritical(const Graph& g, int base, const SolveOptions& o) {
  const auto non_edges = g.non_edges();
  if (non_edges.empty()) return false;
  return std::all_of(non_edges.begin(), non_edges.end(),
                     [&](Edge e) { return tr(g.with_edge(e.u, e.v), o) == base - 2; });
}

// Leaves reached by endpaths of length >= 3 from a branch vertex.
std::vector<Vertex> long_endpath_leaves(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex leaf = 0; leaf < g.order(); ++leaf) {
    if (g.degree(leaf) != 1) continue;
    Vertex prev = leaf;
    Vertex cur = g.neighbors(leaf).front();
    int len = 1;
    while (g.degree(cur) == 2) {
      const Vertex next = (g.neighbors(cur) - VertexSet::single(prev)).front();
      prev = cur;
      cur = next;
      ++len;
    }
    if (g.degree(cur) >= 3 && len >= 3) out.push_back(leaf);
  }
  return out;
}

const FamilySpec* family_of(const Instance& in) { return in.family ? &*in.family : nullptr; }

InstanceUniverse labeled(int max_n, bool connected, bool no_iso, int min_n = 1) {
  return universe::AllLabeled{max_n, connected, no_iso, min_n};
}

InstanceUniverse families(std::vector<FamilySpec> members) { return universe::Families{std::move(members)}; }

std::vector<FamilySpec> dead_examples() {
  return {family::DeadExample{2}, family::DeadExample{3}, family::DeadExample{4}};
}

std::vector<FamilySpec> diameter_two_examples() {
  return {family::ProductDeleted{2}, family::ProductDeleted{3}, family::CartesianComplete{2, 2},
          family::CartesianComplete{3, 3}};
}

// ---- checks ---------------------------------------------------------------

Check check_bounds(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (!no_isolated(g)) return Check::skip();
  const int base = tr(g, o);
  for (Edge e : g.non_edges()) {
    const int v = tr(g.with_edge(e.u, e.v), o);
    if (v < base - 2 || v > base)
      return Check::bad(cat("gamma_tR(G)=", base, " but gamma_tR(G+", edge_str(e), ")=", v));
  }
  return Check::ok();
}

Check check_myn1(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (!no_isolated(g)) return Check::skip();
  const int base = gamma_t(g, o).value;
  for (Edge e : g.non_edges()) {
    const int v = gamma_t(g.with_edge(e.u, e.v), o).value;
    if (v < base - 2 || v > base)
      return Check::bad(cat("gamma_t(G)=", base, " but gamma_t(G+", edge_str(e), ")=", v));
  }
  return Check::ok();
}

Check check_critedge_values(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (!no_isolated(g) || g.order() > kEnumerationCap) return Check::skip();
  const int base = tr(g, o);
  for (Edge e : g.non_edges()) {
    const Graph h = g.with_edge(e.u, e.v);
    if (tr(h, o) >= base) continue;
    bool both_one = false;
    for (const auto& f : enumerate_min_trd(h)) {
      const int lo = std::min(f[e.u], f[e.v]);
      const int hi = std::max(f[e.u], f[e.v]);
      if (!(hi == 2 || (lo == 1 && hi == 1)))
        return Check::bad(cat("critical edge ", edge_str(e), " has a minimum function with {f(u),f(v)}={", lo, ",",
                              hi, "}"));
      both_one = both_one || (lo == 1 && hi == 1);
    }
    if (g.degree(e.u) == 1 && g.degree(e.v) == 1 && !both_one)
      return Check::bad(cat("critical edge ", edge_str(e), " joins two leaves but no minimum function has f(u)=f(v)=1"));
  }
  return Check::ok();
}

Check check_tr3(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (!no_isolated(g) || g.order() < 3) return Check::skip();
  const int base = tr(g, o);
  const bool universal = g.max_degree() == g.order() - 1;
  if ((base == 3) != universal)
    return Check::bad(cat("gamma_tR=", base, ", universal vertex ", universal ? "present" : "absent"));
  return Check::ok();
}

Check check_hen1(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (!connected_at_least(g, 2)) return Check::skip();
  const int base = tr(g, o);
  const Hen1Class c = hen1_classify(g);
  if ((c.kind != Hen1Kind::None) != (base == g.order()))
    return Check::bad(cat("class ", to_string(c.kind), " but gamma_tR=", base, " with n=", g.order()));
  return Check::ok();
}

Check check_ncrit(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (!connected_at_least(g, 4)) return Check::skip();
  const int base = tr(g, o);
  const bool measured = base == g.order() && is_edge_critical(g, base, o);
  const bool predicted = predict_n_critical(g);
  if (measured != predicted)
    return Check::bad(cat("predicted n-critical=", predicted, ", measured ", measured, " (gamma_tR=", base, ")"));
  return Check::ok();
}

Check check_4crit(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (!no_isolated(g)) return Check::skip();
  const bool galaxy = is_galaxy(complement(g));
  const int base = tr(g, o);
  const bool measured = base == 4 && is_edge_critical(g, base, o);
  if (measured != galaxy)
    return Check::bad(cat("4-critical=", measured, " but complement galaxy=", galaxy, " (gamma_tR=", base, ")"));
  return Check::ok();
}

Check check_n3reg(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (g.order() < 6 || !is_regular(g, g.order() - 3)) return Check::skip();
  const EdgeProfile p = edge_profile(g, 1, o);
  if (p.base_value != 4) return Check::bad(cat("gamma_tR=", p.base_value, ", expected 4"));
  if (p.classification != EdgeClass::stable) return Check::bad("classification " + label(p.classification));
  return Check::ok();
}

Check check_myn2_analogue(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (!no_isolated(g)) return Check::skip();
  const int base = tr(g, o);
  if (base == 5 && supercritical(g, base, o)) return Check::bad("5-supercritical");
  if (is_union_of_complete(g, 2, 3)) {
    const int k = static_cast<int>(components(g).size());
    if (base != 3 * k) return Check::bad(cat("union of ", k, " cliques has gamma_tR=", base));
    if (!supercritical(g, base, o)) return Check::bad(cat("union of ", k, " cliques is not supercritical"));
  }
  return Check::ok();
}

Check check_hen2(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (!no_isolated(g)) return Check::skip();
  const int base = tr(g, o);
  const int t = gamma_t(g, o).value;
  if (base < t || base > 2 * t) return Check::bad(cat("gamma_t=", t, ", gamma_tR=", base));
  const bool k2s = is_union_of_k2(g);
  if ((base == t) != k2s) return Check::bad(cat("gamma_tR=gamma_t=", t, " is ", base == t, ", union of K2 is ", k2s));
  return Check::ok();
}

Check check_hen3(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (!connected_at_least(g, 3)) return Check::skip();
  const int base = tr(g, o);
  const int t = gamma_t(g, o).value;
  const bool universal = g.max_degree() == g.order() - 1;
  if ((base == t + 1) != universal)
    return Check::bad(cat("gamma_t=", t, ", gamma_tR=", base, ", universal vertex ", universal));
  return Check::ok();
}

Check check_obs_t2(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (!connected_at_least(g, 3) || g.max_degree() > g.order() - 2) return Check::skip();
  const int base = tr(g, o);
  const int t = gamma_t(g, o).value;
  if (base < t + 2 || base > 2 * t) return Check::bad(cat("gamma_t=", t, ", gamma_tR=", base));
  return Check::ok();
}

Check check_t2iff(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (!connected_at_least(g, 3)) return Check::skip();
  const int base = tr(g, o);
  const int t = gamma_t(g, o).value;
  if ((base == 3 || base == 4) != (t == 2)) return Check::bad(cat("gamma_t=", t, ", gamma_tR=", base));
  if (base == 3 || base == 4) {
    const int d = gamma(g, o).value;
    if (d != base - 2) return Check::bad(cat("gamma_tR=", base, " but gamma=", d));
  }
  return Check::ok();
}

Check check_5crit(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (!no_isolated(g)) return Check::skip();
  const int base = tr(g, o);
  const bool k2_kn = is_k2_plus_complete(g);
  const bool critical = base == 5 && is_edge_critical(g, base, o);
  if (critical && !k2_kn && !is_gamma_t_edge_critical(g, 3, o))
    return Check::bad("5-critical but neither 3-gamma_t-critical nor K2 u Kn");
  if (k2_kn && !critical) return Check::bad(cat("K2 u Kn with gamma_tR=", base, " is not 5-critical"));
  return Check::ok();
}

Check check_enddeg3(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (!no_isolated(g)) return Check::skip();
  bool present = false;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (g.degree(w) != 1) continue;
    const Vertex x = g.neighbors(w).front();
    const VertexSet rest = g.neighbors(x) - VertexSet::single(w);
    for (Vertex u : rest)
      for (Vertex v : rest) {
        if (v <= u || g.adjacent(u, v)) continue;
        present = true;
        const int d = edge_delta(g, u, v, o);
        if (d != 0)
          return Check::bad(cat("leaf ", w, " with support ", x, ": non-edge ", u, "-", v, " has delta ", d));
      }
  }
  return present ? Check::ok() : Check::skip();
}

Check check_stems(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (g.order() < 3 || !is_tree(g)) return Check::skip();
  if (!is_edge_critical(g, o)) return Check::ok();
  for (Vertex w = 0; w < g.order(); ++w) {
    if (g.degree(w) != 1) continue;
    const Vertex x = g.neighbors(w).front();
    if (g.degree(x) >= 3) return Check::bad(cat("edge-critical tree with stem ", x, " of degree ", g.degree(x)));
  }
  return Check::ok();
}

Check check_longlegs(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (!no_isolated(g)) return Check::skip();
  const auto leaves = long_endpath_leaves(g);
  if (leaves.size() < 2) return Check::skip();
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      const int d = edge_delta(g, leaves[i], leaves[j], o);
      if (d != 0) return Check::bad(cat("endpath leaves ", leaves[i], "-", leaves[j], " have delta ", d));
    }
  return Check::ok();
}

const family::Spider* spider_of(const Instance& in) {
  const FamilySpec* f = family_of(in);
  if (!f || !f->is<family::Spider>() || f->as<family::Spider>().legs.size() < 3) return nullptr;
  return &f->as<family::Spider>();
}

Check check_spider_formula(const Instance& in, const SolveOptions& o) {
  const auto* s = spider_of(in);
  if (!s) return Check::skip();
  const int predicted = spider_gamma_formula(s->legs);
  const int base = tr(in.graph, o);
  if (predicted != base) return Check::bad(cat("formula ", predicted, ", solver ", base));
  return Check::ok();
}

Check check_spider_crit(const Instance& in, const SolveOptions& o) {
  const auto* s = spider_of(in);
  if (!s) return Check::skip();
  const bool predicted = spider_is_critical(s->legs);
  const int base = tr(in.graph, o);
  const bool measured = is_edge_critical(in.graph, base, o);
  if (predicted != measured) return Check::bad(cat("predicted critical=", predicted, ", measured ", measured));
  if (measured && base != in.graph.order())
    return Check::bad(cat("critical spider with gamma_tR=", base, " < n=", in.graph.order()));
  return Check::ok();
}

Check check_span(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (!no_isolated(g)) return Check::skip();
  const int base = tr(g, o);
  if (base < 4) return Check::skip();
  const Graph h = complete_to_critical(g, o);
  for (Edge e : g.edges())
    if (!h.adjacent(e.u, e.v)) return Check::bad("completion dropped edge " + edge_str(e));
  const EdgeProfile p = edge_profile(h, 1, o);
  if (p.base_value != base) return Check::bad(cat("completion changed gamma_tR from ", base, " to ", p.base_value));
  if (!is_critical_class(p.classification)) return Check::bad("completion is " + label(p.classification));
  return Check::ok();
}

Check check_knkm(const Instance& in, const SolveOptions& o) {
  const FamilySpec* f = family_of(in);
  if (!f || !f->is<family::CartesianComplete>()) return Check::skip();
  const auto& k = f->as<family::CartesianComplete>();
  const int expected = 2 * std::min(k.n, k.m);
  const int base = tr(in.graph, o);
  if (base != expected) return Check::bad(cat("gamma_tR=", base, ", expected ", expected));
  return Check::ok();
}

Check check_diam2(const Instance& in, const SolveOptions& o) {
  const FamilySpec* f = family_of(in);
  if (!f) return Check::skip();
  const bool deleted = f->is<family::ProductDeleted>();
  const bool square = f->is<family::CartesianComplete>() &&
                      f->as<family::CartesianComplete>().n == f->as<family::CartesianComplete>().m;
  if (!deleted && !square) return Check::skip();
  const Graph& g = in.graph;
  const int base = tr(g, o);
  const int expected = deleted ? 2 * f->as<family::ProductDeleted>().l + 1 : 2 * f->as<family::CartesianComplete>().n;
  if (base != expected) return Check::bad(cat("gamma_tR=", base, ", expected ", expected));
  if (metrics(g).diameter != 2) return Check::bad("instance does not have diameter 2");
  const Graph h = complete_to_critical(g, o);
  const EdgeProfile p = edge_profile(h, 1, o);
  if (p.base_value != base) return Check::bad(cat("completion changed gamma_tR to ", p.base_value));
  if (!is_critical_class(p.classification)) return Check::bad("completion is " + label(p.classification));
  if (metrics(h).diameter != 2) return Check::bad("completion does not have diameter 2");
  return Check::ok();
}

const family::DeadExample* dead_example_of(const Instance& in) {
  const FamilySpec* f = family_of(in);
  if (!f || !f->is<family::DeadExample>()) return nullptr;
  return &f->as<family::DeadExample>();
}

Check check_dn(const Instance& in, const SolveOptions& o) {
  const auto* d = dead_example_of(in);
  if (!d) return Check::skip();
  const int base = tr(in.graph, o);
  if (base != 2 * d->n + 1) return Check::bad(cat("gamma_tR=", base, ", expected ", 2 * d->n + 1));
  VertexSet expected;
  for (int i = 1; i <= d->n; ++i) expected.insert(dead_example_w(i));
  const VertexSet dead = dead_vertices(in.graph, DominationMode::total_roman, o);
  if (dead != expected) return Check::bad(cat("dead set has ", dead.size(), " vertices, expected the ", d->n, " w_i"));
  return Check::ok();
}

Check check_dn_edges(const Instance& in, const SolveOptions& o) {
  const auto* d = dead_example_of(in);
  if (!d || d->n < 2) return Check::skip();
  const Graph& g = in.graph;
  if (d->n == 2) {
    const int delta = edge_delta(g, dead_example_w(1), dead_example_w(2), o);
    if (delta != 0) return Check::bad(cat("D_2: delta(w1,w2)=", delta, ", expected 0"));
    return Check::ok();
  }
  for (int i = 1; i <= d->n; ++i) {
    const Vertex w = dead_example_w(i);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (v == w || g.adjacent(v, w)) continue;
      const int delta = edge_delta(g, w, v, o);
      if (delta < 1) return Check::bad(cat("non-edge ", w, "-", v, " has delta ", delta));
    }
  }
  return Check::ok();
}

Check check_rd_deadpair(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (g.order() < 2) return Check::skip();
  const VertexSet dead = dead_vertices(g, DominationMode::roman, o);
  int base = -1;
  for (Vertex u : dead)
    for (Vertex v : dead) {
      if (v <= u || g.adjacent(u, v)) continue;
      if (base < 0) base = gamma_R_value(g, o);
      const int after = gamma_R_value(g.with_edge(u, v), o);
      if (after != base) return Check::bad(cat("dead pair ", u, "-", v, ": gamma_R ", base, " -> ", after));
    }
  return Check::ok();
}

Theorem make(std::string id, std::string statement, std::string hypotheses, bool needs_family, InstanceUniverse u,
             CheckFn fn) {
  return {TheoremInfo{std::move(id), std::move(statement), std::move(hypotheses), needs_family, std::move(u)},
          std::move(fn)};
}

std::vector<Theorem> build() {
  const InstanceUniverse six = labeled(6, false, true);
  const InstanceUniverse seven_connected = labeled(7, true, false);
  std::vector<UniverseSource> ncrit{universe::AllLabeled{7, true, false, 4},
                                    universe::Families{corpus::n_critical_families()}};
  std::vector<UniverseSource> unions{universe::AllLabeled{6, false, true, 1}};
  {
    std::vector<FamilySpec> members;
    for (int a = 3; a <= 4; ++a)
      for (int b = a; b <= 4; ++b) members.push_back(union_of({family::Complete{a}, family::Complete{b}}));
    members.push_back(union_of({family::Complete{3}, family::Complete{3}, family::Complete{3}}));
    unions.emplace_back(universe::Families{members});
  }
  std::vector<UniverseSource> k2_kn{universe::AllLabeled{6, false, true, 1}};
  {
    std::vector<FamilySpec> members;
    for (int m = 3; m <= 7; ++m) members.push_back(union_of({family::Complete{2}, family::Complete{m}}));
    k2_kn.emplace_back(universe::Families{members});
  }
  std::vector<UniverseSource> with_spiders{universe::AllLabeled{6, false, true, 1},
                                           universe::Families{corpus::small_spiders()}};
  std::vector<UniverseSource> trees{universe::AllLabeled{7, true, false, 3},
                                    universe::Families{corpus::small_spiders()}};
  std::vector<FamilySpec> span_members = corpus::rook_graphs();
  span_members.emplace_back(family::ProductDeleted{2});
  std::vector<UniverseSource> span{universe::AllLabeled{6, false, true, 1}, universe::Families{span_members}};

  std::vector<Theorem> t;
  t.push_back(make("T_BOUNDS", "gamma_tR(G)-2 <= gamma_tR(G+uv) <= gamma_tR(G) for every non-edge uv",
                   "no isolated vertices", false, six, check_bounds));
  t.push_back(make("T_MYN1", "gamma_t(G)-2 <= gamma_t(G+uv) <= gamma_t(G) for every non-edge uv",
                   "no isolated vertices", false, six, check_myn1));
  t.push_back(make("T_CRITEDGE_VALUES",
                   "for a critical non-edge uv every minimum TRD-function of G+uv has {f(u),f(v)} in "
                   "{{2,2},{2,1},{2,0},{1,1}}; if deg u = deg v = 1 one has f(u)=f(v)=1",
                   "no isolated vertices, n <= 12", false, six, check_critedge_values));
  t.push_back(make("T_TR3", "gamma_tR(G)=3 iff G has a universal vertex", "no isolated vertices, n >= 3", false, six,
                   check_tr3));
  t.push_back(make("T_HEN1",
                   "gamma_tR(G)=n iff G is a path, cycle, corona, subdivided star, or in G or H",
                   "connected, n >= 2", false, seven_connected, check_hen1));
  t.push_back(make("T_NCRIT",
                   "G is n-gamma_tR-edge-critical iff G is a cycle, cor(K_r) with r >= 3, a subdivided star of "
                   "order >= 7, in G, or in H_r with r not in {0,2}",
                   "connected, n >= 4", false, ncrit, check_ncrit));
  t.push_back(make("T_4CRIT", "G is 4-gamma_tR-edge-critical iff its complement is a galaxy", "no isolated vertices",
                   false, six, check_4crit));
  t.push_back(make("T_N3REG", "an (n-3)-regular graph has gamma_tR = 4 and is stable", "(n-3)-regular, n >= 6",
                   false, labeled(7, false, true, 6), check_n3reg));
  t.push_back(make("T_MYN2_ANALOGUE",
                   "no graph is 5-gamma_tR-edge-supercritical; a union of k >= 2 cliques of order >= 3 is "
                   "3k-supercritical",
                   "no isolated vertices", false, unions, check_myn2_analogue));
  t.push_back(make("T_HEN2", "gamma_t <= gamma_tR <= 2 gamma_t, with gamma_tR = gamma_t iff G is a union of K2",
                   "no isolated vertices", false, six, check_hen2));
  t.push_back(make("T_HEN3", "gamma_tR = gamma_t + 1 iff G has a universal vertex", "connected, n >= 3", false,
                   labeled(6, true, false), check_hen3));
  t.push_back(make("T_OBS_T2", "gamma_t + 2 <= gamma_tR <= 2 gamma_t", "connected, n >= 3, max degree <= n-2", false,
                   labeled(6, true, false), check_obs_t2));
  t.push_back(make("T_T2IFF",
                   "gamma_tR in {3,4} iff gamma_t = 2; gamma = 1 when gamma_tR = 3 and gamma = 2 when gamma_tR = 4",
                   "connected, n >= 3", false, labeled(6, true, false), check_t2iff));
  t.push_back(make("T_5CRIT",
                   "a 5-gamma_tR-edge-critical graph is 3-gamma_t-edge-critical or K2 u Kn; K2 u Kn (n >= 3) is "
                   "5-critical",
                   "no isolated vertices", false, k2_kn, check_5crit));
  t.push_back(make("T_ENDDEG3",
                   "if a leaf w has support x with N(x)-w not a clique, each non-edge inside N(x)-w has delta 0",
                   "no isolated vertices, such a leaf exists", false, with_spiders, check_enddeg3));
  t.push_back(make("T_STEMS", "an edge-critical tree has no stem of degree >= 3", "tree, n >= 3", false, trees,
                   check_stems));
  t.push_back(make("T_LONGLEGS", "joining the leaves of two endpaths of length >= 3 leaves gamma_tR unchanged",
                   "no isolated vertices, two such endpaths", false, with_spiders, check_longlegs));
  t.push_back(make("T_SPIDER_FORMULA", "gamma_tR of a spider with k >= 3 legs follows the leg-count formula",
                   "spider family members, k >= 3", true, families(corpus::small_spiders()), check_spider_formula));
  t.push_back(make("T_SPIDER_CRIT",
                   "a spider with k >= 3 legs is edge-critical iff all legs but one have length 2 and the last has "
                   "length 2, 4 or >= 6; critical spiders have gamma_tR = n",
                   "spider family members, k >= 3", true, families(corpus::small_spiders()), check_spider_crit));
  t.push_back(make("T_SPAN", "complete_to_critical keeps gamma_tR and ends edge-critical or supercritical",
                   "no isolated vertices, gamma_tR >= 4", false, span, check_span));
  t.push_back(make("T_KNKM", "gamma_tR(K_n box K_m) = 2 min(n, m)", "KxK family members", true,
                   families(corpus::rook_graphs()), check_knkm));
  t.push_back(make("T_DIAM2",
                   "gamma_tR(Gd(l)) = 2l+1; Gd(l) and KxK(l,l) have diameter 2 and complete to edge-critical graphs "
                   "of diameter 2 with the same gamma_tR",
                   "Gd and square KxK family members", true, families(diameter_two_examples()), check_diam2));
  t.push_back(make("T_DN", "gamma_tR(D_n) = 2n+1 and the dead vertices are exactly w_1..w_n", "D family members",
                   true, families(dead_examples()), check_dn));
  t.push_back(make("T_DN_EDGES",
                   "for n >= 3 every non-edge at some w_i of D_n is critical; in D_2 the non-edge w_1 w_2 is not",
                   "D family members, n >= 2", true, families(dead_examples()), check_dn_edges));
  t.push_back(make("T_RD_DEADPAIR", "joining two Roman-dead vertices leaves gamma_R unchanged", "n >= 2", false, six,
                   check_rd_deadpair));
  return t;
}

}  // namespace

const std::vector<Theorem>& theorems() {
  static const std::vector<Theorem> table = build();
  return table;
}

}  // namespace detail

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const auto& t : detail::theorems()) out.push_back(t.info);
    return out;
  }();
  return infos;
}

const TheoremInfo& find_theorem(std::string_view id) {
  for (const auto& info : theorem_registry())
    if (info.id == id) return info;
  throw Error(Errc::UnknownTheorem, "no theorem named '" + std::string(id) + "'");
}

}  // namespace trd
