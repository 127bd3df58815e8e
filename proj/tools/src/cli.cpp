#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "edge_list.hpp"
#include "json.hpp"
#include "trd/criticality.hpp"
#include "trd/error.hpp"
#include "trd/families.hpp"
#include "trd/graph6.hpp"
#include "trd/verify.hpp"

namespace trd::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::string graph6;
  std::string edges_file;
  std::vector<std::string> families;
  int all_labeled = 0;
  int min_n = 1;
  bool connected = false;
  bool no_isolated = false;
  std::string random;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string format = "json";
  bool dot = false;
  std::uint64_t budget = 0;
  std::string id;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SolveOptions solve_options(const Config& c) {
  SolveOptions o;
  if (c.budget > 0) o.node_budget = c.budget;
  return o;
}

// Exactly one of --graph6, --edges, --family.
Graph read_graph(const Config& c) {
  const int given = !c.graph6.empty() + !c.edges_file.empty() + !c.families.empty();
  if (given != 1) throw UsageError("give exactly one of --graph6, --edges, --family");
  if (c.families.size() > 1) throw UsageError("this command takes a single --family");
  if (!c.graph6.empty()) return graph6_decode(c.graph6);
  if (!c.edges_file.empty()) return read_edge_list_file(c.edges_file);
  return generate(parse_family(c.families.front()));
}

universe::RandomGnp parse_random(const std::string& text, std::uint64_t seed) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
  if (parts.size() != 3) throw UsageError("--random expects count,n,p");
  universe::RandomGnp r;
  try {
    r.count = std::stoi(parts[0]);
    r.n = std::stoi(parts[1]);
    r.p = std::stod(parts[2]);
  } catch (const std::exception&) {
    throw UsageError("--random expects count,n,p");
  }
  r.seed = seed;
  return r;
}

// Universe from the flags, in the fixed order labelled, random, families,
// explicit graphs. Empty when no universe flag was given.
InstanceUniverse read_universe(const Config& c) {
  InstanceUniverse u;
  if (c.all_labeled > 0) u.sources.emplace_back(universe::AllLabeled{c.all_labeled, c.connected, c.no_isolated, c.min_n});
  if (!c.random.empty()) u.sources.emplace_back(parse_random(c.random, c.seed));
  if (!c.families.empty()) {
    universe::Families f;
    for (const auto& text : c.families) f.members.push_back(parse_family(text));
    u.sources.emplace_back(std::move(f));
  }
  if (!c.graph6.empty()) u.sources.emplace_back(universe::GraphList{"graph6", {graph6_decode(c.graph6)}});
  if (!c.edges_file.empty())
    u.sources.emplace_back(universe::GraphList{c.edges_file, {read_edge_list_file(c.edges_file)}});
  return u;
}

Json vertex_list(VertexSet s) {
  Json arr = Json::array();
  for (Vertex v : s) arr.push_back(v);
  return arr;
}

Json weights(const WeightFunction& f) {
  Json arr = Json::array();
  for (auto x : f.values()) arr.push_back(static_cast<int>(x));
  return arr;
}

std::string digits(const WeightFunction& f) {
  std::string s;
  for (auto x : f.values()) s.push_back(static_cast<char>('0' + x));
  return s;
}

std::string to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (Edge e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

bool tsv(const Config& c) { return c.format == "tsv"; }

void emit(std::ostream& out, const Config& c, const Json& j) {
  if (!tsv(c)) {
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) {
    out << key << '\t';
    if (value.is_string())
      out << value.get<std::string>();
    else if (value.is_array()) {
      bool first = true;
      for (const auto& x : value) {
        out << (first ? "" : ",") << (x.is_string() ? x.get<std::string>() : x.dump());
        first = false;
      }
    } else
      out << value.dump();
    out << '\n';
  }
}

int run_compute(const Config& c, std::ostream& out) {
  const Graph g = read_graph(c);
  const SolveOptions o = solve_options(c);
  const SolveResult tr = gamma_tR(g, o);
  const SolveResult r = gamma_R(g, o);
  Json j;
  j["graph6"] = graph6_encode(g);
  j["n"] = g.order();
  j["m"] = g.size();
  j["gamma_tR"] = tr.value;
  if (tsv(c))
    j["witness"] = digits(tr.witness);
  else
    j["witness"] = weights(tr.witness);
  j["gamma_R"] = r.value;
  j["gamma_t"] = gamma_t(g, o).value;
  j["gamma"] = gamma(g, o).value;
  j["dead_vertices"] = vertex_list(dead_vertices(g, DominationMode::total_roman, o));
  j["nodes_explored"] = tr.nodes_explored;
  emit(out, c, j);
  return kOk;
}

int run_profile(const Config& c, std::ostream& out) {
  const Graph g = read_graph(c);
  const EdgeProfile p = edge_profile(g, c.jobs, solve_options(c));
  if (tsv(c)) {
    out << "u\tv\tdelta\n";
    for (const auto& d : p.deltas) out << d.edge.u << '\t' << d.edge.v << '\t' << d.delta << '\n';
    return kOk;
  }
  Json j;
  j["graph6"] = graph6_encode(g);
  j["base_value"] = p.base_value;
  j["classification"] = std::string(to_string(p.classification));
  Json deltas = Json::array();
  for (const auto& d : p.deltas) {
    Json item;
    item["u"] = d.edge.u;
    item["v"] = d.edge.v;
    item["delta"] = d.delta;
    deltas.push_back(std::move(item));
  }
  j["deltas"] = std::move(deltas);
  emit(out, c, j);
  return kOk;
}

int run_classify(const Config& c, std::ostream& out) {
  const Graph g = read_graph(c);
  const EdgeProfile p = edge_profile(g, c.jobs, solve_options(c));
  Json j;
  j["graph6"] = graph6_encode(g);
  j["gamma_tR"] = p.base_value;
  j["classification"] = std::string(to_string(p.classification));
  emit(out, c, j);
  return kOk;
}

int run_generate(const Config& c, std::ostream& out) {
  if (c.families.size() != 1) throw UsageError("generate needs exactly one --family");
  const FamilySpec spec = parse_family(c.families.front());
  const Graph g = generate(spec);
  if (tsv(c)) {
    out << graph6_encode(g) << '\n';
    if (c.dot) out << to_dot(g);
    return kOk;
  }
  Json j;
  j["family"] = to_string(spec);
  j["graph6"] = graph6_encode(g);
  j["n"] = g.order();
  j["m"] = g.size();
  if (c.dot) j["dot"] = to_dot(g);
  emit(out, c, j);
  return kOk;
}

int run_recognize(const Config& c, std::ostream& out) {
  const Graph g = read_graph(c);
  const GraphMetrics mt = metrics(g);
  const bool connected = mt.components.size() == 1;
  Json j;
  j["graph6"] = graph6_encode(g);
  j["connected"] = connected;
  j["diameter"] = mt.diameter ? Json(*mt.diameter) : Json(nullptr);
  j["universal_vertex"] = mt.universal_vertex ? Json(*mt.universal_vertex) : Json(nullptr);
  if (connected && g.order() >= 2) {
    const Hen1Class h = hen1_classify(g);
    j["order_n_class"] = std::string(to_string(h.kind));
    j["r"] = h.r ? Json(*h.r) : Json(nullptr);
  } else {
    j["order_n_class"] = nullptr;
    j["r"] = nullptr;
  }
  j["predicted_n_critical"] = connected && g.order() >= 4 ? Json(predict_n_critical(g)) : Json(nullptr);
  j["tree"] = is_tree(g);
  j["galaxy"] = is_galaxy(g);
  j["complement_galaxy"] = is_galaxy(complement(g));
  j["corona"] = is_corona(g);
  j["subdivided_star"] = is_subdivided_star(g);
  j["union_of_k2"] = is_union_of_k2(g);
  j["k2_plus_complete"] = is_k2_plus_complete(g);
  j["union_of_cliques"] = is_union_of_complete(g, 2, 3);
  emit(out, c, j);
  return kOk;
}

int run_complete(const Config& c, std::ostream& out) {
  const Graph g = read_graph(c);
  const SolveOptions o = solve_options(c);
  const Graph h = complete_to_critical(g, o);
  const EdgeProfile p = edge_profile(h, c.jobs, o);
  Json added = Json::array();
  for (Edge e : h.edges())
    if (!g.adjacent(e.u, e.v)) added.push_back(Json::array({e.u, e.v}));
  Json j;
  j["input"] = graph6_encode(g);
  j["graph6"] = graph6_encode(h);
  j["gamma_tR"] = p.base_value;
  j["classification"] = std::string(to_string(p.classification));
  j["added_edges"] = std::move(added);
  if (tsv(c)) {
    Json flat = Json::array();
    for (const auto& e : j["added_edges"]) flat.push_back(std::to_string(e[0].get<int>()) + "-" + std::to_string(e[1].get<int>()));
    j["added_edges"] = std::move(flat);
  }
  emit(out, c, j);
  return kOk;
}

void emit_reports(std::ostream& out, const Config& c, const std::vector<VerificationReport>& reports, bool single) {
  if (tsv(c))
    out << to_tsv(reports);
  else
    out << (single ? to_json(reports.front()) : to_json(reports)) << '\n';
}

VerifyOptions verify_options(const Config& c) { return {c.jobs, solve_options(c)}; }

int run_verify(const Config& c, std::ostream& out) {
  const InstanceUniverse u = read_universe(c);
  std::vector<VerificationReport> reports;
  if (c.id.empty()) {
    if (!u.sources.empty()) throw UsageError("a universe needs a theorem id");
    reports = verify_all(verify_options(c));
  } else if (u.sources.empty()) {
    reports.push_back(verify_theorem(c.id, verify_options(c)));
  } else {
    reports.push_back(verify_theorem(c.id, u, verify_options(c)));
  }
  emit_reports(out, c, reports, !c.id.empty());
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.outcome == Outcome::pass; });
  return ok ? kOk : kFailed;
}

std::string question_id(const std::string& text) {
  if (text == "Q1") return "Q1_supercritical";
  if (text == "Q2") return "Q2_dead_in_critical";
  return text;
}

int run_hunt(const Config& c, std::ostream& out, std::ostream& err) {
  const std::string q = question_id(c.id);
  InstanceUniverse u = read_universe(c);
  if (u.sources.empty()) u = default_hunt_universe(q);
  const VerificationReport r = hunt_counterexamples(q, u, verify_options(c));
  emit_reports(out, c, {r}, true);
  if (r.counterexamples.empty()) {
    err << "no counterexample found in universe (" << r.instances_checked << " instances)\n";
    return kOk;
  }
  err << r.counterexamples.size() << (r.counterexamples.size() == kMaxCounterexamples ? "+" : "")
      << " counterexample(s) found\n";
  return kFailed;
}

void add_graph_input(CLI::App* sub, Config& c) {
  sub->add_option("--graph6", c.graph6, "graph6 string");
  sub->add_option("--edges", c.edges_file, "edge-list file: 'n m' then one 'u v' per line");
  sub->add_option("--family", c.families, "family member, e.g. \"spider(2,2,4)\"")->take_last();
}

void add_universe(CLI::App* sub, Config& c) {
  sub->add_option("--graph6", c.graph6, "a single graph6 instance");
  sub->add_option("--edges", c.edges_file, "a single edge-list instance");
  sub->add_option("--family", c.families, "family member (repeatable)");
  sub->add_option("--all-labeled", c.all_labeled, "every labelled graph up to this order")->check(CLI::Range(1, 7));
  sub->add_option("--min-n", c.min_n, "smallest order for --all-labeled")->check(CLI::Range(1, 7));
  sub->add_flag("--connected", c.connected, "connected graphs only (--all-labeled)");
  sub->add_flag("--no-isolated", c.no_isolated, "no isolated vertices (--all-labeled)");
  sub->add_option("--random", c.random, "count,n,p random G(n,p) graphs");
}

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("--jobs", c.jobs, "worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);
  sub->add_option("--format", c.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  sub->add_option("--seed", c.seed, "seed for --random");
  sub->add_option("--budget", c.budget, "search node budget per solve");
  sub->add_flag("--dot", c.dot, "also emit DOT (generate)");
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::UnknownTheorem:
    case Errc::UnknownQuestion:
    case Errc::IncompatibleUniverse:
      return kUsage;
    default:
      return kInputError;
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Total Roman domination toolkit", "trd"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "gamma_tR with a witness, plus gamma_R, gamma_t, gamma and dead vertices");
  auto* profile = app.add_subcommand("profile", "delta of gamma_tR for every non-edge");
  auto* classify = app.add_subcommand("classify", "edge-critical, supercritical, stable, mixed or complete");
  auto* gen = app.add_subcommand("generate", "build a family member");
  auto* recognize = app.add_subcommand("recognize", "structural recognizers");
  auto* verify = app.add_subcommand("verify", "check a registered theorem (all of them without an id)");
  auto* hunt = app.add_subcommand("hunt", "search for counterexamples to Q1 or Q2");
  auto* complete = app.add_subcommand("complete-critical", "add non-edges until edge-critical");

  for (auto* sub : {compute, profile, classify, recognize, complete}) add_graph_input(sub, c);
  gen->add_option("--family", c.families, "family member")->take_last();
  for (auto* sub : {verify, hunt}) add_universe(sub, c);
  verify->add_option("theorem", c.id, "theorem id, e.g. T_4CRIT");
  hunt->add_option("question", c.id, "Q1 / Q1_supercritical or Q2 / Q2_dead_in_critical")->required();
  for (auto* sub : {compute, profile, classify, gen, recognize, verify, hunt, complete}) add_common(sub, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (compute->parsed()) return run_compute(c, out);
    if (profile->parsed()) return run_profile(c, out);
    if (classify->parsed()) return run_classify(c, out);
    if (gen->parsed()) return run_generate(c, out);
    if (recognize->parsed()) return run_recognize(c, out);
    if (verify->parsed()) return run_verify(c, out);
    if (hunt->parsed()) return run_hunt(c, out, err);
    if (complete->parsed()) return run_complete(c, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace trd::cli
