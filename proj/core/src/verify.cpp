#include "trd/verify.hpp"

#include <algorithm>

#include "registry.hpp"
#include "trd/criticality.hpp"
#include "trd/error.hpp"
#include "trd/families.hpp"
#include "trd/graph6.hpp"
#include "trd/parallel.hpp"

namespace trd {

namespace {

constexpr std::size_t kBatch = 4096;

using detail::Check;

void require_family_sources(const std::string& id, const InstanceUniverse& u) {
  for (const auto& s : u.sources)
    if (!std::holds_alternative<universe::Families>(s))
      throw Error(Errc::IncompatibleUniverse, id + " is stated for family members; use a family universe");
}

VerificationReport run(const std::string& id, const InstanceUniverse& u, const VerifyOptions& options,
                       const detail::CheckFn& check) {
  VerificationReport report{id, u, 0, Outcome::pass, {}};
  std::vector<Check> results;
  for_each_batch(u, kBatch, [&](std::vector<Instance>& batch) {
    results.assign(batch.size(), Check::skip());
    parallel_for(batch.size(), options.jobs, [&](std::size_t i) { results[i] = check(batch[i], options.solve); });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!results[i].counted) continue;
      ++report.instances_checked;
      if (results[i].violation.empty()) continue;
      report.outcome = Outcome::fail;
      if (report.counterexamples.size() < kMaxCounterexamples)
        report.counterexamples.push_back({graph6_encode(batch[i].graph), std::move(results[i].violation)});
    }
    return true;
  });
  return report;
}

Check hunt_supercritical(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (g.order() < 2 || g.has_isolated_vertex()) return Check::skip();
  const EdgeProfile p = edge_profile(g, 1, o);
  if (p.classification != EdgeClass::supercritical || is_union_of_complete(g, 2, 3)) return Check::ok();
  return Check::bad("supercritical with gamma_tR=" + std::to_string(p.base_value) +
                    " but not a union of >= 2 cliques of order >= 3");
}

Check hunt_dead_in_critical(const Instance& in, const SolveOptions& o) {
  const Graph& g = in.graph;
  if (g.order() < 2 || g.has_isolated_vertex()) return Check::skip();
  const int base = gamma_tR_value(g, o);
  if (!is_edge_critical(g, base, o)) return Check::ok();
  const VertexSet dead = dead_vertices(g, DominationMode::total_roman, o);
  if (dead.empty()) return Check::ok();
  return Check::bad("edge-critical with gamma_tR=" + std::to_string(base) + " and dead vertex " +
                    std::to_string(dead.front()));
}

}  // namespace

std::string_view to_string(Outcome o) noexcept { return o == Outcome::pass ? "pass" : "fail"; }

VerificationReport verify_theorem(std::string_view id, const InstanceUniverse& universe,
                                  const VerifyOptions& options) {
  for (const auto& t : detail::theorems()) {
    if (t.info.id != id) continue;
    validate(universe);
    if (t.info.needs_family) require_family_sources(t.info.id, universe);
    return run(t.info.id, universe, options, t.check);
  }
  throw Error(Errc::UnknownTheorem, "no theorem named '" + std::string(id) + "'");
}

VerificationReport verify_theorem(std::string_view id, const VerifyOptions& options) {
  return verify_theorem(id, find_theorem(id).default_universe, options);
}

std::vector<VerificationReport> verify_all(const VerifyOptions& options) {
  std::vector<VerificationReport> out;
  for (const auto& t : detail::theorems()) out.push_back(run(t.info.id, t.info.default_universe, options, t.check));
  return out;
}

const std::vector<std::string>& question_ids() {
  static const std::vector<std::string> ids{"Q1_supercritical", "Q2_dead_in_critical"};
  return ids;
}

InstanceUniverse default_hunt_universe(std::string_view question_id) {
  if (question_id == "Q1_supercritical") return universe::AllLabeled{6, false, true, 1};
  if (question_id == "Q2_dead_in_critical")
    return std::vector<UniverseSource>{universe::AllLabeled{6, false, true, 1},
                                       universe::Families{corpus::small_spiders()}};
  throw Error(Errc::UnknownQuestion, "no question named '" + std::string(question_id) + "'");
}

VerificationReport hunt_counterexamples(std::string_view question_id, const InstanceUniverse& universe,
                                        const VerifyOptions& options) {
  const std::string id(question_id);
  if (id == "Q1_supercritical") return run(id, universe, options, hunt_supercritical);
  if (id == "Q2_dead_in_critical") return run(id, universe, options, hunt_dead_in_critical);
  throw Error(Errc::UnknownQuestion, "no question named '" + id + "'");
}

}  // namespace trd
