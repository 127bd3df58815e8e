#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "trd/enumerate.hpp"
#include "trd/solver.hpp"

namespace trd {

struct Counterexample {
  std::string graph6;
  std::string detail;
};

enum class Outcome { pass, fail };

std::string_view to_string(Outcome o) noexcept;

struct VerificationReport {
  std::string theorem_id;
  InstanceUniverse universe;
  std::uint64_t instances_checked = 0;
  Outcome outcome = Outcome::pass;
  /// At most kMaxCounterexamples entries, in stream order.
  std::vector<Counterexample> counterexamples;
};

inline constexpr std::size_t kMaxCounterexamples = 20;

struct VerifyOptions {
  /// Worker threads for per-instance checks; 0 = hardware concurrency.
  int jobs = 1;
  SolveOptions solve;
};

/// A registry entry: what is claimed, under which hypotheses, and the
/// universe it is checked over by default.
struct TheoremInfo {
  std::string id;
  std::string statement;
  std::string hypotheses;
  /// Instances must come from family sources (and carry their spec).
  bool needs_family = false;
  InstanceUniverse default_universe;
};

const std::vector<TheoremInfo>& theorem_registry();
/// Throws UnknownTheorem.
const TheoremInfo& find_theorem(std::string_view id);

/// Checks the claim on every instance that meets the theorem's hypotheses
/// (iff statements in both directions). Throws UnknownTheorem,
/// IncompatibleUniverse, UniverseTooLarge.
VerificationReport verify_theorem(std::string_view id, const InstanceUniverse& universe,
                                  const VerifyOptions& options = {});
/// Over the theorem's default universe.
VerificationReport verify_theorem(std::string_view id, const VerifyOptions& options = {});
/// Every registered theorem over its default universe, in registry order.
std::vector<VerificationReport> verify_all(const VerifyOptions& options = {});

/// Open-question searches. "Q1_supercritical" reports supercritical graphs
/// that are not a union of >= 2 complete graphs of order >= 3;
/// "Q2_dead_in_critical" reports edge-critical graphs with a dead vertex.
/// Passing only means nothing was found in the universe.
/// Throws UnknownQuestion.
VerificationReport hunt_counterexamples(std::string_view question_id, const InstanceUniverse& universe,
                                        const VerifyOptions& options = {});
const std::vector<std::string>& question_ids();
/// Default search universe of a question. Throws UnknownQuestion.
InstanceUniverse default_hunt_universe(std::string_view question_id);

/// Named instance corpora shared by the registry defaults and the tests.
namespace corpus {
/// Sp(l_1..l_k), k in {3,4}, 1 <= l_i <= 4, each multiset once.
std::vector<FamilySpec> small_spiders();
/// C_4..C_9, cor(K_r) r = 2..5, subdivided stars of order 5, 7, 9,
/// G with k1 + k2 <= 3, H with a, b <= 2 and r <= 5.
std::vector<FamilySpec> n_critical_families();
/// KxK(n,m) for 2 <= n <= m <= 4.
std::vector<FamilySpec> rook_graphs();
}  // namespace corpus

/// Stable-key-order JSON: {theorem_id, universe, instances_checked,
/// outcome, counterexamples: [{graph6, detail}]}.
std::string to_json(const VerificationReport& report, int indent = 2);
std::string to_json(const std::vector<VerificationReport>& reports, int indent = 2);
/// One tab-separated line per report: id, outcome, instances, counterexamples.
std::string to_tsv(const std::vector<VerificationReport>& reports);
std::string describe(const InstanceUniverse& universe);

}  // namespace trd
