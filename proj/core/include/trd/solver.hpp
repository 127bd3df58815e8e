#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "trd/graph.hpp"

namespace trd {

/// f: V -> {0,1,2}. For the set invariants (gamma, gamma_t) the witness is
/// the 0/1 indicator of the set.
class WeightFunction {
 public:
  WeightFunction() = default;
  explicit WeightFunction(std::vector<std::uint8_t> values);
  WeightFunction(std::initializer_list<int> values);

  int size() const { return static_cast<int>(values_.size()); }
  int operator[](Vertex v) const { return values_[static_cast<std::size_t>(v)]; }
  std::span<const std::uint8_t> values() const { return values_; }

  int weight() const;
  /// V_f^i for i in {0,1,2}.
  VertexSet level(int i) const;
  /// V_f^1 | V_f^2
  VertexSet positive() const { return level(1) | level(2); }

  friend auto operator<=>(const WeightFunction&, const WeightFunction&) = default;
  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

 private:
  std::vector<std::uint8_t> values_;
};

enum class Invariant { gamma, gamma_t, gamma_R, gamma_tR };

std::string_view to_string(Invariant inv) noexcept;

/// Which minimum functions a query ranges over.
enum class DominationMode { total_roman, roman };

struct SolveOptions {
  /// Orders above this are refused with TooLarge.
  int max_order = 24;
  /// Search nodes before BudgetExceeded is thrown.
  std::uint64_t node_budget = 200'000'000;
};

struct SolveResult {
  Invariant invariant = Invariant::gamma_tR;
  int value = 0;
  WeightFunction witness;
  std::uint64_t nodes_explored = 0;
};

enum class TrdViolation { none, roman, total };

struct TrdVerdict {
  bool valid = true;
  TrdViolation violation = TrdViolation::none;
  /// First offending vertex when invalid.
  std::optional<Vertex> vertex;

  explicit operator bool() const { return valid; }
};

/// Checks both conditions: every 0-vertex has a 2-neighbour, and no vertex
/// of V_f^+ is isolated in G[V_f^+]. Throws LengthMismatch.
TrdVerdict is_trd_function(const Graph& g, const WeightFunction& f);
/// Roman condition only. Throws LengthMismatch.
TrdVerdict is_rd_function(const Graph& g, const WeightFunction& f);

/// Exact total Roman domination number by branch and bound. The witness is
/// the lexicographically smallest minimum TRD-function.
/// Throws IsolatedVertex, TooSmall (n < 2), TooLarge, BudgetExceeded.
SolveResult gamma_tR(const Graph& g, const SolveOptions& options = {});
/// Value only; skips the lexicographic witness pass.
int gamma_tR_value(const Graph& g, const SolveOptions& options = {});
/// Roman domination number; any graph. Witness is lexicographically smallest.
SolveResult gamma_R(const Graph& g, const SolveOptions& options = {});
int gamma_R_value(const Graph& g, const SolveOptions& options = {});
/// Domination number; any graph.
SolveResult gamma(const Graph& g, const SolveOptions& options = {});
/// Total domination number. Throws IsolatedVertex.
SolveResult gamma_t(const Graph& g, const SolveOptions& options = {});

/// True when some TRD-function has weight strictly below `bound`.
bool has_trd_function_below(const Graph& g, int bound, const SolveOptions& options = {});

struct ClassicalNumbers {
  int gamma = 0;
  int gamma_t = 0;
  int gamma_R = 0;
};

/// (gamma, gamma_t, gamma_R). Throws IsolatedVertex since gamma_t needs it.
ClassicalNumbers classical_numbers(const Graph& g, const SolveOptions& options = {});

/// Largest order accepted by the enumeration and brute-force entry points.
inline constexpr int kEnumerationCap = 12;

/// Every minimum TRD-function, lexicographically ordered. n <= 12.
std::vector<WeightFunction> enumerate_min_trd(const Graph& g);
/// Every minimum RD-function, lexicographically ordered. n <= 12.
std::vector<WeightFunction> enumerate_min_rd(const Graph& g);

/// Vertices assigned 0 by every minimum function of the given kind.
/// Decided per vertex by re-solving with that vertex forced positive.
VertexSet dead_vertices(const Graph& g, DominationMode mode, const SolveOptions& options = {});

/// Exhaustive scan of all 3^n weight vectors through is_trd_function.
/// Test oracle only. Throws IsolatedVertex, TooSmall, TooLarge (n > 12).
int brute_oracle_gamma_tR(const Graph& g);

}  // namespace trd
