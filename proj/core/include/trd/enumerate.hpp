#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "trd/family_spec.hpp"
#include "trd/graph.hpp"

namespace trd {

namespace universe {

/// Every labelled graph on {0..n-1} for min_n <= n <= max_n, in order of n
/// and then of the edge bitmask (bit i is the i-th pair in graph6 order).
struct AllLabeled {
  int max_n = 0;
  bool connected_only = false;
  bool no_isolated = false;
  int min_n = 1;
};

struct Families {
  std::vector<FamilySpec> members;
};

/// G(n, p) samples; fully determined by the seed.
struct RandomGnp {
  int count = 0;
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
};

/// Graphs supplied directly, e.g. read from a graph6 file.
struct GraphList {
  std::string label;
  std::vector<Graph> graphs;
};

}  // namespace universe

using UniverseSource =
    std::variant<universe::AllLabeled, universe::Families, universe::RandomGnp, universe::GraphList>;

/// A finite stream of instances: the concatenation of its sources.
struct InstanceUniverse {
  std::vector<UniverseSource> sources;

  InstanceUniverse() = default;
  template <typename S>
    requires std::is_constructible_v<UniverseSource, S&&> && (!std::is_same_v<std::decay_t<S>, InstanceUniverse>)
  InstanceUniverse(S&& s) {  // NOLINT(google-explicit-constructor)
    sources.emplace_back(std::forward<S>(s));
  }
  InstanceUniverse(std::vector<UniverseSource> s) : sources(std::move(s)) {}  // NOLINT(google-explicit-constructor)
};

/// AllLabeled sources are limited to this order (2^21 graphs at n = 7).
inline constexpr int kMaxLabeledOrder = 7;

/// Throws UniverseTooLarge or InvalidSpec.
void validate(const InstanceUniverse& u);

/// One graph of a universe, with the family it came from when known.
struct Instance {
  Graph graph;
  std::optional<FamilySpec> family;
};

/// Streams instances in batches of at most `batch` to `sink`, in a fixed
/// order. Returning false from `sink` stops the stream.
void for_each_batch(const InstanceUniverse& u, std::size_t batch,
                    const std::function<bool(std::vector<Instance>&)>& sink);

/// Materializes the whole stream. Intended for small universes.
std::vector<Graph> enumerate_graphs(const InstanceUniverse& u);

/// One G(n, p) draw. Each pair is kept when the next raw engine output is
/// below p * 2^64, so streams agree across standard library vendors.
Graph random_gnp(int n, double p, std::mt19937_64& rng);

}  // namespace trd
