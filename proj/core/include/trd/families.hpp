#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "trd/family_spec.hpp"
#include "trd/graph.hpp"

namespace trd {

/**
 * Builds a family member with a fixed labelling:
 *
 *  - path / cycle: 0-1-...-(n-1) (cycle closes n-1 to 0)
 *  - star(k): centre 0, leaves 1..k
 *  - substar(k): centre 0; the i-th leg (i = 1..k) is 2i-1 then leaf 2i
 *  - doublestar(a,b): centres 0 and 1, leaves of 0 then leaves of 1
 *  - cor(F): F on 0..m-1, leaf of vertex i is m+i
 *  - spider(l_1..l_k): head 0, legs in ascending length, each leg's
 *    vertices consecutive starting next to the head
 *  - familyG(k1,k2): cycle v1..v4 = 0..3; each pendant P2 is (x, leaf)
 *    with x joined to v1 (k1 of them) then to v2 (k2 of them)
 *  - familyH(a,b,r): centre path 0..r+1, then a legs (u, leaf) on 0 and
 *    b legs on r+1
 *  - galaxy: stars one after another, centre first
 *  - KxK(n,m): v_ij = i*m + j, adjacent iff same row or same column
 *  - Gd(l): KxK(l+1,l+1) minus the deleted first-column vertices,
 *    survivors renumbered in row-major order
 *  - D(n): c = 0, copy i (0-based) has u = 3i+1, v = 3i+2, w = 3i+3
 *  - union: parts side by side in order
 *
 * Throws InvalidSpec.
 */
Graph generate(const FamilySpec& spec);

/// Label of w_i (1-based i) in D(n).
constexpr Vertex dead_example_w(int i) { return 3 * i; }

/// Predicted gamma_tR of Sp(legs) for k >= 3 legs: n when at least k-1
/// legs have length 2, n-k+y+1 when 1 <= y < k-1, and n-k+2 when y = 0,
/// with y the number of length-2 legs. Throws TooFewLegs.
int spider_gamma_formula(std::span<const int> legs);

/// Whether Sp(legs) is edge-critical: all legs but the longest have length
/// 2 and the longest has length 2, 4, or at least 6. Throws TooFewLegs.
bool spider_is_critical(std::span<const int> legs);

enum class Hen1Kind { PathOrCycle, Corona, SubdividedStar, FamilyG, FamilyH, None };

std::string_view to_string(Hen1Kind k) noexcept;

struct Hen1Class {
  Hen1Kind kind = Hen1Kind::None;
  /// Subdivision count of the centre edge, FamilyH only.
  std::optional<int> r;

  friend bool operator==(const Hen1Class&, const Hen1Class&) = default;
};

/// Which of the order-n total Roman domination classes a connected graph
/// belongs to. Clause priority when several apply: path/cycle, subdivided
/// star, corona, G, H. Throws Disconnected, TooSmall (n < 2).
Hen1Class hen1_classify(const Graph& g);

/// At least two components, each a star K_{1,s} with s >= 1.
bool is_galaxy(const Graph& g);

/// Structural prediction that a connected graph of order n >= 4 has
/// gamma_tR = n and is edge-critical: cycles, cor(K_r) for r >= 3,
/// subdivided stars of order >= 7, members of G, and members of H with
/// r not in {0, 2}. Throws Disconnected, TooSmall.
bool predict_n_critical(const Graph& g);

// Structural predicates used by recognizers and the theorem checks.

bool is_path_or_cycle(const Graph& g);
bool is_cycle_graph(const Graph& g);
bool is_subdivided_star(const Graph& g);
/// Corona of some graph; on success `inner` receives the non-leaf vertices.
bool is_corona(const Graph& g, VertexSet* inner = nullptr);
bool is_family_g(const Graph& g);
/// Member of H; returns r.
std::optional<int> family_h_r(const Graph& g);

/// Every component complete; `min_parts` components at least, each of
/// order at least `min_order`.
bool is_union_of_complete(const Graph& g, int min_parts, int min_order);
/// Disjoint union of copies of K_2.
bool is_union_of_k2(const Graph& g);
/// K_2 plus K_m for some m >= 3.
bool is_k2_plus_complete(const Graph& g);
/// Every vertex has degree d.
bool is_regular(const Graph& g, int d);

}  // namespace trd
