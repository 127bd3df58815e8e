#include "trd/families.hpp"

#include <algorithm>
#include <string>

#include "trd/error.hpp"

namespace trd {

namespace {

using namespace family;

class EdgeBuilder {
 public:
  void add(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
  Graph build(int n) const { return Graph::from_edges(n, edges_); }

 private:
  std::vector<Edge> edges_;
};

Graph make_path(int n) {
  EdgeBuilder b;
  for (Vertex v = 0; v + 1 < n; ++v) b.add(v, v + 1);
  return b.build(n);
}

Graph make_cycle(int n) {
  EdgeBuilder b;
  for (Vertex v = 0; v < n; ++v) b.add(v, (v + 1) % n);
  return b.build(n);
}

Graph make_complete(int n) {
  EdgeBuilder b;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add(u, v);
  return b.build(n);
}

Graph make_rook(int rows, int cols, const std::vector<bool>& keep) {
  std::vector<int> label(static_cast<std::size_t>(rows * cols), -1);
  int next = 0;
  for (int i = 0; i < rows * cols; ++i)
    if (keep[i]) label[i] = next++;
  EdgeBuilder b;
  for (int a = 0; a < rows * cols; ++a) {
    for (int c = a + 1; c < rows * cols; ++c) {
      if (label[a] < 0 || label[c] < 0) continue;
      if (a / cols == c / cols || a % cols == c % cols) b.add(label[a], label[c]);
    }
  }
  return b.build(next);
}

Graph generate_kind(const FamilySpec& spec) {
  return std::visit(
      [](const auto& k) -> Graph {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Path>) {
          return make_path(k.n);
        } else if constexpr (std::is_same_v<T, Cycle>) {
          return make_cycle(k.n);
        } else if constexpr (std::is_same_v<T, Complete>) {
          return make_complete(k.n);
        } else if constexpr (std::is_same_v<T, Star>) {
          EdgeBuilder b;
          for (int i = 1; i <= k.k; ++i) b.add(0, i);
          return b.build(k.k + 1);
        } else if constexpr (std::is_same_v<T, SubdividedStar>) {
          EdgeBuilder b;
          for (int i = 1; i <= k.k; ++i) {
            b.add(0, 2 * i - 1);
            b.add(2 * i - 1, 2 * i);
          }
          return b.build(2 * k.k + 1);
        } else if constexpr (std::is_same_v<T, DoubleStar>) {
          EdgeBuilder b;
          b.add(0, 1);
          for (int i = 0; i < k.a; ++i) b.add(0, 2 + i);
          for (int i = 0; i < k.b; ++i) b.add(1, 2 + k.a + i);
          return b.build(2 + k.a + k.b);
        } else if constexpr (std::is_same_v<T, Corona>) {
          const Graph inner = generate(*k.inner);
          const int m = inner.order();
          EdgeBuilder b;
          for (Edge e : inner.edges()) b.add(e.u, e.v);
          for (Vertex v = 0; v < m; ++v) b.add(v, m + v);
          return b.build(2 * m);
        } else if constexpr (std::is_same_v<T, Spider>) {
          std::vector<int> legs = k.legs;
          std::sort(legs.begin(), legs.end());
          EdgeBuilder b;
          int next = 1;
          for (int len : legs) {
            Vertex prev = 0;
            for (int step = 0; step < len; ++step) {
              b.add(prev, next);
              prev = next++;
            }
          }
          return b.build(next);
        } else if constexpr (std::is_same_v<T, FamilyG>) {
          EdgeBuilder b;
          for (Vertex v = 0; v < 4; ++v) b.add(v, (v + 1) % 4);
          int next = 4;
          for (int i = 0; i < k.k1 + k.k2; ++i) {
            const Vertex anchor = i < k.k1 ? 0 : 1;
            b.add(anchor, next);
            b.add(next, next + 1);
            next += 2;
          }
          return b.build(next);
        } else if constexpr (std::is_same_v<T, FamilyH>) {
          const int m = k.r + 2;
          EdgeBuilder b;
          for (Vertex v = 0; v + 1 < m; ++v) b.add(v, v + 1);
          int next = m;
          for (int i = 0; i < k.a + k.b; ++i) {
            const Vertex anchor = i < k.a ? 0 : m - 1;
            b.add(anchor, next);
            b.add(next, next + 1);
            next += 2;
          }
          return b.build(next);
        } else if constexpr (std::is_same_v<T, Galaxy>) {
          EdgeBuilder b;
          int next = 0;
          for (int s : k.sizes) {
            for (int i = 1; i <= s; ++i) b.add(next, next + i);
            next += s + 1;
          }
          return b.build(next);
        } else if constexpr (std::is_same_v<T, CartesianComplete>) {
          return make_rook(k.n, k.m, std::vector<bool>(static_cast<std::size_t>(k.n * k.m), true));
        } else if constexpr (std::is_same_v<T, ProductDeleted>) {
          const int side = k.l + 1;
          std::vector<bool> keep(static_cast<std::size_t>(side * side), true);
          // Rows j (1-based) with floor(l/2)+2 <= j <= l+1 lose their first-column vertex.
          for (int j = k.l / 2 + 2; j <= side; ++j) keep[(j - 1) * side] = false;
          return make_rook(side, side, keep);
        } else if constexpr (std::is_same_v<T, DeadExample>) {
          EdgeBuilder b;
          for (int i = 0; i < k.n; ++i) {
            const Vertex u = 3 * i + 1, v = 3 * i + 2, w = 3 * i + 3;
            b.add(0, u);
            b.add(0, v);
            b.add(u, v);
            b.add(u, w);
            b.add(v, w);
          }
          return b.build(3 * k.n + 1);
        } else {
          std::vector<Graph> parts;
          for (const auto& p : k.parts) parts.push_back(generate(p));
          return disjoint_union(parts);
        }
      },
      spec.kind);
}

void require_legs(std::span<const int> legs) {
  if (legs.size() < 3)
    throw Error(Errc::TooFewLegs, "spider results need k >= 3 legs, got " + std::to_string(legs.size()));
  for (int l : legs)
    if (l < 1) throw Error(Errc::InvalidSpec, "spider legs must have length >= 1");
}

}  // namespace

Graph generate(const FamilySpec& spec) {
  validate(spec);
  return generate_kind(spec);
}

int spider_gamma_formula(std::span<const int> legs) {
  require_legs(legs);
  const int k = static_cast<int>(legs.size());
  int n = 1;
  int y = 0;
  for (int l : legs) {
    n += l;
    if (l == 2) ++y;
  }
  if (y >= k - 1) return n;
  if (y >= 1) return n - k + y + 1;
  return n - k + 2;
}

bool spider_is_critical(std::span<const int> legs) {
  require_legs(legs);
  std::vector<int> sorted(legs.begin(), legs.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i] != 2) return false;
  const int longest = sorted.back();
  return longest == 2 || longest == 4 || longest >= 6;
}

}  // namespace trd
