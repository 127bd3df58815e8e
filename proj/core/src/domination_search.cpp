#include "domination_search.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "trd/error.hpp"

namespace trd::detail {

DominationSearch::DominationSearch(const Graph& g, bool total, std::uint64_t node_budget)
    : n_(g.order()), all_(VertexSet::range(g.order()).bits()), budget_(node_budget) {
  for (int v = 0; v < n_; ++v) {
    const Word open = g.neighbors(v).bits();
    reach_[v] = total ? open : open | (Word{1} << v);
    // Adjacency is symmetric, so the sources of v are its own reach.
    sources_[v] = reach_[v];
  }
}

int DominationSearch::minimize() {
  best_ = n_;
  best_set_ = all_;
  nodes_ = 0;
  search(0, 0, 0, 0);
  return best_;
}

void DominationSearch::search(Word chosen, Word excluded, Word dominated, int size) {
  if (++nodes_ > budget_)
    throw Error(Errc::BudgetExceeded, "search exceeded " + std::to_string(budget_) + " nodes");
  const Word undominated = all_ & ~dominated;
  if (undominated == 0) {
    if (size < best_) {
      best_ = size;
      best_set_ = chosen;
    }
    return;
  }
  if (size + 1 >= best_) return;

  const Word open = all_ & ~(chosen | excluded);
  int max_cover = 0;
  for (Word rest = open; rest != 0; rest &= rest - 1)
    max_cover = std::max(max_cover, std::popcount(reach_[std::countr_zero(rest)] & undominated));
  if (max_cover == 0) return;
  const int remaining = std::popcount(undominated);
  if (size + (remaining + max_cover - 1) / max_cover >= best_) return;

  int pick = -1;
  int fewest = 65;
  for (Word rest = undominated; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const int c = std::popcount(sources_[v] & open);
    if (c < fewest) {
      fewest = c;
      pick = v;
    }
  }
  if (fewest == 0) return;

  std::array<int, 64> cands{};
  int count = 0;
  for (Word rest = sources_[pick] & open; rest != 0; rest &= rest - 1) cands[count++] = std::countr_zero(rest);
  std::stable_sort(cands.begin(), cands.begin() + count, [&](int a, int b) {
    return std::popcount(reach_[a] & undominated) > std::popcount(reach_[b] & undominated);
  });

  for (int i = 0; i < count; ++i) {
    const int w = cands[i];
    search(chosen | (Word{1} << w), excluded, dominated | reach_[w], size + 1);
    excluded |= Word{1} << w;
  }
}

}  // namespace trd::detail
