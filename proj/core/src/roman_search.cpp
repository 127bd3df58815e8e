#include "roman_search.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "trd/error.hpp"

namespace trd::detail {

namespace {

using Word = RomanSearch::Word;

constexpr Word bit(int v) { return Word{1} << v; }

}  // namespace

RomanSearch::RomanSearch(const Graph& g, bool total, Word forced_positive, std::uint64_t node_budget)
    : n_(g.order()),
      total_(total),
      all_(VertexSet::range(g.order()).bits()),
      forced_(forced_positive),
      budget_(node_budget) {
  for (int v = 0; v < n_; ++v) {
    adj_[v] = g.neighbors(v).bits();
    closed_[v] = adj_[v] | bit(v);
    degree_[v] = g.degree(v);
  }
}

void RomanSearch::tick() {
  if (++nodes_ > budget_)
    throw Error(Errc::BudgetExceeded, "search exceeded " + std::to_string(budget_) + " nodes");
}

RomanSearch::State RomanSearch::assign(const State& s, int v, int value) const {
  State t = s;
  switch (value) {
    case 2:
      t.two |= bit(v);
      t.covered |= adj_[v];
      t.pos_nbr |= adj_[v];
      t.weight += 2;
      break;
    case 1:
      t.one |= bit(v);
      t.pos_nbr |= adj_[v];
      t.weight += 1;
      break;
    default:
      t.zero |= bit(v);
      break;
  }
  return t;
}

// Relaxed covering bound: every undominated vertex is either made positive
// itself (cost >= 1) or gets a new 2 in its closed neighbourhood (cost 2,
// covering at most |N[w] & undominated|). Overlaps are ignored, so the
// result never exceeds the true completion cost.
int RomanSearch::cover_bound(Word undominated, Word free) const {
  const int k = std::popcount(undominated);
  if (k == 0) return 0;
  std::array<int, 66> histogram{};
  for (Word rest = free; rest != 0; rest &= rest - 1) {
    const int w = std::countr_zero(rest);
    const int c = std::popcount(closed_[w] & undominated);
    if (c > 2) ++histogram[c];
  }
  int best = k;
  int twos = 0;
  int reached = 0;
  for (int c = 65; c > 2 && reached < k; --c) {
    for (int i = 0; i < histogram[c] && reached < k; ++i) {
      ++twos;
      reached += c;
      best = std::min(best, 2 * twos + std::max(0, k - reached));
    }
  }
  return best;
}

RomanSearch::Analysis RomanSearch::analyze(const State& s, Word free) const {
  Analysis a;
  a.free = free;
  const Word pos = s.two | s.one;
  a.undominated = all_ & ~(pos | s.covered);

  for (Word rest = s.zero & a.undominated; rest != 0; rest &= rest - 1) {
    if ((adj_[std::countr_zero(rest)] & free) == 0) {
      a.dead = true;
      return a;
    }
  }
  if (total_) {
    a.lonely = pos & ~s.pos_nbr;
    for (Word rest = a.lonely; rest != 0; rest &= rest - 1) {
      if ((adj_[std::countr_zero(rest)] & free) == 0) {
        a.dead = true;
        return a;
      }
    }
  }
  const Word forced_free = free & forced_;
  a.complete = a.undominated == 0 && a.lonely == 0 && forced_free == 0;
  int extra = cover_bound(a.undominated, free);
  extra = std::max(extra, std::popcount(forced_free));
  if (a.lonely != 0) extra = std::max(extra, 1);
  a.lower_bound = s.weight + extra;
  return a;
}

RomanSearch::Assignment RomanSearch::materialize(const State& s) const {
  Assignment out(static_cast<std::size_t>(n_), 0);
  for (int v = 0; v < n_; ++v) {
    if (s.two & bit(v)) out[v] = 2;
    else if (s.one & bit(v)) out[v] = 1;
  }
  return out;
}

int RomanSearch::minimize(int upper, bool stop_at_first) {
  best_ = upper;
  stop_at_first_ = stop_at_first;
  stopped_ = false;
  best_assignment_.clear();
  minimize_from(State{});
  return best_;
}

void RomanSearch::minimize_from(const State& s) {
  tick();
  const Word free = all_ & ~(s.two | s.one | s.zero);
  const Analysis a = analyze(s, free);
  if (a.dead || a.lower_bound >= best_) return;
  if (a.complete) {
    best_ = s.weight;
    best_assignment_ = materialize(s);
    stopped_ = stop_at_first_;
    return;
  }

  auto max_degree_in = [this](Word set) {
    int pick = std::countr_zero(set);
    for (Word rest = set; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (degree_[v] > degree_[pick]) pick = v;
    }
    return pick;
  };

  int v = 0;
  std::array<int, 3> order{2, 1, 0};
  int choices = 3;
  if (const Word forced_free = free & forced_; forced_free != 0) {
    v = max_degree_in(forced_free);
    choices = 2;
  } else if (const Word open = a.undominated & free; open != 0) {
    v = max_degree_in(open);
  } else if (const Word stuck = a.undominated & s.zero; stuck != 0) {
    // Only a new 2 next to this zero can dominate it.
    const Word cands = adj_[std::countr_zero(stuck)] & free;
    v = std::countr_zero(cands);
    int best_cover = -1;
    for (Word rest = cands; rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      const int c = std::popcount(closed_[w] & a.undominated);
      if (c > best_cover) {
        best_cover = c;
        v = w;
      }
    }
  } else {
    // Everything is dominated; a positive vertex still lacks a positive
    // neighbour, and a 1 is the cheapest fix.
    v = max_degree_in(adj_[std::countr_zero(a.lonely)] & free);
    order = {1, 2, 0};
  }

  for (int i = 0; i < choices; ++i) {
    minimize_from(assign(s, v, order[i]));
    if (stopped_) return;
  }
}

void RomanSearch::enumerate(int target, const std::function<bool(const Assignment&)>& visit) {
  enumerate_from(State{}, 0, target, visit);
}

bool RomanSearch::enumerate_from(const State& s, int next, int target,
                                 const std::function<bool(const Assignment&)>& visit) {
  tick();
  const Word free = all_ & ~VertexSet::range(next).bits();
  const Analysis a = analyze(s, free);
  if (a.dead || a.lower_bound > target) return true;
  if (s.weight == target) return a.complete ? visit(materialize(s)) : true;
  if (next == n_) return true;
  for (int value = 0; value <= 2 && s.weight + value <= target; ++value) {
    if (value == 0 && (forced_ & bit(next))) continue;
    if (!enumerate_from(assign(s, next, value), next + 1, target, visit)) return false;
  }
  return true;
}

}  // namespace trd::detail
