#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "trd/graph.hpp"

namespace trd::detail {

/**
 * Branch and bound over weight assignments f: V -> {0,1,2}.
 *
 * With `total` set the search ranges over TRD-functions, otherwise over
 * RD-functions. Vertices in `forced_positive` may not take the value 0.
 *
 * minimize() branches on an undominated vertex of maximum degree and tries
 * 2, 1, 0. enumerate() walks vertices in index order with values 0, 1, 2 so
 * that solutions appear in lexicographic order.
 */
class RomanSearch {
 public:
  using Word = std::uint64_t;
  using Assignment = std::vector<std::uint8_t>;

  RomanSearch(const Graph& g, bool total, Word forced_positive, std::uint64_t node_budget);

  /// Minimum weight strictly below `upper`, or `upper` itself when none
  /// exists. `upper` must be the weight of a known feasible solution.
  /// With `stop_at_first` the search returns on the first improvement.
  int minimize(int upper, bool stop_at_first = false);
  /// Witness for the last improvement found by minimize(); empty if none.
  const Assignment& best_assignment() const { return best_assignment_; }

  /// Calls `visit` for every feasible assignment of weight exactly `target`
  /// in lexicographic order until it returns false.
  void enumerate(int target, const std::function<bool(const Assignment&)>& visit);

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct State {
    Word two = 0;
    Word one = 0;
    Word zero = 0;
    Word covered = 0;   // vertices with a neighbour of value 2
    Word pos_nbr = 0;   // vertices with a positive neighbour
    int weight = 0;
  };

  struct Analysis {
    bool dead = false;
    bool complete = false;
    int lower_bound = 0;
    Word free = 0;
    Word undominated = 0;
    Word lonely = 0;  // positive vertices without a positive neighbour
  };

  State assign(const State& s, int v, int value) const;
  Analysis analyze(const State& s, Word free) const;
  int cover_bound(Word undominated, Word free) const;
  void tick();

  void minimize_from(const State& s);
  bool enumerate_from(const State& s, int next, int target,
                      const std::function<bool(const Assignment&)>& visit);
  Assignment materialize(const State& s) const;

  int n_;
  bool total_;
  Word all_;
  Word forced_;
  std::array<Word, 64> adj_{};
  std::array<Word, 64> closed_{};
  std::array<int, 64> degree_{};
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;

  int best_ = 0;
  bool stop_at_first_ = false;
  bool stopped_ = false;
  Assignment best_assignment_;
};

}  // namespace trd::detail
