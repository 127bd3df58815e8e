#pragma once

#include <array>
#include <cstdint>

#include "trd/graph.hpp"

namespace trd::detail {

/// Minimum dominating set (closed neighbourhoods) or minimum total
/// dominating set (open neighbourhoods). Branches on the undominated vertex
/// with the fewest remaining candidates; each candidate is excluded from
/// the later sibling branches.
class DominationSearch {
 public:
  using Word = std::uint64_t;

  DominationSearch(const Graph& g, bool total, std::uint64_t node_budget);

  /// Size of a minimum set; `best_set()` holds one.
  int minimize();
  Word best_set() const { return best_set_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void search(Word chosen, Word excluded, Word dominated, int size);

  int n_;
  Word all_;
  std::array<Word, 64> reach_{};  // what a chosen vertex dominates
  std::array<Word, 64> sources_{};  // who can dominate a vertex
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  int best_ = 0;
  Word best_set_ = 0;
};

}  // namespace trd::detail
