#pragma once

#include <bit>
#include <cstdint>
#include <iterator>

namespace trd {

using Vertex = int;

/// Hard ceiling on graph order: one 64-bit word per adjacency row, and the
/// short graph6 form stops at 62.
inline constexpr int kMaxOrder = 62;

/// A set of vertices drawn from 0..63, stored as one machine word.
class VertexSet {
 public:
  using word_type = std::uint64_t;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(word_type bits) : bits_(bits) {}

  static constexpr VertexSet single(Vertex v) { return VertexSet{word_type{1} << v}; }
  /// {0, 1, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet{n >= 64 ? ~word_type{0} : (word_type{1} << n) - 1};
  }

  constexpr word_type bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  /// Smallest member; the set must be non-empty.
  constexpr Vertex front() const { return std::countr_zero(bits_); }

  constexpr void insert(Vertex v) { bits_ |= word_type{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(word_type{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet{bits_ | o.bits_}; }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet{bits_ & o.bits_}; }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet{bits_ & ~o.bits_}; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(word_type rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    word_type rest_ = 0;
  };

  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{}; }

 private:
  word_type bits_ = 0;
};

}  // namespace trd
