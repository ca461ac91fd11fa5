#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace pseudoconvex {

using Rank = std::size_t;
using EdgeIndex = std::size_t;

inline constexpr std::size_t kMaxVertices = 64;

// Subset of the ranks 0..63 stored as one machine word.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Rank;
    using difference_type = std::ptrdiff_t;
    using pointer = const Rank*;
    using reference = Rank;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Rank operator*() const { return static_cast<Rank>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<Rank> ranks) {
    for (Rank r : ranks) insert(r);
  }

  template <typename Range>
  static VertexSet from_range(const Range& ranks) {
    VertexSet s;
    for (auto r : ranks) s.insert(static_cast<Rank>(r));
    return s;
  }

  // {0, ..., n-1}
  static constexpr VertexSet prefix(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  // {lo+1, ..., hi-1}
  static constexpr VertexSet open_range(Rank lo, Rank hi) {
    if (hi <= lo + 1) return VertexSet();
    return prefix(hi) - prefix(lo + 1);
  }
  static constexpr VertexSet single(Rank r) { return VertexSet(std::uint64_t{1} << r); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Rank r) const { return r < 64 && ((bits_ >> r) & 1U); }
  constexpr void insert(Rank r) { bits_ |= std::uint64_t{1} << r; }
  constexpr void erase(Rank r) { bits_ &= ~(std::uint64_t{1} << r); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  // Undefined on the empty set.
  constexpr Rank min() const { return static_cast<Rank>(std::countr_zero(bits_)); }
  constexpr Rank max() const { return static_cast<Rank>(63 - std::countl_zero(bits_)); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }
  std::vector<Rank> to_vector() const { return std::vector<Rank>(begin(), end()); }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator^=(VertexSet o) { bits_ ^= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

// Keeps the members of s that lie in keep and renumbers them by their position in keep.
inline VertexSet compress(VertexSet s, VertexSet keep) {
  VertexSet out;
  Rank next = 0;
  for (Rank r : keep) {
    if (s.contains(r)) out.insert(next);
    ++next;
  }
  return out;
}

// Inverse of compress: member i of s becomes the i-th member of keep.
inline VertexSet expand(VertexSet s, VertexSet keep) {
  VertexSet out;
  Rank next = 0;
  for (Rank r : keep) {
    if (s.contains(next)) out.insert(r);
    ++next;
  }
  return out;
}

// Opens a gap at rank g; the new rank g is a member iff `member`.
inline VertexSet insert_gap(VertexSet s, Rank g, bool member) {
  const std::uint64_t low = s.bits() & VertexSet::prefix(g).bits();
  const std::uint64_t high = g >= 63 ? 0 : (s.bits() >> g) << (g + 1);
  return VertexSet(low | high | (member ? std::uint64_t{1} << g : 0));
}

}  // namespace pseudoconvex
