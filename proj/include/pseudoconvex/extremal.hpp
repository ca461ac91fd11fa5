#pragma once

#include <vector>

#include "pseudoconvex/hypergraph.hpp"

namespace pseudoconvex {

struct ExtremalProfile {
  VertexSet top;
  VertexSet bottom;
  // (v1, t2..t(k-1), vn, b(l-1)..b2). A vertex in both hulls appears twice.
  std::vector<Rank> circular;

  VertexSet extremal() const { return top | bottom; }
};

// Vertices of the family that no member skips (min(A) < v < max(A), v not in A).
VertexSet unskippable(const Hypergraph& family);

ExtremalProfile extremal_profile(const SignedHypergraph& sh);

enum class Orientation { above, below, both };
std::string_view to_string(Orientation o);

// Orientation of b relative to the pair a,c; requires a < b < c.
Orientation orient_triple(const SignedHypergraph& sh, Rank a, Rank b, Rank c);

// Orientation of x relative to the pair {p, r}, for three distinct ranks in any order.
// For the outer vertex of a sorted triple the roles mirror: c is above ab iff b is below ac.
Orientation orient(const SignedHypergraph& sh, Rank x, Rank p, Rank r);

enum class Shape { cup, cap, both, neither };
std::string_view to_string(Shape s);

Shape classify_subset(const SignedHypergraph& sh, VertexSet a);

inline bool is_cup(Shape s) { return s == Shape::cup || s == Shape::both; }
inline bool is_cap(Shape s) { return s == Shape::cap || s == Shape::both; }

}  // namespace pseudoconvex
