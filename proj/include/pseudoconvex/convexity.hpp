#pragma once

#include <vector>

#include "pseudoconvex/hypergraph.hpp"

namespace pseudoconvex {

struct ConvexHullResult {
  VertexSet hull;
  // Edges containing the query; empty means the hull is the whole vertex set.
  std::vector<EdgeIndex> definers;
};

ConvexHullResult conv(const Hypergraph& h, VertexSet q);
inline ConvexHullResult conv(const SignedHypergraph& sh, VertexSet q) { return conv(sh.base(), q); }

enum class EnumerationMode {
  closure,  // pairwise intersections to a fixpoint
  subsets,  // every subfamily, m <= 20
};

// All distinct intersections of edge subfamilies, the full set included, in increasing bitmask order.
std::vector<VertexSet> enumerate_convex_sets(const Hypergraph& h, EnumerationMode mode = EnumerationMode::closure);
inline std::vector<VertexSet> enumerate_convex_sets(const SignedHypergraph& sh,
                                                    EnumerationMode mode = EnumerationMode::closure) {
  return enumerate_convex_sets(sh.base(), mode);
}

// v is not extremal in the hypergraph induced on q and v.
bool is_strongly_inside(const SignedHypergraph& sh, Rank v, VertexSet q);

}  // namespace pseudoconvex
