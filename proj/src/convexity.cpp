#include "pseudoconvex/convexity.hpp"

#include <algorithm>
#include <set>

#include "pseudoconvex/errors.hpp"
#include "pseudoconvex/extremal.hpp"

namespace pseudoconvex {

ConvexHullResult conv(const Hypergraph& h, VertexSet q) {
  if (!q.subset_of(h.all())) throw InputError("conv: query has a vertex outside the vertex range");
  ConvexHullResult result{h.all(), {}};
  for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
    if (q.subset_of(h.edge(i))) {
      result.hull &= h.edge(i);
      result.definers.push_back(i);
    }
  }
  return result;
}

std::vector<VertexSet> enumerate_convex_sets(const Hypergraph& h, EnumerationMode mode) {
  std::set<VertexSet> found{h.all()};
  if (mode == EnumerationMode::subsets) {
    const std::size_t m = h.edge_count();
    if (m > 20) throw InputError("subset enumeration needs m <= 20, got " + std::to_string(m));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      VertexSet s = h.all();
      for (VertexSet bit(mask); Rank i : bit) s &= h.edge(i);
      found.insert(s);
    }
  } else {
    std::vector<VertexSet> frontier;
    for (VertexSet e : h.edges()) {
      if (found.insert(e).second) frontier.push_back(e);
    }
    const std::vector<VertexSet> generators(found.begin(), found.end());
    while (!frontier.empty()) {
      std::vector<VertexSet> next;
      for (VertexSet s : frontier) {
        for (VertexSet g : generators) {
          if (found.insert(s & g).second) next.push_back(s & g);
        }
      }
      frontier = std::move(next);
    }
  }
  return {found.begin(), found.end()};
}

bool is_strongly_inside(const SignedHypergraph& sh, Rank v, VertexSet q) {
  if (v >= sh.vertex_count()) throw InputError("rank " + std::to_string(v) + " is out of range");
  if (q.contains(v)) throw InputError("is_strongly_inside needs v outside q");
  const VertexSet keep = q | VertexSet::single(v);
  const ExtremalProfile p = extremal_profile(induced(sh, keep));
  return !p.extremal().contains(compress(VertexSet::single(v), keep).min());
}

}  // namespace pseudoconvex
