#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "pseudoconvex/hypergraph.hpp"
#include "pseudoconvex/recognition.hpp"

namespace pseudoconvex {

// A new vertex placed at rank `position` (0..n); membership[i] says whether edge i gains it.
struct VertexInsertion {
  Rank position = 0;
  std::vector<bool> membership;
  friend bool operator==(const VertexInsertion&, const VertexInsertion&) = default;
};

Hypergraph apply_insertion(const Hypergraph& h, const VertexInsertion& ins);
SignedHypergraph apply_insertion(const SignedHypergraph& sh, const VertexInsertion& ins);

// Rank of an old vertex after an insertion at `position`.
inline Rank shifted_rank(Rank r, Rank position) { return r < position ? r : r + 1; }
VertexSet shifted_set(VertexSet s, Rank position);

// Neither choice for one edge (or one vertex, when extending an edge) keeps the family ABA-free.
class ExtensionFailed : public std::runtime_error {
 public:
  ExtensionFailed(std::string message, std::size_t item, std::optional<AbaOccurrence> if_included,
                  std::optional<AbaOccurrence> if_excluded)
      : std::runtime_error(std::move(message)),
        item(item),
        if_included(if_included),
        if_excluded(if_excluded) {}

  std::size_t item;
  std::optional<AbaOccurrence> if_included;
  std::optional<AbaOccurrence> if_excluded;
};

// Completes a seed insertion. Only the entries of seed.membership listed in `core` are read;
// the other edges are decided in increasing index order, preferring to leave the vertex out.
// Edges forming a complement pair always receive opposite memberships.
VertexInsertion extend_vertex(const SignedHypergraph& sh, const std::vector<EdgeIndex>& core,
                              const VertexInsertion& seed);

// Grows `partial` (a subset of `sub`) to an edge H of the whole vertex set with H & sub == partial,
// deciding the remaining vertices in increasing rank, preferring to leave them out.
VertexSet extend_hyperedge(const SignedHypergraph& sh, VertexSet sub, VertexSet partial, Sign sign);

struct LeviResult {
  // p and q each followed by a copy lying in exactly the same edges.
  SignedHypergraph duplicated;
  Rank p = 0, p_copy = 0, q = 0, q_copy = 0;
  // Topset of `duplicated` meeting {p, p', q, q'} in exactly {p, q}.
  VertexSet x;
};

LeviResult discrete_levi(const SignedHypergraph& sh, Rank p, Rank q);

struct HellyExtension {
  VertexInsertion insertion;
  Rank new_rank = 0;
};

// Each target is a convex set given by the edges it intersects. Adds a vertex lying in every
// target. Throws PremiseViolated when three targets have empty intersection.
HellyExtension helly_extend(const SignedHypergraph& sh, const std::vector<std::vector<EdgeIndex>>& targets);

struct HemisphereExtension {
  VertexInsertion insertion;
  Rank new_rank = 0;
  bool joins_shift = false;
  HemisphereHypergraph result;
};

// Same for hemisphere hypergraphs, where the premise is on four targets at a time.
HemisphereExtension hemisphere_helly_extend(const HemisphereHypergraph& hh,
                                            const std::vector<std::vector<EdgeIndex>>& targets);

// Adds every (subset, sign) in increasing bitmask order, top before bottom, that keeps the
// underlying family ABA-free. n <= max_n.
SignedHypergraph saturate(const SignedHypergraph& sh, std::size_t max_n = 12);

// Intersection of the listed edges (the whole set when empty).
VertexSet target_set(const Hypergraph& h, const std::vector<EdgeIndex>& target);

}  // namespace pseudoconvex
