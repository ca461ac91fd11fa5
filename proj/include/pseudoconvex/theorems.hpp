#pragma once

#include <optional>
#include <vector>

#include "pseudoconvex/extension.hpp"
#include "pseudoconvex/extremal.hpp"
#include "pseudoconvex/hypergraph.hpp"

namespace pseudoconvex {

// At most four vertices of q whose hull already holds v strongly inside.
VertexSet steinitz_witness(const SignedHypergraph& sh, Rank v, VertexSet q);

struct CaratheodoryTriple {
  VertexSet members;  // at most three, all extremal in q
};

CaratheodoryTriple caratheodory_witness(const SignedHypergraph& sh, Rank v, VertexSet q);

struct SeparatorEdge {
  VertexSet edge;
  Sign sign = Sign::top;
};

// How the vertices of one side sit relative to pairs of the other side that surround them.
enum class OrientationClass { none, above, below, mixed };
std::string_view to_string(OrientationClass c);

struct CannotSeparate {
  // Vertices of A and B on which no separating edge can be added already.
  VertexSet d;
  // When D consists of two crossing diagonals, a new vertex lying in both of their hulls.
  std::optional<VertexInsertion> common_point;
};

struct SeparationResult {
  std::optional<SeparatorEdge> separator;
  std::optional<CannotSeparate> failure;
  // Orientation of a in A relative to b < a < b' in B, and of b relative to a < b < a'.
  OrientationClass a_between_b = OrientationClass::none;
  OrientationClass b_between_a = OrientationClass::none;
};

// True iff A is inside edge and B outside it, or the other way round.
bool separates(VertexSet edge, VertexSet a, VertexSet b);

SeparationResult separate(const SignedHypergraph& sh, VertexSet a, VertexSet b);

// Throws PremiseViolated with the first D (|D| <= 4, by size then lexicographically) on which
// no existing edge separates A and B.
SeparatorEdge kirchberger_separator(const SignedHypergraph& sh, VertexSet a, VertexSet b);

struct RadonPartition {
  VertexSet part1, part2;  // ranks of the input hypergraph
  VertexInsertion insertion;
  Rank new_rank = 0;
  // Set when the new vertex copies a non-extremal vertex of q.
  std::optional<Rank> duplicate_of;
};

RadonPartition radon_partition(const SignedHypergraph& sh, VertexSet q);

// a,b,c,d in circular order of the hypergraph induced on them; adds a vertex lying in
// conv({a,c}) and conv({b,d}).
VertexInsertion four_diagonal_vertex(const SignedHypergraph& sh, Rank a, Rank b, Rank c, Rank d);

// At most two vertices meeting every edge; needs every three edges to share a vertex.
VertexSet hitting_pair(const SignedHypergraph& sh);

struct CoverResult {
  VertexSet edge;
  // Witness that the hypergraph with the new edge is still a hemisphere hypergraph.
  HemisphereRecognition witness;
};

// A new edge containing q; needs every four vertices of q to lie in a common edge.
CoverResult hemisphere_cover(const HemisphereHypergraph& hh, VertexSet q, const SearchOptions& options = {});

struct CupCapResult {
  Shape kind = Shape::cup;  // cup or cap
  std::vector<Rank> members;
  bool used_fallback = false;
};

std::optional<CupCapResult> find_cup_or_cap(const SignedHypergraph& sh, std::size_t k, std::size_t l);

// Smallest n that forces a k-cup or an l-cap: C(k+l-4, k-2) + 1.
std::size_t cup_cap_bound(std::size_t k, std::size_t l);

// Cup a ending where cap b starts. Returns a with the second vertex of b appended when that is
// a cup, otherwise b with the second-to-last vertex of a prepended.
CupCapResult eszlemma_step(const SignedHypergraph& sh, const std::vector<Rank>& cup, const std::vector<Rank>& cap);

}  // namespace pseudoconvex
