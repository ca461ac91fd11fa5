#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pseudoconvex/hypergraph.hpp"

namespace pseudoconvex {

// x < y < z, x and z in edge_a minus edge_b, y in edge_b minus edge_a.
struct AbaOccurrence {
  EdgeIndex edge_a = 0;
  EdgeIndex edge_b = 0;
  Rank x = 0, y = 0, z = 0;
  friend bool operator==(const AbaOccurrence&, const AbaOccurrence&) = default;
};

// Lexicographically first (x,y,z) with x,z in a\b and y in b\a; edge fields left 0.
std::optional<AbaOccurrence> find_aba(VertexSet a, VertexSet b);

// True iff neither (a,b) nor (b,a) has an occurrence.
inline bool aba_compatible(VertexSet a, VertexSet b) { return !find_aba(a, b) && !find_aba(b, a); }

// First occurrence by ordered edge pair, then (x,y,z); nullopt when ABA-free.
std::optional<AbaOccurrence> check_aba_free(const Hypergraph& h);

using Signature = std::vector<Sign>;

// One edge pair of a 2-SAT refutation: the label combinations it forbids, each
// with the occurrence that rules it out.
struct PairConstraint {
  EdgeIndex first = 0;
  EdgeIndex second = 0;
  std::vector<std::pair<Sign, Sign>> forbidden;
  std::vector<AbaOccurrence> occurrences;
};

struct OrderedRecognition {
  std::optional<Signature> signature;
  // Pairwise constraints that admit no consistent labeling; empty when feasible.
  std::vector<PairConstraint> core;
  bool feasible() const { return signature.has_value(); }
};

OrderedRecognition recognize_ordered(const Hypergraph& h);

// Same decision without building a refutation.
std::optional<Signature> solve_signature(const Hypergraph& h);

struct SearchOptions {
  std::size_t max_n = 10;
};

struct OrderRecognition {
  std::vector<Rank> order;
  Signature signature;
};

// First vertex permutation in lexicographic order that admits a signature.
std::optional<OrderRecognition> recognize(const Hypergraph& h, const SearchOptions& options = {});

// Number of vertex permutations that admit a signature.
std::size_t count_recognized_orders(const Hypergraph& h, const SearchOptions& options = {});

struct HemisphereRecognition {
  std::vector<Rank> order;
  VertexSet shift;
  Signature signature;
};

// Shifts are tried in increasing bitmask order. `order` and `shift` pin the search when given.
std::optional<HemisphereRecognition> recognize_hemisphere(const Hypergraph& h,
                                                         const std::optional<std::vector<Rank>>& order = {},
                                                         const std::optional<VertexSet>& shift = {},
                                                         const SearchOptions& options = {});

}  // namespace pseudoconvex
