#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pseudoconvex/vertex_set.hpp"

namespace pseudoconvex {

enum class Sign { top, bottom };

inline Sign opposite(Sign s) { return s == Sign::top ? Sign::bottom : Sign::top; }
std::string_view to_string(Sign s);

// Vertices are the ranks 0..n-1 in left-to-right order. Edges keep their index;
// duplicates are allowed.
class Hypergraph {
 public:
  Hypergraph() = default;
  // Throws InputError when n > 64, a member is out of range, or names has the wrong length.
  explicit Hypergraph(std::size_t n, std::vector<VertexSet> edges = {}, std::vector<std::string> names = {});

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  VertexSet edge(EdgeIndex i) const { return edges_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  VertexSet all() const { return VertexSet::prefix(n_); }

  Hypergraph with_edge(VertexSet e) const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> edges_;
  std::vector<std::string> names_;
};

// Hypergraph plus a top/bottom label per edge. Construction checks that the
// underlying family (topsets as-is, bottomsets complemented) is ABA-free.
class SignedHypergraph {
 public:
  SignedHypergraph() = default;
  SignedHypergraph(Hypergraph base, std::vector<Sign> signs);

  const Hypergraph& base() const { return base_; }
  const std::vector<Sign>& signs() const { return signs_; }
  Sign sign(EdgeIndex i) const { return signs_.at(i); }
  std::size_t vertex_count() const { return base_.vertex_count(); }
  std::size_t edge_count() const { return base_.edge_count(); }
  VertexSet edge(EdgeIndex i) const { return base_.edge(i); }
  const std::vector<VertexSet>& edges() const { return base_.edges(); }
  VertexSet all() const { return base_.all(); }

  // Member i of the underlying family.
  VertexSet member(EdgeIndex i) const {
    return signs_[i] == Sign::top ? base_.edge(i) : all() - base_.edge(i);
  }

  SignedHypergraph with_edge(VertexSet e, Sign s) const;

  friend bool operator==(const SignedHypergraph&, const SignedHypergraph&) = default;

 private:
  Hypergraph base_;
  std::vector<Sign> signs_;
};

// Edges drawn from {F xor X, complement(F) xor X}. Construction checks that
// shifting by X and applying the signature gives an ABA-free family.
class HemisphereHypergraph {
 public:
  HemisphereHypergraph() = default;
  HemisphereHypergraph(Hypergraph base, VertexSet shift, std::vector<Sign> signs);

  const Hypergraph& base() const { return base_; }
  VertexSet shift() const { return shift_; }
  const std::vector<Sign>& signs() const { return signs_; }
  std::size_t vertex_count() const { return base_.vertex_count(); }
  std::size_t edge_count() const { return base_.edge_count(); }

  // Every edge xor-ed with the shift, carrying the signature.
  SignedHypergraph shifted() const;

  friend bool operator==(const HemisphereHypergraph&, const HemisphereHypergraph&) = default;

 private:
  Hypergraph base_;
  VertexSet shift_;
  std::vector<Sign> signs_;
};

Hypergraph induced(const Hypergraph& h, VertexSet keep);
SignedHypergraph induced(const SignedHypergraph& sh, VertexSet keep);

Hypergraph complement_family(const Hypergraph& h);

// Topsets as-is, bottomsets complemented.
Hypergraph underlying_family(const SignedHypergraph& sh);
Hypergraph underlying_family(const Hypergraph& h, const std::vector<Sign>& signs);

// One vertex per edge of h and one edge per vertex of h; the edge for vertex u
// contains the dual vertex of edge e iff u is NOT in e.
Hypergraph dual(const Hypergraph& h);

// Plain transpose: the edge for vertex u contains e iff u is in e.
Hypergraph transpose(const Hypergraph& h);

// order[i] is the original vertex placed at rank i. Names follow their vertices.
Hypergraph reorder(const Hypergraph& h, const std::vector<Rank>& order);

Hypergraph shift_edges(const Hypergraph& h, VertexSet x);

}  // namespace pseudoconvex
