#include "pseudoconvex/hypergraph.hpp"

#include <sstream>

#include "pseudoconvex/errors.hpp"
#include "pseudoconvex/recognition.hpp"

namespace pseudoconvex {

std::string_view to_string(Sign s) { return s == Sign::top ? "top" : "bottom"; }

Hypergraph::Hypergraph(std::size_t n, std::vector<VertexSet> edges, std::vector<std::string> names)
    : n_(n), edges_(std::move(edges)), names_(std::move(names)) {
  if (n_ > kMaxVertices) {
    throw InputError("vertex count " + std::to_string(n_) + " exceeds the limit of 64");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!edges_[i].subset_of(all())) {
      throw InputError("edge " + std::to_string(i) + " has member " +
                       std::to_string((edges_[i] - all()).min()) + " outside [0," + std::to_string(n_) + ")");
    }
  }
  if (!names_.empty() && names_.size() != n_) {
    throw InputError("names has " + std::to_string(names_.size()) + " entries, expected " + std::to_string(n_));
  }
}

Hypergraph Hypergraph::with_edge(VertexSet e) const {
  auto edges = edges_;
  edges.push_back(e);
  return Hypergraph(n_, std::move(edges), names_);
}

namespace {

std::string describe(const AbaOccurrence& o) {
  std::ostringstream out;
  out << "edges " << o.edge_a << " and " << o.edge_b << " form ABA on " << o.x << "<" << o.y << "<" << o.z;
  return out.str();
}

}  // namespace

SignedHypergraph::SignedHypergraph(Hypergraph base, std::vector<Sign> signs)
    : base_(std::move(base)), signs_(std::move(signs)) {
  if (signs_.size() != base_.edge_count()) {
    throw InputError("expected " + std::to_string(base_.edge_count()) + " signs, got " +
                     std::to_string(signs_.size()));
  }
  if (auto occ = check_aba_free(underlying_family(*this))) {
    throw InputError("signature is not valid: " + describe(*occ));
  }
}

SignedHypergraph SignedHypergraph::with_edge(VertexSet e, Sign s) const {
  auto signs = signs_;
  signs.push_back(s);
  return SignedHypergraph(base_.with_edge(e), std::move(signs));
}

HemisphereHypergraph::HemisphereHypergraph(Hypergraph base, VertexSet shift, std::vector<Sign> signs)
    : base_(std::move(base)), shift_(shift), signs_(std::move(signs)) {
  if (!shift_.subset_of(base_.all())) throw InputError("shift has a member outside the vertex range");
  if (signs_.size() != base_.edge_count()) {
    throw InputError("expected " + std::to_string(base_.edge_count()) + " signs, got " +
                     std::to_string(signs_.size()));
  }
  if (auto occ = check_aba_free(underlying_family(shift_edges(base_, shift_), signs_))) {
    throw InputError("shift and signature are not valid: " + describe(*occ));
  }
}

SignedHypergraph HemisphereHypergraph::shifted() const {
  return SignedHypergraph(shift_edges(base_, shift_), signs_);
}

Hypergraph induced(const Hypergraph& h, VertexSet keep) {
  if (!keep.subset_of(h.all())) throw InputError("induced: kept vertex outside the vertex range");
  std::vector<VertexSet> edges;
  edges.reserve(h.edge_count());
  for (VertexSet e : h.edges()) edges.push_back(compress(e, keep));
  std::vector<std::string> names;
  if (!h.names().empty()) {
    for (Rank r : keep) names.push_back(h.names()[r]);
  }
  return Hypergraph(keep.size(), std::move(edges), std::move(names));
}

SignedHypergraph induced(const SignedHypergraph& sh, VertexSet keep) {
  return SignedHypergraph(induced(sh.base(), keep), sh.signs());
}

Hypergraph complement_family(const Hypergraph& h) {
  std::vector<VertexSet> edges;
  edges.reserve(h.edge_count());
  for (VertexSet e : h.edges()) edges.push_back(h.all() - e);
  return Hypergraph(h.vertex_count(), std::move(edges), h.names());
}

Hypergraph underlying_family(const Hypergraph& h, const std::vector<Sign>& signs) {
  std::vector<VertexSet> edges;
  edges.reserve(h.edge_count());
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    edges.push_back(signs.at(i) == Sign::top ? h.edge(i) : h.all() - h.edge(i));
  }
  return Hypergraph(h.vertex_count(), std::move(edges), h.names());
}

Hypergraph underlying_family(const SignedHypergraph& sh) { return underlying_family(sh.base(), sh.signs()); }

Hypergraph transpose(const Hypergraph& h) {
  const std::size_t m = h.edge_count();
  if (m > kMaxVertices) throw InputError("transposing needs at most 64 edges, got " + std::to_string(m));
  std::vector<VertexSet> edges(h.vertex_count());
  for (EdgeIndex e = 0; e < m; ++e) {
    for (Rank u : h.edge(e)) edges[u].insert(e);
  }
  return Hypergraph(m, std::move(edges));
}

Hypergraph dual(const Hypergraph& h) { return complement_family(transpose(h)); }

Hypergraph reorder(const Hypergraph& h, const std::vector<Rank>& order) {
  const std::size_t n = h.vertex_count();
  if (order.size() != n) throw InputError("order must list all " + std::to_string(n) + " vertices");
  std::vector<Rank> rank_of(n, n);
  for (Rank i = 0; i < n; ++i) {
    if (order[i] >= n || rank_of[order[i]] != n) throw InputError("order is not a permutation");
    rank_of[order[i]] = i;
  }
  std::vector<VertexSet> edges;
  edges.reserve(h.edge_count());
  for (VertexSet e : h.edges()) {
    VertexSet r;
    for (Rank u : e) r.insert(rank_of[u]);
    edges.push_back(r);
  }
  std::vector<std::string> names;
  if (!h.names().empty()) {
    for (Rank u : order) names.push_back(h.names()[u]);
  }
  return Hypergraph(n, std::move(edges), std::move(names));
}

Hypergraph shift_edges(const Hypergraph& h, VertexSet x) {
  std::vector<VertexSet> edges;
  edges.reserve(h.edge_count());
  for (VertexSet e : h.edges()) edges.push_back(e ^ x);
  return Hypergraph(h.vertex_count(), std::move(edges), h.names());
}

}  // namespace pseudoconvex
