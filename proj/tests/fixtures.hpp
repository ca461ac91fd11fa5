#pragma once

// Shared instances for the unit and acceptance tests.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "pseudoconvex/generators.hpp"
#include "pseudoconvex/hypergraph.hpp"
#include "pseudoconvex/recognition.hpp"

namespace fixture {

using namespace pseudoconvex;

inline SignedHypergraph signed_builtin(const std::string& name, std::size_t param = 0) {
  const BuiltinInstance b = builtin({name, param, 1});
  return SignedHypergraph(b.hypergraph, *b.signs);
}

inline SignedHypergraph topsets(std::size_t n, std::vector<VertexSet> edges) {
  std::vector<Sign> signs(edges.size(), Sign::top);
  return SignedHypergraph(Hypergraph(n, std::move(edges)), std::move(signs));
}

// The dual of the 14-edge tetrahedron hypergraph: 14 cells, 4 hemispheres. Cells are ordered
// along a circular Gray code of their parity pattern relative to circle 0, which makes every
// shifted hemisphere an interval or the complement of one.
inline HemisphereHypergraph tetrahedron_dual() {
  const Hypergraph h14 = builtin({"hemisphere14", 0, 1}).hypergraph;
  const int gray[7] = {1, 3, 2, 6, 7, 5, 4};
  auto key = [&](Rank v) {
    const VertexSet e = h14.edge(v);
    const bool b0 = e.contains(0);
    int c = 0;
    for (Rank u = 1; u < 4; ++u)
      if (e.contains(u) != b0) c |= 1 << (u - 1);
    return (std::find(gray, gray + 7, c) - gray) * 2 + (b0 ? 1 : 0);
  };
  std::vector<Rank> order(14);
  for (Rank i = 0; i < 14; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](Rank a, Rank b) { return key(a) < key(b); });
  const Hypergraph d = dual(h14);
  const auto r = recognize_hemisphere(d, order, std::nullopt, SearchOptions{14});
  if (!r) throw std::logic_error("tetrahedron dual has no shift in the Gray-code order");
  return HemisphereHypergraph(reorder(d, order), r->shift, r->signature);
}

}  // namespace fixture
