#include "pseudoconvex/extremal.hpp"

#include <algorithm>
#include <array>

#include "pseudoconvex/errors.hpp"

namespace pseudoconvex {

VertexSet unskippable(const Hypergraph& family) {
  VertexSet skipped;
  for (VertexSet e : family.edges()) {
    if (e.size() < 2) continue;
    skipped |= VertexSet::open_range(e.min(), e.max()) - e;
  }
  return family.all() - skipped;
}

namespace {

struct HullSides {
  VertexSet top, bottom;
};

HullSides hull_sides(const SignedHypergraph& sh) {
  VertexSet skip_top, skip_bottom;
  const VertexSet all = sh.all();
  for (EdgeIndex i = 0; i < sh.edge_count(); ++i) {
    const VertexSet f = sh.member(i);
    const VertexSet g = all - f;
    if (f.size() >= 2) skip_top |= VertexSet::open_range(f.min(), f.max()) - f;
    if (g.size() >= 2) skip_bottom |= VertexSet::open_range(g.min(), g.max()) - g;
  }
  return {all - skip_top, all - skip_bottom};
}

void check_rank(const SignedHypergraph& sh, Rank r) {
  if (r >= sh.vertex_count()) throw InputError("rank " + std::to_string(r) + " is out of range");
}

// Whether the middle vertex b of a<b<c is a top/bottomvertex of the induced triple.
HullSides middle_status(const SignedHypergraph& sh, Rank a, Rank b, Rank c) {
  const VertexSet outer{a, c};
  bool top = true, bottom = true;
  for (EdgeIndex i = 0; i < sh.edge_count() && (top || bottom); ++i) {
    const VertexSet f = sh.member(i);
    if (outer.subset_of(f) && !f.contains(b)) top = false;
    if (!outer.intersects(f) && f.contains(b)) bottom = false;
  }
  return {top ? VertexSet::single(b) : VertexSet(), bottom ? VertexSet::single(b) : VertexSet()};
}

}  // namespace

ExtremalProfile extremal_profile(const SignedHypergraph& sh) {
  const std::size_t n = sh.vertex_count();
  if (n == 0) throw InputError("extremal profile needs at least one vertex");
  const HullSides sides = hull_sides(sh);
  ExtremalProfile profile{sides.top, sides.bottom, {}};
  for (Rank t : sides.top) profile.circular.push_back(t);
  if (n >= 2) {
    std::vector<Rank> lower;
    for (Rank b : sides.bottom) {
      if (b != 0 && b != n - 1) lower.push_back(b);
    }
    profile.circular.insert(profile.circular.end(), lower.rbegin(), lower.rend());
  }
  return profile;
}

std::string_view to_string(Orientation o) {
  switch (o) {
    case Orientation::above: return "above";
    case Orientation::below: return "below";
    case Orientation::both: return "both";
  }
  return "?";
}

Orientation orient_triple(const SignedHypergraph& sh, Rank a, Rank b, Rank c) {
  check_rank(sh, c);
  if (!(a < b && b < c)) throw InputError("orient_triple needs a < b < c");
  const HullSides s = middle_status(sh, a, b, c);
  if (!s.top.empty() && !s.bottom.empty()) return Orientation::both;
  if (!s.top.empty()) return Orientation::above;
  if (!s.bottom.empty()) return Orientation::below;
  throw InternalError("middle of a triple is neither top- nor bottomvertex; signature invalid");
}

Orientation orient(const SignedHypergraph& sh, Rank x, Rank p, Rank r) {
  std::array<Rank, 3> t{x, p, r};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2]) throw InputError("orient needs three distinct ranks");
  const Orientation middle = orient_triple(sh, t[0], t[1], t[2]);
  if (x == t[1] || middle == Orientation::both) return middle;
  return middle == Orientation::above ? Orientation::below : Orientation::above;
}

std::string_view to_string(Shape s) {
  switch (s) {
    case Shape::cup: return "cup";
    case Shape::cap: return "cap";
    case Shape::both: return "both";
    case Shape::neither: return "neither";
  }
  return "?";
}

Shape classify_subset(const SignedHypergraph& sh, VertexSet a) {
  if (a.empty()) throw InputError("classify_subset needs a nonempty set");
  if (!a.subset_of(sh.all())) throw InputError("classify_subset: vertex outside the vertex range");
  if (a.size() <= 2) return Shape::both;
  const HullSides s = hull_sides(induced(sh, a));
  const VertexSet local = VertexSet::prefix(a.size());
  const bool cup = local.subset_of(s.bottom);
  const bool cap = local.subset_of(s.top);
  if (cup && cap) return Shape::both;
  if (cup) return Shape::cup;
  if (cap) return Shape::cap;
  return Shape::neither;
}

}  // namespace pseudoconvex
