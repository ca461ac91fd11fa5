#include "pseudoconvex/theorems.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "pseudoconvex/convexity.hpp"
#include "pseudoconvex/errors.hpp"
#include "pseudoconvex/recognition.hpp"

namespace pseudoconvex {

namespace {

void check_set(const SignedHypergraph& sh, VertexSet s, const char* what) {
  if (!s.subset_of(sh.all())) throw InputError(std::string(what) + " has a vertex outside the vertex range");
}

void check_rank(const SignedHypergraph& sh, Rank r) {
  if (r >= sh.vertex_count()) throw InputError("rank " + std::to_string(r) + " is out of range");
}

// Calls fn on every k-subset of universe in lexicographic order of sorted tuples; stops when fn returns true.
bool any_subset_of_size(VertexSet universe, std::size_t k, const std::function<bool(VertexSet)>& fn) {
  const auto items = universe.to_vector();
  if (k > items.size()) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    VertexSet s;
    for (std::size_t i : idx) s.insert(items[i]);
    if (fn(s)) return true;
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == items.size() - k + pos - 1) --pos;
    if (pos == 0) return false;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::size_t> as_indices(VertexSet s) { return s.to_vector(); }

void require_strongly_inside(const SignedHypergraph& sh, Rank v, VertexSet q) {
  check_rank(sh, v);
  check_set(sh, q, "q");
  if (q.contains(v)) throw InputError("v must not belong to q");
  if (!is_strongly_inside(sh, v, q)) {
    throw PremiseViolated("vertex " + std::to_string(v) + " is not strongly inside q", "vertices", {v});
  }
}

// Profile of the hypergraph induced on keep, reported in the ranks of sh.
ExtremalProfile profile_on(const SignedHypergraph& sh, VertexSet keep) {
  ExtremalProfile p = extremal_profile(induced(sh, keep));
  const auto members = keep.to_vector();
  for (Rank& r : p.circular) r = members[r];
  return {expand(p.top, keep), expand(p.bottom, keep), p.circular};
}

std::vector<Rank> first_occurrences(const std::vector<Rank>& circular) {
  std::vector<Rank> out;
  for (Rank r : circular) {
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  }
  return out;
}

bool is_cyclic_subsequence(const std::vector<Rank>& cycle, const std::vector<Rank>& pattern) {
  const std::size_t len = cycle.size();
  for (std::size_t start = 0; start < len; ++start) {
    if (cycle[start] != pattern[0]) continue;
    std::size_t matched = 1;
    for (std::size_t step = 1; step < len && matched < pattern.size(); ++step) {
      if (cycle[(start + step) % len] == pattern[matched]) ++matched;
    }
    if (matched == pattern.size()) return true;
  }
  return false;
}

bool hull_contains(const Hypergraph& h, VertexSet q, Rank v) { return conv(h, q).hull.contains(v); }

}  // namespace

VertexSet steinitz_witness(const SignedHypergraph& sh, Rank v, VertexSet q) {
  require_strongly_inside(sh, v, q);
  const ExtremalProfile p = profile_on(sh, q | VertexSet::single(v));
  auto straddle = [v](VertexSet hull) {
    const Rank below = (hull & VertexSet::prefix(v)).max();
    const Rank above = (hull - VertexSet::prefix(v + 1)).min();
    return VertexSet{below, above};
  };
  const VertexSet result = straddle(p.top) | straddle(p.bottom);
  if (!is_strongly_inside(sh, v, result) || !hull_contains(sh.base(), result, v)) {
    throw InternalError("Steinitz witness failed re-verification");
  }
  return result;
}

CaratheodoryTriple caratheodory_witness(const SignedHypergraph& sh, Rank v, VertexSet q) {
  require_strongly_inside(sh, v, q);
  const ExtremalProfile p = profile_on(sh, q | VertexSet::single(v));
  const VertexSet extremal = p.extremal();
  auto verified = [&](VertexSet s) {
    if (!hull_contains(sh.base(), s, v)) throw InternalError("Caratheodory witness failed re-verification");
    return CaratheodoryTriple{s};
  };

  std::optional<VertexSet> small;
  for (std::size_t size = 1; size <= 2 && !small; ++size) {
    any_subset_of_size(extremal, size, [&](VertexSet s) {
      if (hull_contains(sh.base(), s, v)) small = s;
      return small.has_value();
    });
  }
  if (small) return verified(*small);

  // Fan around the leftmost vertex: v is below v1c2 and above v1c_last, so the side flips
  // between two consecutive c_i.
  const auto& c = p.circular;
  const Rank v1 = c.front();
  for (std::size_t i = 1; i + 1 < c.size(); ++i) {
    if (c[i] == v1 || c[i + 1] == v1 || c[i] == c[i + 1]) continue;
    if (orient(sh, v, v1, c[i]) != Orientation::below) continue;
    if (orient(sh, v, v1, c[i + 1]) != Orientation::above) continue;
    const VertexSet triple{v1, c[i], c[i + 1]};
    if (hull_contains(sh.base(), triple, v)) return verified(triple);
  }
  throw InternalError("fan scan found no triangle containing v");
}

std::string_view to_string(OrientationClass c) {
  switch (c) {
    case OrientationClass::none: return "none";
    case OrientationClass::above: return "above";
    case OrientationClass::below: return "below";
    case OrientationClass::mixed: return "mixed";
  }
  return "?";
}

bool separates(VertexSet edge, VertexSet a, VertexSet b) {
  return (a.subset_of(edge) && !edge.intersects(b)) || (b.subset_of(edge) && !edge.intersects(a));
}

namespace {

OrientationClass orientation_class(const SignedHypergraph& sh, VertexSet inner, VertexSet outer) {
  bool above = false, below = false, both = false;
  for (Rank x : inner) {
    for (Rank lo : outer & VertexSet::prefix(x)) {
      for (Rank hi : outer - VertexSet::prefix(x + 1)) {
        switch (orient_triple(sh, lo, x, hi)) {
          case Orientation::above: above = true; break;
          case Orientation::below: below = true; break;
          case Orientation::both: both = true; break;
        }
      }
    }
  }
  if (both || (above && below)) return OrientationClass::mixed;
  if (above) return OrientationClass::above;
  if (below) return OrientationClass::below;
  return OrientationClass::none;
}

// Whether some edge could be added that contains x & d and avoids the rest of d,
// judged on the hypergraph induced on d.
bool addable_on(const SignedHypergraph& sh, VertexSet d, VertexSet x) {
  const VertexSet member = x & d;
  for (EdgeIndex i = 0; i < sh.edge_count(); ++i) {
    if (!aba_compatible(member, sh.member(i) & d)) return false;
  }
  return true;
}

bool separable_on(const SignedHypergraph& sh, VertexSet d, VertexSet a, VertexSet b) {
  return addable_on(sh, d, a) || addable_on(sh, d, b);
}

}  // namespace

SeparationResult separate(const SignedHypergraph& sh, VertexSet a, VertexSet b) {
  check_set(sh, a, "A");
  check_set(sh, b, "B");
  if (a.intersects(b)) throw InputError("A and B must be disjoint");
  SeparationResult result;
  result.a_between_b = orientation_class(sh, a, b);
  result.b_between_a = orientation_class(sh, b, a);

  const VertexSet sub = a | b;
  struct Attempt {
    VertexSet partial;
    Sign sign;
  };
  std::vector<Attempt> attempts{{a, Sign::top}, {b, Sign::bottom}, {a, Sign::bottom}, {b, Sign::top}};
  if (result.a_between_b == OrientationClass::below || result.b_between_a == OrientationClass::above) {
    std::rotate(attempts.begin(), attempts.begin() + 2, attempts.end());
  }
  std::vector<AbaOccurrence> obstacles;
  for (const Attempt& at : attempts) {
    try {
      const VertexSet edge = extend_hyperedge(sh, sub, at.partial, at.sign);
      if (!separates(edge, a, b)) throw InternalError("separator does not separate");
      result.separator = SeparatorEdge{edge, at.sign};
      return result;
    } catch (const ExtensionFailed& e) {
      if (e.if_excluded) obstacles.push_back(*e.if_excluded);
      if (e.if_included) obstacles.push_back(*e.if_included);
    }
  }

  std::optional<VertexSet> d;
  for (std::size_t size = 2; size <= 4 && !d; ++size) {
    any_subset_of_size(sub, size, [&](VertexSet s) {
      if (s.intersects(a) && s.intersects(b) && !separable_on(sh, s, a, b)) d = s;
      return d.has_value();
    });
  }
  if (!d) {
    VertexSet wide;
    for (const auto& o : obstacles) wide |= VertexSet{o.x, o.y, o.z};
    wide &= sub;
    if (separable_on(sh, wide, a, b)) throw InternalError("separation failed without a small obstruction");
    d = wide;
  }
  CannotSeparate failure{*d, std::nullopt};
  const VertexSet da = *d & a;
  if (d->size() == 4 && da.size() == 2) {
    const ExtremalProfile p = profile_on(sh, *d);
    if (p.extremal() == *d) {
      const auto ring = first_occurrences(p.circular);
      const bool alternating = da.contains(ring[0]) == da.contains(ring[2]) && da.contains(ring[0]) != da.contains(ring[1]);
      if (alternating) failure.common_point = four_diagonal_vertex(sh, ring[0], ring[1], ring[2], ring[3]);
    }
  }
  result.failure = failure;
  return result;
}

SeparatorEdge kirchberger_separator(const SignedHypergraph& sh, VertexSet a, VertexSet b) {
  check_set(sh, a, "A");
  check_set(sh, b, "B");
  if (a.intersects(b)) throw InputError("A and B must be disjoint");
  for (std::size_t size = 0; size <= 4; ++size) {
    std::optional<VertexSet> bad;
    any_subset_of_size(sh.all(), size, [&](VertexSet d) {
      for (VertexSet e : sh.edges()) {
        if (separates(e, a & d, b & d)) return false;
      }
      bad = d;
      return true;
    });
    if (bad) throw PremiseViolated("no edge separates A and B on a small subset", "vertices", as_indices(*bad));
  }
  const SeparationResult r = separate(sh, a, b);
  if (!r.separator) throw InternalError("separation failed although every small subset is separated");
  return *r.separator;
}

VertexInsertion four_diagonal_vertex(const SignedHypergraph& sh, Rank a, Rank b, Rank c, Rank d) {
  for (Rank r : {a, b, c, d}) check_rank(sh, r);
  const VertexSet quad{a, b, c, d};
  if (quad.size() != 4) throw InputError("four_diagonal_vertex needs four distinct vertices");
  const ExtremalProfile p = profile_on(sh, quad);
  if (p.extremal() != quad) {
    throw PremiseViolated("not all four vertices are extremal", "vertices", as_indices(quad - p.extremal()));
  }
  if (!is_cyclic_subsequence(p.circular, {a, b, c, d}) && !is_cyclic_subsequence(p.circular, {a, d, c, b})) {
    throw PremiseViolated("vertices are not in the given circular order", "vertices", {a, b, c, d});
  }
  std::vector<std::vector<EdgeIndex>> targets;
  for (EdgeIndex i = 0; i < sh.edge_count(); ++i) {
    const VertexSet e = sh.edge(i);
    if (VertexSet{a, c}.subset_of(e) || VertexSet{b, d}.subset_of(e)) targets.push_back({i});
  }
  HellyExtension ext;
  try {
    ext = helly_extend(sh, targets);
  } catch (const PremiseViolated&) {
    throw InternalError("diagonal edges do not pairwise meet in three vertices");
  }
  const Hypergraph grown = apply_insertion(sh.base(), ext.insertion);
  const Rank g = ext.new_rank;
  if (!hull_contains(grown, VertexSet{shifted_rank(a, g), shifted_rank(c, g)}, g) ||
      !hull_contains(grown, VertexSet{shifted_rank(b, g), shifted_rank(d, g)}, g)) {
    throw InternalError("diagonal vertex failed re-verification");
  }
  return ext.insertion;
}

RadonPartition radon_partition(const SignedHypergraph& sh, VertexSet q) {
  check_set(sh, q, "q");
  if (q.size() != 4) throw InputError("radon_partition needs exactly four vertices, got " + std::to_string(q.size()));
  const ExtremalProfile p = profile_on(sh, q);
  RadonPartition r;
  const VertexSet inner = q - p.extremal();
  if (!inner.empty()) {
    const Rank x = inner.min();
    r.part1 = VertexSet::single(x);
    r.part2 = q - r.part1;
    r.insertion = VertexInsertion{x + 1, std::vector<bool>(sh.edge_count())};
    for (EdgeIndex i = 0; i < sh.edge_count(); ++i) r.insertion.membership[i] = sh.edge(i).contains(x);
    r.duplicate_of = x;
  } else {
    const auto ring = first_occurrences(p.circular);
    r.part1 = VertexSet{ring[0], ring[2]};
    r.part2 = VertexSet{ring[1], ring[3]};
    r.insertion = four_diagonal_vertex(sh, ring[0], ring[1], ring[2], ring[3]);
  }
  r.new_rank = r.insertion.position;
  const SignedHypergraph grown = apply_insertion(sh, r.insertion);
  if (!hull_contains(grown.base(), shifted_set(r.part1, r.new_rank), r.new_rank) ||
      !hull_contains(grown.base(), shifted_set(r.part2, r.new_rank), r.new_rank)) {
    throw InternalError("Radon vertex failed re-verification");
  }
  return r;
}

VertexSet hitting_pair(const SignedHypergraph& sh) {
  const auto& edges = sh.edges();
  const std::size_t m = edges.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      for (std::size_t k = j; k < m; ++k) {
        if ((edges[i] & edges[j] & edges[k]).empty()) {
          std::vector<std::size_t> w{i, j, k};
          w.erase(std::unique(w.begin(), w.end()), w.end());
          throw PremiseViolated("three edges share no vertex", "edges", w);
        }
      }
    }
  }
  if (m == 0) return {};
  auto hits_all = [&](VertexSet s) {
    return std::all_of(edges.begin(), edges.end(), [s](VertexSet e) { return e.intersects(s); });
  };
  for (std::size_t size = 1; size <= 2; ++size) {
    std::optional<VertexSet> found;
    any_subset_of_size(sh.all(), size, [&](VertexSet s) {
      if (hits_all(s)) found = s;
      return found.has_value();
    });
    if (found) return *found;
  }
  throw InternalError("no pair of vertices hits every edge although every three edges meet");
}

CoverResult hemisphere_cover(const HemisphereHypergraph& hh, VertexSet q, const SearchOptions& options) {
  const Hypergraph& h = hh.base();
  if (!q.subset_of(h.all())) throw InputError("q has a vertex outside the vertex range");
  const std::size_t n = h.vertex_count();
  std::vector<Rank> identity(n);
  std::iota(identity.begin(), identity.end(), Rank{0});

  if (h.edge_count() == 0) {
    return {q, {identity, hh.shift(), {Sign::top}}};
  }
  auto covered = [&](VertexSet s) {
    return std::any_of(h.edges().begin(), h.edges().end(), [s](VertexSet e) { return s.subset_of(e); });
  };
  std::optional<VertexSet> gap;
  any_subset_of_size(q, std::min<std::size_t>(4, q.size()), [&](VertexSet s) {
    if (!covered(s)) gap = s;
    return gap.has_value();
  });
  if (gap) throw PremiseViolated("four vertices of q lie in no common edge", "vertices", as_indices(*gap));

  for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
    if (q.subset_of(h.edge(i))) {
      auto signs = hh.signs();
      signs.push_back(hh.signs()[i]);
      return {h.edge(i), {identity, hh.shift(), signs}};
    }
  }

  // Vertices of the transpose are the edges; the edge of primal vertex u lists the edges holding u.
  const Hypergraph t = transpose(h);
  const auto rec = recognize_hemisphere(t, std::nullopt, std::nullopt, options);
  if (!rec) throw InternalError("transpose of a hemisphere hypergraph was not recognized");
  const HemisphereHypergraph ht(reorder(t, rec->order), rec->shift, rec->signature);
  std::vector<std::vector<EdgeIndex>> targets;
  for (Rank u : q) targets.push_back({u});
  const HemisphereExtension ext = hemisphere_helly_extend(ht, targets);
  VertexSet edge;
  for (Rank u = 0; u < n; ++u) {
    if (ext.insertion.membership[u]) edge.insert(u);
  }
  if (!q.subset_of(edge)) throw InternalError("cover edge misses a vertex of q");

  const Hypergraph grown = h.with_edge(edge);
  const SearchOptions wide{std::max(options.max_n, n)};
  auto witness = recognize_hemisphere(grown, identity, std::nullopt, wide);
  if (!witness) witness = recognize_hemisphere(grown, std::nullopt, std::nullopt, options);
  if (!witness) throw InternalError("cover edge breaks the hemisphere property");
  return {edge, *witness};
}

std::size_t cup_cap_bound(std::size_t k, std::size_t l) {
  if (k < 2 || l < 2) throw InputError("cup and cap sizes must be at least 2");
  const std::size_t top = k + l - 4, choose = k - 2;
  std::size_t c = 1;
  for (std::size_t i = 1; i <= choose; ++i) c = c * (top - choose + i) / i;
  return c + 1;
}

std::optional<CupCapResult> find_cup_or_cap(const SignedHypergraph& sh, std::size_t k, std::size_t l) {
  if (k < 2 || l < 2) throw InputError("cup and cap sizes must be at least 2");
  const std::size_t n = sh.vertex_count();
  std::vector<VertexSet> members;
  for (EdgeIndex i = 0; i < sh.edge_count(); ++i) members.push_back(sh.member(i));

  // Cup triple: nothing contains the middle while avoiding both ends. Cap triple: nothing
  // contains both ends while avoiding the middle.
  auto triple_ok = [&](Shape kind, Rank a, Rank b, Rank c) {
    const VertexSet ends{a, c};
    for (VertexSet f : members) {
      if (kind == Shape::cup && f.contains(b) && !f.intersects(ends)) return false;
      if (kind == Shape::cap && !f.contains(b) && ends.subset_of(f)) return false;
    }
    return true;
  };

  auto search = [&](Shape kind, std::size_t size) -> std::optional<std::vector<Rank>> {
    if (size > n) return std::nullopt;
    std::vector<Rank> seq;
    std::function<bool(Rank)> dfs = [&](Rank from) {
      if (seq.size() == size) return true;
      for (Rank w = from; w + (size - seq.size()) <= n; ++w) {
        bool ok = true;
        for (std::size_t x = 0; x < seq.size() && ok; ++x) {
          for (std::size_t y = x + 1; y < seq.size() && ok; ++y) ok = triple_ok(kind, seq[x], seq[y], w);
        }
        if (!ok) continue;
        seq.push_back(w);
        if (dfs(w + 1)) return true;
        seq.pop_back();
      }
      return false;
    };
    if (dfs(0)) return seq;
    return std::nullopt;
  };

  auto exhaustive = [&](Shape kind, std::size_t size) -> std::optional<std::vector<Rank>> {
    std::optional<std::vector<Rank>> found;
    any_subset_of_size(sh.all(), size, [&](VertexSet s) {
      const Shape got = classify_subset(sh, s);
      if (kind == Shape::cup ? is_cup(got) : is_cap(got)) found = s.to_vector();
      return found.has_value();
    });
    return found;
  };

  for (auto [kind, size] : {std::pair{Shape::cup, k}, std::pair{Shape::cap, l}}) {
    if (auto seq = search(kind, size)) {
      const Shape got = classify_subset(sh, VertexSet::from_range(*seq));
      if (kind == Shape::cup ? is_cup(got) : is_cap(got)) return CupCapResult{kind, *seq, false};
      // The triple test disagreed with the full classification; fall back to plain enumeration.
      if (auto slow = exhaustive(kind, size)) return CupCapResult{kind, *slow, true};
    }
  }
  return std::nullopt;
}

CupCapResult eszlemma_step(const SignedHypergraph& sh, const std::vector<Rank>& cup, const std::vector<Rank>& cap) {
  auto sorted_set = [&](const std::vector<Rank>& v, const char* what) {
    for (Rank r : v) check_rank(sh, r);
    if (v.size() < 2 || !std::is_sorted(v.begin(), v.end()) || std::adjacent_find(v.begin(), v.end()) != v.end()) {
      throw InputError(std::string(what) + " must list at least two increasing ranks");
    }
    return VertexSet::from_range(v);
  };
  const VertexSet a = sorted_set(cup, "cup"), b = sorted_set(cap, "cap");
  if (cup.back() != cap.front()) throw PremiseViolated("cup must end where cap starts", "vertices", {cup.back(), cap.front()});
  if (!is_cup(classify_subset(sh, a))) throw PremiseViolated("first sequence is not a cup", "vertices", cup);
  if (!is_cap(classify_subset(sh, b))) throw PremiseViolated("second sequence is not a cap", "vertices", cap);

  std::vector<Rank> longer_cup = cup;
  longer_cup.push_back(cap[1]);
  if (is_cup(classify_subset(sh, VertexSet::from_range(longer_cup)))) return {Shape::cup, longer_cup, false};
  std::vector<Rank> longer_cap = cap;
  longer_cap.insert(longer_cap.begin(), cup[cup.size() - 2]);
  if (is_cap(classify_subset(sh, VertexSet::from_range(longer_cap)))) return {Shape::cap, longer_cap, false};
  throw InternalError("neither the cup nor the cap extends");
}

}  // namespace pseudoconvex
