#include "pseudoconvex/extension.hpp"

#include <algorithm>
#include <numeric>

#include "pseudoconvex/errors.hpp"

namespace pseudoconvex {

namespace {

std::optional<AbaOccurrence> conflict(VertexSet a, VertexSet b, EdgeIndex ia, EdgeIndex ib) {
  if (auto occ = find_aba(a, b)) {
    occ->edge_a = ia;
    occ->edge_b = ib;
    return occ;
  }
  if (auto occ = find_aba(b, a)) {
    occ->edge_a = ib;
    occ->edge_b = ia;
    return occ;
  }
  return std::nullopt;
}

void check_room(std::size_t n, std::size_t extra) {
  if (n + extra > kMaxVertices) throw InputError("extension would exceed 64 vertices");
}

// Union-find over complement pairs (opposite signs, complementary edges): they share an
// underlying member and must stay complementary.
std::vector<EdgeIndex> complement_groups(const SignedHypergraph& sh) {
  const std::size_t m = sh.edge_count();
  std::vector<EdgeIndex> parent(m);
  std::iota(parent.begin(), parent.end(), EdgeIndex{0});
  auto find = [&](EdgeIndex i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (EdgeIndex i = 0; i < m; ++i) {
    for (EdgeIndex j = i + 1; j < m; ++j) {
      if (sh.sign(i) != sh.sign(j) && sh.edge(i) == sh.all() - sh.edge(j)) parent[find(j)] = find(i);
    }
  }
  for (EdgeIndex i = 0; i < m; ++i) parent[i] = find(i);
  return parent;
}

std::vector<std::vector<EdgeIndex>> checked_targets(const SignedHypergraph& sh,
                                                    const std::vector<std::vector<EdgeIndex>>& targets) {
  for (const auto& t : targets) {
    for (EdgeIndex i : t) {
      if (i >= sh.edge_count()) throw InputError("target refers to missing edge " + std::to_string(i));
    }
  }
  return targets;
}

std::vector<std::size_t> distinct(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<EdgeIndex> union_of(const std::vector<std::vector<EdgeIndex>>& targets) {
  std::vector<EdgeIndex> core;
  for (const auto& t : targets) core.insert(core.end(), t.begin(), t.end());
  return distinct(core);
}

}  // namespace

VertexSet shifted_set(VertexSet s, Rank position) { return insert_gap(s, position, false); }

Hypergraph apply_insertion(const Hypergraph& h, const VertexInsertion& ins) {
  const std::size_t n = h.vertex_count();
  check_room(n, 1);
  if (ins.position > n) throw InputError("insertion position " + std::to_string(ins.position) + " is past the end");
  if (ins.membership.size() != h.edge_count()) throw InputError("insertion needs one membership per edge");
  std::vector<VertexSet> edges;
  edges.reserve(h.edge_count());
  for (EdgeIndex i = 0; i < h.edge_count(); ++i) edges.push_back(insert_gap(h.edge(i), ins.position, ins.membership[i]));
  std::vector<std::string> names = h.names();
  if (!names.empty()) names.insert(names.begin() + static_cast<std::ptrdiff_t>(ins.position), "new");
  return Hypergraph(n + 1, std::move(edges), std::move(names));
}

SignedHypergraph apply_insertion(const SignedHypergraph& sh, const VertexInsertion& ins) {
  return SignedHypergraph(apply_insertion(sh.base(), ins), sh.signs());
}

VertexInsertion extend_vertex(const SignedHypergraph& sh, const std::vector<EdgeIndex>& core,
                              const VertexInsertion& seed) {
  const std::size_t n = sh.vertex_count(), m = sh.edge_count();
  check_room(n, 1);
  const Rank g = seed.position;
  if (g > n) throw InputError("insertion position " + std::to_string(g) + " is past the end");
  if (seed.membership.size() != m) throw InputError("seed needs one membership entry per edge");
  for (EdgeIndex i : core) {
    if (i >= m) throw InputError("core refers to missing edge " + std::to_string(i));
  }

  const auto group = complement_groups(sh);
  // Underlying member of edge i after the insertion, given whether edge i gains the vertex.
  auto grown = [&](EdgeIndex i, bool in_edge) {
    return insert_gap(sh.member(i), g, in_edge == (sh.sign(i) == Sign::top));
  };

  std::vector<std::optional<bool>> decided(m);
  std::vector<VertexSet> members(m);
  std::vector<EdgeIndex> order;
  auto first_conflict = [&](EdgeIndex i, VertexSet candidate) -> std::optional<AbaOccurrence> {
    for (EdgeIndex j : order) {
      if (auto occ = conflict(candidate, members[j], i, j)) return occ;
    }
    return std::nullopt;
  };
  auto commit = [&](EdgeIndex i, bool in_edge) {
    decided[i] = in_edge;
    members[i] = grown(i, in_edge);
    order.push_back(i);
  };
  // The membership a partner must take to keep its group's member identical.
  auto forced = [&](EdgeIndex i) -> std::optional<bool> {
    for (EdgeIndex j : order) {
      if (group[j] == group[i]) return members[j].contains(g) == (sh.sign(i) == Sign::top);
    }
    return std::nullopt;
  };

  for (EdgeIndex i : distinct(core)) {
    const bool in_edge = seed.membership[i];
    if (auto f = forced(i); f && *f != in_edge) {
      throw ExtensionFailed("seed splits the complement pair containing edge " + std::to_string(i), i,
                            std::nullopt, std::nullopt);
    }
    if (auto occ = first_conflict(i, grown(i, in_edge))) {
      throw ExtensionFailed("seed is not ABA-free at edge " + std::to_string(i), i,
                            in_edge ? occ : std::nullopt, in_edge ? std::nullopt : occ);
    }
    commit(i, in_edge);
  }

  for (EdgeIndex i = 0; i < m; ++i) {
    if (decided[i]) continue;
    if (auto f = forced(i)) {
      if (auto occ = first_conflict(i, grown(i, *f))) {
        throw ExtensionFailed("complement partner of edge " + std::to_string(i) + " cannot follow", i,
                              *f ? occ : std::nullopt, *f ? std::nullopt : occ);
      }
      commit(i, *f);
      continue;
    }
    auto out = first_conflict(i, grown(i, false));
    if (!out) {
      commit(i, false);
      continue;
    }
    auto in = first_conflict(i, grown(i, true));
    if (!in) {
      commit(i, true);
      continue;
    }
    throw ExtensionFailed("edge " + std::to_string(i) + " cannot be extended either way", i, in, out);
  }

  VertexInsertion result{g, std::vector<bool>(m)};
  for (EdgeIndex i = 0; i < m; ++i) result.membership[i] = *decided[i];
  if (check_aba_free(underlying_family(apply_insertion(sh.base(), result), sh.signs()))) {
    throw InternalError("vertex extension failed re-verification");
  }
  return result;
}

VertexSet extend_hyperedge(const SignedHypergraph& sh, VertexSet sub, VertexSet partial, Sign sign) {
  const VertexSet all = sh.all();
  if (!sub.subset_of(all)) throw InputError("extend_hyperedge: sub has a vertex outside the vertex range");
  if (!partial.subset_of(sub)) throw InputError("extend_hyperedge: partial must be a subset of sub");
  const EdgeIndex fresh = sh.edge_count();

  auto first_conflict = [&](VertexSet candidate, VertexSet decided) -> std::optional<AbaOccurrence> {
    for (EdgeIndex i = 0; i < sh.edge_count(); ++i) {
      if (auto occ = conflict(candidate, sh.member(i) & decided, fresh, i)) return occ;
    }
    return std::nullopt;
  };

  VertexSet member = sign == Sign::top ? partial : sub - partial;
  if (auto occ = first_conflict(member, sub)) {
    throw ExtensionFailed("partial edge is not compatible on the given subset", occ->edge_a == fresh ? occ->edge_b : occ->edge_a,
                          std::nullopt, occ);
  }
  VertexSet decided = sub;
  for (Rank u : all - sub) {
    decided.insert(u);
    const VertexSet with_u = member | VertexSet::single(u);
    // Leaving u out of the edge means adding it to the member for a bottomset.
    const VertexSet out = sign == Sign::top ? member : with_u;
    const VertexSet in = sign == Sign::top ? with_u : member;
    auto out_conflict = first_conflict(out, decided);
    if (!out_conflict) {
      member = out;
      continue;
    }
    auto in_conflict = first_conflict(in, decided);
    if (!in_conflict) {
      member = in;
      continue;
    }
    throw ExtensionFailed("vertex " + std::to_string(u) + " cannot be decided either way", u, in_conflict,
                          out_conflict);
  }
  const VertexSet edge = sign == Sign::top ? member : all - member;
  try {
    (void)sh.with_edge(edge, sign);
  } catch (const InputError&) {
    throw InternalError("edge extension failed re-verification");
  }
  return edge;
}

LeviResult discrete_levi(const SignedHypergraph& sh, Rank p, Rank q) {
  const std::size_t n = sh.vertex_count();
  if (p >= n || q >= n) throw InputError("discrete_levi: rank out of range");
  if (p == q) throw InputError("discrete_levi needs two distinct vertices");
  check_room(n, 2);
  const Rank lo = std::min(p, q), hi = std::max(p, q);

  auto copy_of = [](const SignedHypergraph& h, Rank r) {
    VertexInsertion ins{r + 1, std::vector<bool>(h.edge_count())};
    for (EdgeIndex i = 0; i < h.edge_count(); ++i) ins.membership[i] = h.edge(i).contains(r);
    return ins;
  };
  SignedHypergraph once = apply_insertion(sh, copy_of(sh, lo));
  SignedHypergraph twice = apply_insertion(once, copy_of(once, hi + 1));
  if (!sh.base().names().empty()) {
    auto names = sh.base().names();
    names.insert(names.begin() + static_cast<std::ptrdiff_t>(hi) + 1, names[hi] + "'");
    names.insert(names.begin() + static_cast<std::ptrdiff_t>(lo) + 1, names[lo] + "'");
    twice = SignedHypergraph(Hypergraph(n + 2, twice.edges(), std::move(names)), twice.signs());
  }

  const VertexSet sub{lo, lo + 1, hi + 1, hi + 2};
  const VertexSet partial{lo, hi + 1};
  const VertexSet x = extend_hyperedge(twice, sub, partial, Sign::top);
  if ((x & sub) != partial) throw InternalError("discrete_levi produced an edge with the wrong trace");

  LeviResult r{twice, lo, lo + 1, hi + 1, hi + 2, x};
  if (p > q) {
    std::swap(r.p, r.q);
    std::swap(r.p_copy, r.q_copy);
  }
  return r;
}

VertexSet target_set(const Hypergraph& h, const std::vector<EdgeIndex>& target) {
  VertexSet s = h.all();
  for (EdgeIndex i : target) s &= h.edge(i);
  return s;
}

HellyExtension helly_extend(const SignedHypergraph& sh, const std::vector<std::vector<EdgeIndex>>& targets_in) {
  const auto targets = checked_targets(sh, targets_in);
  std::vector<VertexSet> sets;
  for (const auto& t : targets) sets.push_back(target_set(sh.base(), t));
  const std::size_t t = sets.size();
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i; j < t; ++j) {
      for (std::size_t k = j; k < t; ++k) {
        if ((sets[i] & sets[j] & sets[k]).empty()) {
          throw PremiseViolated("three targets share no vertex", "targets", distinct({i, j, k}));
        }
      }
    }
  }
  check_room(sh.vertex_count(), 1);
  const auto core = union_of(targets);
  VertexInsertion seed{0, std::vector<bool>(sh.edge_count(), false)};
  for (EdgeIndex i : core) seed.membership[i] = true;
  for (Rank g = 0; g <= sh.vertex_count(); ++g) {
    seed.position = g;
    VertexInsertion ins;
    try {
      ins = extend_vertex(sh, core, seed);
    } catch (const ExtensionFailed&) {
      continue;
    }
    const SignedHypergraph grown = apply_insertion(sh, ins);
    for (const auto& target : targets) {
      if (!target_set(grown.base(), target).contains(g)) throw InternalError("new vertex missed a target");
    }
    if (!recognize_ordered(grown.base()).feasible()) throw InternalError("Helly extension is not recognized");
    return {ins, g};
  }
  throw InternalError("no insertion gap admits a common vertex although the premise holds");
}

namespace {

std::optional<HemisphereExtension> hemisphere_guess(const HemisphereHypergraph& hh, const std::vector<EdgeIndex>& core,
                                                    Rank g, bool joins) {
  const SignedHypergraph shifted = hh.shifted();
  VertexInsertion seed{g, std::vector<bool>(hh.edge_count(), false)};
  for (EdgeIndex i : core) seed.membership[i] = !joins;
  VertexInsertion ins;
  try {
    ins = extend_vertex(shifted, core, seed);
  } catch (const ExtensionFailed&) {
    return std::nullopt;
  }
  for (EdgeIndex i = 0; i < ins.membership.size(); ++i) ins.membership[i] = ins.membership[i] != joins;
  Hypergraph grown = apply_insertion(hh.base(), ins);
  VertexSet shift = shifted_set(hh.shift(), g);
  if (joins) shift.insert(g);
  HemisphereHypergraph result(std::move(grown), shift, hh.signs());
  return HemisphereExtension{ins, g, joins, result};
}

// Every membership pattern for the edges outside the core, shift and signature searched anew.
std::optional<HemisphereExtension> hemisphere_exhaustive(const HemisphereHypergraph& hh,
                                                         const std::vector<EdgeIndex>& core) {
  const std::size_t m = hh.edge_count(), n = hh.vertex_count();
  std::vector<EdgeIndex> free_edges;
  for (EdgeIndex i = 0; i < m; ++i) {
    if (!std::binary_search(core.begin(), core.end(), i)) free_edges.push_back(i);
  }
  if (free_edges.size() > 16 || n + 1 > 16) return std::nullopt;
  std::vector<Rank> identity(n + 1);
  std::iota(identity.begin(), identity.end(), Rank{0});
  for (Rank g = 0; g <= n; ++g) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_edges.size()); ++mask) {
      VertexInsertion ins{g, std::vector<bool>(m, true)};
      for (std::size_t k = 0; k < free_edges.size(); ++k) ins.membership[free_edges[k]] = (mask >> k) & 1U;
      Hypergraph grown = apply_insertion(hh.base(), ins);
      if (auto rec = recognize_hemisphere(grown, identity, std::nullopt, SearchOptions{n + 1})) {
        HemisphereHypergraph result(std::move(grown), rec->shift, rec->signature);
        return HemisphereExtension{ins, g, rec->shift.contains(g), result};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

HemisphereExtension hemisphere_helly_extend(const HemisphereHypergraph& hh,
                                            const std::vector<std::vector<EdgeIndex>>& targets_in) {
  const auto targets = checked_targets(hh.shifted(), targets_in);
  std::vector<VertexSet> sets;
  for (const auto& t : targets) sets.push_back(target_set(hh.base(), t));
  const std::size_t t = sets.size();
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i; j < t; ++j) {
      for (std::size_t k = j; k < t; ++k) {
        for (std::size_t l = k; l < t; ++l) {
          if ((sets[i] & sets[j] & sets[k] & sets[l]).empty()) {
            throw PremiseViolated("four targets share no vertex", "targets", distinct({i, j, k, l}));
          }
        }
      }
    }
  }
  check_room(hh.vertex_count(), 1);
  const auto core = union_of(targets);
  std::optional<HemisphereExtension> found;
  for (Rank g = 0; g <= hh.vertex_count() && !found; ++g) {
    found = hemisphere_guess(hh, core, g, false);
    if (!found) found = hemisphere_guess(hh, core, g, true);
  }
  if (!found) found = hemisphere_exhaustive(hh, core);
  if (!found) throw InternalError("no hemisphere extension found although the premise holds");

  const Hypergraph& grown = found->result.base();
  for (const auto& target : targets) {
    if (!target_set(grown, target).contains(found->new_rank)) throw InternalError("new vertex missed a target");
  }
  std::vector<Rank> identity(grown.vertex_count());
  std::iota(identity.begin(), identity.end(), Rank{0});
  if (!recognize_hemisphere(grown, identity, found->result.shift())) {
    throw InternalError("hemisphere extension is not recognized");
  }
  return *found;
}

SignedHypergraph saturate(const SignedHypergraph& sh, std::size_t max_n) {
  const std::size_t n = sh.vertex_count();
  if (n > max_n) throw InputError("saturate needs n <= " + std::to_string(max_n) + ", got " + std::to_string(n));
  const VertexSet all = sh.all();
  std::vector<VertexSet> edges = sh.edges();
  std::vector<Sign> signs = sh.signs();
  std::vector<VertexSet> members;
  for (EdgeIndex i = 0; i < sh.edge_count(); ++i) members.push_back(sh.member(i));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const VertexSet s(mask);
    for (Sign sign : {Sign::top, Sign::bottom}) {
      bool present = false;
      for (EdgeIndex i = 0; i < edges.size() && !present; ++i) present = edges[i] == s && signs[i] == sign;
      if (present) continue;
      const VertexSet f = sign == Sign::top ? s : all - s;
      bool fits = true;
      for (VertexSet g : members) {
        if (!aba_compatible(f, g)) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      edges.push_back(s);
      signs.push_back(sign);
      members.push_back(f);
    }
  }
  return SignedHypergraph(Hypergraph(n, std::move(edges), sh.base().names()), std::move(signs));
}

}  // namespace pseudoconvex
