#include "pseudoconvex/recognition.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>

#include "pseudoconvex/errors.hpp"

namespace pseudoconvex {

std::optional<AbaOccurrence> find_aba(VertexSet a, VertexSet b) {
  const VertexSet outer = a - b;
  if (outer.size() < 2) return std::nullopt;
  const Rank x = outer.min();
  const VertexSet middle = (b - a) & VertexSet::open_range(x, outer.max());
  if (middle.empty()) return std::nullopt;
  const Rank y = middle.min();
  const Rank z = (outer & VertexSet::open_range(y, 64)).min();
  return AbaOccurrence{0, 0, x, y, z};
}

std::optional<AbaOccurrence> check_aba_free(const Hypergraph& h) {
  const auto& edges = h.edges();
  for (EdgeIndex i = 0; i < edges.size(); ++i) {
    for (EdgeIndex j = 0; j < edges.size(); ++j) {
      if (i == j) continue;
      if (auto occ = find_aba(edges[i], edges[j])) {
        occ->edge_a = i;
        occ->edge_b = j;
        return occ;
      }
    }
  }
  return std::nullopt;
}

namespace {

constexpr std::array<Sign, 2> kSigns{Sign::top, Sign::bottom};

// Literal 2i means "edge i is top", 2i+1 means "edge i is bottom".
std::size_t literal(EdgeIndex i, Sign s) { return 2 * i + (s == Sign::top ? 0 : 1); }

struct Clause {
  EdgeIndex first, second;
  Sign first_sign, second_sign;  // the forbidden combination
  AbaOccurrence occurrence;
};

struct ImplicationGraph {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out;  // (target literal, clause id)
  std::vector<Clause> clauses;
  std::optional<std::pair<EdgeIndex, EdgeIndex>> dead_pair;  // a pair with no allowed combination
};

std::optional<AbaOccurrence> pair_conflict(VertexSet a, VertexSet b, EdgeIndex ia, EdgeIndex ib) {
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

ImplicationGraph build_implications(const Hypergraph& h) {
  const std::size_t m = h.edge_count();
  const VertexSet all = h.all();
  ImplicationGraph g;
  g.out.resize(2 * m);
  for (EdgeIndex i = 0; i < m; ++i) {
    for (EdgeIndex j = i + 1; j < m; ++j) {
      int allowed = 0;
      for (Sign si : kSigns) {
        const VertexSet fi = si == Sign::top ? h.edge(i) : all - h.edge(i);
        for (Sign sj : kSigns) {
          const VertexSet fj = sj == Sign::top ? h.edge(j) : all - h.edge(j);
          auto occ = pair_conflict(fi, fj, i, j);
          if (!occ) {
            ++allowed;
            continue;
          }
          const std::size_t id = g.clauses.size();
          g.clauses.push_back({i, j, si, sj, *occ});
          g.out[literal(i, si)].push_back({literal(j, opposite(sj)), id});
          g.out[literal(j, sj)].push_back({literal(i, opposite(si)), id});
        }
      }
      if (allowed == 0 && !g.dead_pair) g.dead_pair = {{i, j}};
    }
  }
  return g;
}

// Iterative Tarjan. Components are numbered in completion order, so sinks come first.
std::vector<std::size_t> strongly_connected(const ImplicationGraph& g) {
  const std::size_t n = g.out.size();
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnseen), low(n, 0), comp(n, kUnseen);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> frames;  // (node, next edge)
  std::size_t counter = 0, components = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnseen) continue;
    frames.push_back({root, 0});
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      if (next == 0 && index[v] == kUnseen) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (next < g.out[v].size()) {
        const std::size_t w = g.out[v][next++].first;
        if (index[w] == kUnseen) {
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = components;
        } while (w != v);
        ++components;
      }
      const std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const std::size_t parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
    }
  }
  return comp;
}

// Clause ids along a shortest implication path from `from` to `to`.
std::vector<std::size_t> path_clauses(const ImplicationGraph& g, std::size_t from, std::size_t to) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::pair<std::size_t, std::size_t>> via(g.out.size(), {kNone, kNone});
  std::vector<bool> seen(g.out.size(), false);
  std::deque<std::size_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (auto [w, id] : g.out[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = {v, id};
      queue.push_back(w);
    }
  }
  std::vector<std::size_t> ids;
  for (std::size_t v = to; v != from && via[v].first != kNone; v = via[v].first) ids.push_back(via[v].second);
  return ids;
}

std::vector<PairConstraint> collect_pairs(const ImplicationGraph& g, std::vector<std::size_t> clause_ids) {
  std::sort(clause_ids.begin(), clause_ids.end());
  clause_ids.erase(std::unique(clause_ids.begin(), clause_ids.end()), clause_ids.end());
  std::vector<PairConstraint> pairs;
  for (std::size_t id : clause_ids) {
    const Clause& c = g.clauses[id];
    if (pairs.empty() || pairs.back().first != c.first || pairs.back().second != c.second) {
      pairs.push_back({c.first, c.second, {}, {}});
    }
    pairs.back().forbidden.push_back({c.first_sign, c.second_sign});
    pairs.back().occurrences.push_back(c.occurrence);
  }
  return pairs;
}

std::vector<PairConstraint> whole_pair(const ImplicationGraph& g, EdgeIndex i, EdgeIndex j) {
  std::vector<std::size_t> ids;
  for (std::size_t id = 0; id < g.clauses.size(); ++id) {
    if (g.clauses[id].first == i && g.clauses[id].second == j) ids.push_back(id);
  }
  return collect_pairs(g, ids);
}

OrderedRecognition solve(const Hypergraph& h, bool want_core) {
  const ImplicationGraph g = build_implications(h);
  OrderedRecognition result;
  if (g.dead_pair) {
    if (want_core) result.core = whole_pair(g, g.dead_pair->first, g.dead_pair->second);
    return result;
  }
  const auto comp = strongly_connected(g);
  const std::size_t m = h.edge_count();
  Signature sig(m);
  for (EdgeIndex i = 0; i < m; ++i) {
    const std::size_t t = literal(i, Sign::top), b = literal(i, Sign::bottom);
    if (comp[t] == comp[b]) {
      if (want_core) {
        auto ids = path_clauses(g, t, b);
        auto back = path_clauses(g, b, t);
        ids.insert(ids.end(), back.begin(), back.end());
        result.core = collect_pairs(g, ids);
      }
      return result;
    }
    sig[i] = comp[t] < comp[b] ? Sign::top : Sign::bottom;
  }
  result.signature = std::move(sig);
  return result;
}

void guard(std::size_t n, const SearchOptions& options) {
  if (n > options.max_n) {
    throw InputError("order search over " + std::to_string(n) + " vertices exceeds the guard of " +
                     std::to_string(options.max_n) + " (raise --max-n to override)");
  }
}

std::vector<Rank> identity(std::size_t n) {
  std::vector<Rank> order(n);
  std::iota(order.begin(), order.end(), Rank{0});
  return order;
}

}  // namespace

OrderedRecognition recognize_ordered(const Hypergraph& h) {
  OrderedRecognition result = solve(h, true);
  if (result.signature && check_aba_free(underlying_family(h, *result.signature))) {
    throw InternalError("2-SAT assignment failed re-verification");
  }
  return result;
}

std::optional<Signature> solve_signature(const Hypergraph& h) { return solve(h, false).signature; }

std::optional<OrderRecognition> recognize(const Hypergraph& h, const SearchOptions& options) {
  guard(h.vertex_count(), options);
  auto order = identity(h.vertex_count());
  do {
    if (auto sig = solve_signature(reorder(h, order))) return OrderRecognition{order, *sig};
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

std::size_t count_recognized_orders(const Hypergraph& h, const SearchOptions& options) {
  guard(h.vertex_count(), options);
  auto order = identity(h.vertex_count());
  std::size_t count = 0;
  do {
    if (solve_signature(reorder(h, order))) ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return count;
}

std::optional<HemisphereRecognition> recognize_hemisphere(const Hypergraph& h,
                                                         const std::optional<std::vector<Rank>>& order,
                                                         const std::optional<VertexSet>& shift,
                                                         const SearchOptions& options) {
  const std::size_t n = h.vertex_count();
  if (!shift || !order) guard(n, options);
  if (!shift && n >= 64) throw InputError("shift search needs fewer than 64 vertices");
  if (shift && !shift->subset_of(h.all())) throw InputError("shift has a member outside the vertex range");
  auto current = order ? *order : identity(n);
  do {
    const Hypergraph ordered = reorder(h, current);
    const std::uint64_t shifts = shift ? 1 : std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < shifts; ++bits) {
      const VertexSet x = shift ? *shift : VertexSet(bits);
      if (auto sig = solve_signature(shift_edges(ordered, x))) return HemisphereRecognition{current, x, *sig};
      if (shift) break;
    }
  } while (!order && std::next_permutation(current.begin(), current.end()));
  return std::nullopt;
}

}  // namespace pseudoconvex
