// One line per acceptance criterion. Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pseudoconvex/convexity.hpp"
#include "pseudoconvex/errors.hpp"
#include "pseudoconvex/extension.hpp"
#include "pseudoconvex/extremal.hpp"
#include "pseudoconvex/generators.hpp"
#include "pseudoconvex/invariants.hpp"
#include "pseudoconvex/recognition.hpp"
#include "pseudoconvex/theorems.hpp"

using namespace pseudoconvex;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  // Records the first failure only.
  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
  void expect(bool ok, const std::function<std::string()>& why) {
    if (!ok) fail(why());
  }
};

std::string show(VertexSet s) {
  std::string out = "{";
  for (Rank v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// The shared corpus: 500 halfplane instances, n <= 12, m <= 14.
std::vector<SignedHypergraph> corpus() {
  std::vector<SignedHypergraph> out;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) out.push_back(random_instance(1 + seed % 12, seed % 15, seed));
  return out;
}

bool valid_insertion(const SignedHypergraph& sh, const VertexInsertion& ins) {
  const Hypergraph g = apply_insertion(sh.base(), ins);
  return oracle::valid(g.vertex_count(), g.edges(), sh.signs());
}

Outcome aba_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(1001);
  std::size_t checked = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng() % 8, m = rng() % 7;
    const auto edges = oracle::random_edges(rng, n, m);
    const auto got = check_aba_free(Hypergraph(n, edges));
    o.expect(got == oracle::aba(n, edges), [&] { return "instance " + std::to_string(t) + " disagrees"; });
    ++checked;
  }
  for (const std::string& name : builtin_names()) {
    const BuiltinInstance b = builtin({name, 0, 1});
    const Hypergraph& h = b.hypergraph;
    o.expect(check_aba_free(h) == oracle::aba(h.vertex_count(), h.edges()), [&] { return "builtin " + name; });
    if (b.signs) {
      const Hypergraph f = underlying_family(h, *b.signs);
      o.expect(check_aba_free(f) == oracle::aba(f.vertex_count(), f.edges()),
               [&] { return "underlying family of builtin " + name; });
    }
    ++checked;
  }
  const double s = seconds_since(start);
  o.expect(s < 10.0, [&] { return "took " + std::to_string(s) + " s"; });
  if (o.passed) o.detail = std::to_string(checked) + " hypergraphs, 0 disagreements";
  return o;
}

Outcome signature_equivalence() {
  Outcome o;
  std::mt19937_64 rng(2002);
  std::size_t feasible = 0;
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + rng() % 7, m = rng() % 7;
    const auto edges = oracle::random_edges(rng, n, m);
    const OrderedRecognition r = recognize_ordered(Hypergraph(n, edges));
    const bool brute = oracle::signature(n, edges).has_value();
    o.expect(r.feasible() == brute, [&] { return "instance " + std::to_string(t) + " verdict differs"; });
    if (r.feasible()) {
      ++feasible;
      o.expect(oracle::valid(n, edges, *r.signature), [&] { return "instance " + std::to_string(t) + " invalid signature"; });
    }
  }
  if (o.passed) o.detail = "500 instances (" + std::to_string(feasible) + " feasible), 0 disagreements";
  return o;
}

Outcome no21_orders() {
  Outcome o;
  const auto start = Clock::now();
  const Hypergraph no21 = builtin({"no21", 0, 1}).hypergraph;
  const auto found = recognize(no21);
  o.expect(found.has_value(), [] { return std::string("no21 not recognized"); });
  if (found) {
    o.expect(oracle::valid(4, oracle::permute(no21.edges(), found->order), found->signature),
             [] { return std::string("no21 witness fails the oracle"); });
  }
  const Hypergraph plus = builtin({"no21plus", 0, 1}).hypergraph;
  o.expect(!recognize(plus), [] { return std::string("no21plus recognized"); });
  o.expect(count_recognized_orders(plus) == 0, [] { return std::string("no21plus has an accepted order"); });
  // Independent check: every one of the 120 orders fails brute force over all 64 signatures.
  o.expect(!oracle::recognizable(5, plus.edges()), [] { return std::string("oracle accepts no21plus"); });
  const double s = seconds_since(start);
  o.expect(s < 1.0, [&] { return "took " + std::to_string(s) + " s"; });
  if (o.passed) o.detail = "no21 accepted, no21plus rejected in all 120 orders";
  return o;
}

Outcome hemisphere_constructions() {
  Outcome o;
  const Hypergraph h14 = builtin({"hemisphere14", 0, 1}).hypergraph;
  const auto r = recognize_hemisphere(h14);
  o.expect(r.has_value(), [] { return std::string("hemisphere14 rejected"); });
  if (r) {
    const Hypergraph shifted = shift_edges(reorder(h14, r->order), r->shift);
    o.expect(oracle::valid(4, shifted.edges(), r->signature), [] { return std::string("hemisphere14 witness invalid"); });
  }
  const Hypergraph h15 = builtin({"hemisphere15", 0, 1}).hypergraph;
  o.expect(!recognize_hemisphere(h15), [] { return std::string("hemisphere15 accepted"); });
  // Independent check over every order and every shift.
  bool any = false;
  for (std::uint64_t x = 0; x < 16 && !any; ++x) {
    std::vector<VertexSet> shifted;
    for (VertexSet e : h15.edges()) shifted.push_back(VertexSet(e.bits() ^ x));
    std::vector<std::size_t> order{0, 1, 2, 3};
    do {
      any = any || oracle::has_signature(4, oracle::permute(shifted, order));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  o.expect(!any, [] { return std::string("oracle accepts hemisphere15"); });
  if (o.passed) o.detail = "hemisphere14 shift " + show(r->shift) + "; hemisphere15 rejected over 24 orders x 16 shifts";
  return o;
}

Outcome invariant_suite(const std::vector<SignedHypergraph>& corpus) {
  Outcome o;
  std::size_t checks = 0;
  for (std::size_t t = 0; t < corpus.size(); ++t) {
    const SignedHypergraph& sh = corpus[t];
    for (const InvariantResult& r : check_invariants(sh, {t + 1, 16, 8})) {
      checks += r.checks;
      o.expect(r.passed, [&] { return "instance " + std::to_string(t) + ": " + r.module + ": " + r.name + ": " + r.detail; });
    }
    // Hulls against the definition.
    const ExtremalProfile p = extremal_profile(sh);
    const auto h = oracle::hulls(sh.vertex_count(), sh.edges(), sh.signs());
    o.expect(p.top == h.top && p.bottom == h.bottom, [&] { return "instance " + std::to_string(t) + ": hulls differ"; });
  }
  if (o.passed) o.detail = std::to_string(corpus.size()) + " instances, " + std::to_string(checks) + " checks";
  return o;
}

Outcome caratheodory(const std::vector<SignedHypergraph>& corpus) {
  Outcome o;
  std::size_t queries = 0;
  for (std::size_t t = 0; t < corpus.size(); ++t) {
    const SignedHypergraph& sh = corpus[t];
    const std::size_t n = sh.vertex_count();
    std::mt19937_64 rng(t);
    std::vector<VertexSet> qs;
    if (n <= 8) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) qs.push_back(VertexSet(mask));
    } else {
      for (int s = 0; s < 256; ++s) qs.push_back(VertexSet(rng()) & sh.all());
    }
    for (VertexSet q : qs) {
      for (Rank v : oracle::hull(n, sh.edges(), q) - q) {
        if (oracle::extremal_on(n, sh.edges(), sh.signs(), q | VertexSet::single(v)).contains(v)) continue;
        ++queries;
        bool brute = false;
        for (Rank a : q)
          for (Rank b : q)
            for (Rank c : q) brute = brute || oracle::hull(n, sh.edges(), VertexSet{a, b, c}).contains(v);
        const VertexSet w = caratheodory_witness(sh, v, q).members;
        const VertexSet ext = oracle::extremal_on(n, sh.edges(), sh.signs(), q);
        o.expect(brute && w.size() <= 3 && w.subset_of(ext) && oracle::hull(n, sh.edges(), w).contains(v),
                 [&] { return "instance " + std::to_string(t) + " v=" + std::to_string(v) + " q=" + show(q); });
      }
    }
  }
  o.expect(queries >= 1000, [&] { return "only " + std::to_string(queries) + " queries"; });
  if (o.passed) o.detail = std::to_string(queries) + " strongly-inside queries";
  return o;
}

// Greedy subfamily in which every three edges share a vertex.
SignedHypergraph triple_intersecting(const SignedHypergraph& sh) {
  std::vector<VertexSet> kept;
  std::vector<Sign> signs;
  for (EdgeIndex i = 0; i < sh.edge_count(); ++i) {
    const VertexSet e = sh.edge(i);
    bool ok = !e.empty();
    for (std::size_t a = 0; a < kept.size() && ok; ++a)
      for (std::size_t b = a; b < kept.size() && ok; ++b) ok = !(e & kept[a] & kept[b]).empty();
    if (!ok) continue;
    kept.push_back(e);
    signs.push_back(sh.sign(i));
  }
  return SignedHypergraph(Hypergraph(sh.vertex_count(), kept), signs);
}

bool triple_premise(const SignedHypergraph& sh) {
  const auto& e = sh.edges();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i; j < e.size(); ++j)
      for (std::size_t k = j; k < e.size(); ++k)
        if ((e[i] & e[j] & e[k]).empty()) return false;
  return true;
}

Outcome helly(const std::vector<SignedHypergraph>& corpus) {
  Outcome o;
  std::size_t direct = 0, filtered = 0;
  auto check = [&](const SignedHypergraph& sh, const std::string& label) {
    std::vector<std::vector<EdgeIndex>> targets;
    for (EdgeIndex i = 0; i < sh.edge_count(); ++i) targets.push_back({i});
    try {
      const HellyExtension h = helly_extend(sh, targets);
      o.expect(valid_insertion(sh, h.insertion), [&] { return label + ": insertion fails the oracle"; });
      for (EdgeIndex i = 0; i < sh.edge_count(); ++i)
        o.expect(h.insertion.membership[i], [&] { return label + ": new vertex misses edge " + std::to_string(i); });
    } catch (const std::exception& e) {
      o.fail(label + ": " + e.what());
    }
  };
  for (std::size_t t = 0; t < corpus.size(); ++t) {
    if (corpus[t].vertex_count() >= 64) continue;
    if (triple_premise(corpus[t])) {
      check(corpus[t], "instance " + std::to_string(t));
      ++direct;
    }
    const SignedHypergraph sub = triple_intersecting(corpus[t]);
    if (sub.edge_count() >= 3) {
      check(sub, "filtered instance " + std::to_string(t));
      ++filtered;
    }
  }
  try {
    helly_extend(fixture::signed_builtin("no21"), {{0}, {1}, {2}, {3}, {4}, {5}});
    o.fail("no21 did not raise PremiseViolated");
  } catch (const PremiseViolated& e) {
    o.expect(e.witness == std::vector<std::size_t>{0, 1, 2}, [] { return std::string("no21 reported the wrong triple"); });
  }
  if (o.passed) {
    o.detail = std::to_string(direct) + " corpus instances meeting the premise, " + std::to_string(filtered) +
               " filtered subfamilies; no21 -> targets [0,1,2]";
  }
  return o;
}

Outcome radon(const std::vector<SignedHypergraph>& corpus) {
  Outcome o;
  std::size_t count = 0;
  for (std::size_t t = 0; t < corpus.size(); ++t) {
    const SignedHypergraph& sh = corpus[t];
    const std::size_t n = sh.vertex_count();
    if (n < 4) continue;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const VertexSet q(mask);
      if (q.size() != 4) continue;
      ++count;
      try {
        const RadonPartition r = radon_partition(sh, q);
        const Hypergraph g = apply_insertion(sh.base(), r.insertion);
        const Rank pos = r.insertion.position;
        const bool ok = (r.part1 | r.part2) == q && (r.part1 & r.part2).empty() && !r.part1.empty() && !r.part2.empty() &&
                        oracle::valid(n + 1, g.edges(), sh.signs()) &&
                        oracle::hull(n + 1, g.edges(), shifted_set(r.part1, pos)).contains(r.new_rank) &&
                        oracle::hull(n + 1, g.edges(), shifted_set(r.part2, pos)).contains(r.new_rank);
        o.expect(ok, [&] { return "instance " + std::to_string(t) + " q=" + show(q); });
      } catch (const std::exception& e) {
        o.fail("instance " + std::to_string(t) + " q=" + show(q) + ": " + e.what());
      }
    }
  }
  if (o.passed) o.detail = std::to_string(count) + " 4-subsets";
  return o;
}

// Instances large enough for every threshold: the corpus plus denser and larger ones.
std::vector<SignedHypergraph> cupcap_corpus(const std::vector<SignedHypergraph>& corpus) {
  std::vector<SignedHypergraph> out = corpus;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) out.push_back(random_instance(21 + seed % 6, 10 + seed % 30, seed));
  std::mt19937_64 rng(99);
  for (int t = 0; t < 6; ++t) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < 21; ++i) {
      // x distinct, y random; a collinear triple would only lose halfplanes, never break the instance
      pts.push_back({static_cast<long>(3 * i), static_cast<long>(rng() % 97) - 48});
    }
    try {
      out.push_back(from_halfplanes({pts, all_halfplanes(pts)}));
    } catch (const InputError&) {
    }
  }
  out.push_back(fixture::signed_builtin("convex_position", 24));
  out.push_back(fixture::signed_builtin("parabola", 22));
  out.push_back(fixture::signed_builtin("collinear", 22));
  out.push_back(fixture::signed_builtin("arrangement", 2));
  out.push_back(fixture::signed_builtin("arrangement", 3));
  return out;
}

Outcome cup_cap(const std::vector<SignedHypergraph>& instances) {
  Outcome o;
  const std::pair<std::size_t, std::size_t> cases[] = {{3, 3}, {4, 4}, {3, 5}, {5, 5}};
  const std::size_t expected[] = {3, 7, 5, 21};
  std::string counts;
  for (std::size_t c = 0; c < 4; ++c) {
    const auto [k, l] = cases[c];
    const std::size_t bound = cup_cap_bound(k, l);
    o.expect(bound == expected[c], [&] { return "bound(" + std::to_string(k) + "," + std::to_string(l) + ") wrong"; });
    std::size_t tried = 0;
    for (std::size_t t = 0; t < instances.size(); ++t) {
      const SignedHypergraph& sh = instances[t];
      if (sh.vertex_count() < bound) continue;
      ++tried;
      const auto r = find_cup_or_cap(sh, k, l);
      if (!r) {
        o.fail("(" + std::to_string(k) + "," + std::to_string(l) + ") not found on instance " + std::to_string(t));
        continue;
      }
      VertexSet m;
      for (Rank v : r->members) m.insert(v);
      const bool cup = r->kind == Shape::cup && m.size() == k && oracle::is_cup(sh.edges(), sh.signs(), m);
      const bool cap = r->kind == Shape::cap && m.size() == l && oracle::is_cap(sh.edges(), sh.signs(), m);
      o.expect(cup || cap, [&] { return "instance " + std::to_string(t) + ": result fails the oracle"; });
    }
    counts += (c ? ", " : "") + std::string("(") + std::to_string(k) + "," + std::to_string(l) + ") on " + std::to_string(tried);
  }
  if (o.passed) o.detail = counts;
  return o;
}

Outcome levi(const std::vector<SignedHypergraph>& corpus) {
  Outcome o;
  std::mt19937_64 rng(1010);
  std::size_t done = 0;
  for (std::size_t t = 0; done < 200 && t < corpus.size(); ++t) {
    const SignedHypergraph& sh = corpus[t];
    const std::size_t n = sh.vertex_count();
    if (n < 2 || n > 62) continue;
    const Rank p = rng() % n;
    const Rank q = (p + 1 + rng() % (n - 1)) % n;
    ++done;
    try {
      const LeviResult r = discrete_levi(sh, p, q);
      auto edges = r.duplicated.edges();
      auto signs = r.duplicated.signs();
      bool copies = true;
      for (VertexSet e : edges)
        copies = copies && e.contains(r.p) == e.contains(r.p_copy) && e.contains(r.q) == e.contains(r.q_copy);
      edges.push_back(r.x);
      signs.push_back(Sign::top);
      const bool ok = copies && (r.x & VertexSet{r.p, r.p_copy, r.q, r.q_copy}) == VertexSet{r.p, r.q} &&
                      oracle::valid(n + 2, edges, signs);
      o.expect(ok, [&] { return "instance " + std::to_string(t) + " p=" + std::to_string(p) + " q=" + std::to_string(q); });
    } catch (const std::exception& e) {
      o.fail("instance " + std::to_string(t) + ": " + e.what());
    }
  }
  o.expect(done == 200, [&] { return "only " + std::to_string(done) + " triples"; });
  if (o.passed) o.detail = "200 triples";
  return o;
}

Outcome separation() {
  Outcome o;
  const SignedHypergraph square = fixture::signed_builtin("convex_position", 4);
  std::vector<Rank> c;
  for (Rank v : extremal_profile(square).circular)
    if (std::find(c.begin(), c.end(), v) == c.end()) c.push_back(v);
  if (c.size() != 4) {
    o.fail("convex-4 does not have four extremal vertices");
    return o;
  }
  const VertexSet a{c[0], c[2]}, b{c[1], c[3]};
  const SeparationResult r = separate(square, a, b);
  o.expect(!r.separator && r.failure && r.failure->d == square.all(), [] { return std::string("convex-4: separate did not fail on all four"); });
  try {
    kirchberger_separator(square, a, b);
    o.fail("convex-4: kirchberger found a separator");
  } catch (const PremiseViolated& e) {
    o.expect(e.witness == std::vector<std::size_t>{0, 1, 2, 3}, [] { return std::string("convex-4: wrong D"); });
  }
  // No edge of the saturated hypergraph separates the diagonals either.
  const SignedHypergraph full = saturate(square);
  for (VertexSet e : full.edges())
    o.expect(!separates(e, a, b), [&] { return "saturated convex-4 has separator " + show(e); });

  std::size_t lines = 0;
  for (std::size_t n = 2; n <= 10; ++n) {
    const SignedHypergraph line = fixture::signed_builtin("collinear", n);
    for (std::size_t k = 1; k < n; ++k) {
      const VertexSet pre = VertexSet::prefix(k), suf = line.all() - pre;
      ++lines;
      const SeparationResult s = separate(line, pre, suf);
      bool ok = s.separator && separates(s.separator->edge, pre, suf);
      if (ok) {
        auto edges = line.edges();
        auto signs = line.signs();
        edges.push_back(s.separator->edge);
        signs.push_back(s.separator->sign);
        ok = oracle::valid(n, edges, signs);
      }
      o.expect(ok, [&] { return "collinear " + std::to_string(n) + " prefix " + std::to_string(k) + ": separate"; });
      try {
        const SeparatorEdge k2 = kirchberger_separator(line, pre, suf);
        o.expect(separates(k2.edge, pre, suf), [&] { return "collinear kirchberger edge does not separate"; });
      } catch (const std::exception& e) {
        o.fail("collinear " + std::to_string(n) + " prefix " + std::to_string(k) + ": " + e.what());
      }
    }
  }
  if (o.passed) o.detail = "convex-4 D = {0,1,2,3}; " + std::to_string(lines) + " prefix/suffix splits separated";
  return o;
}

Outcome nodualstrong() {
  Outcome o;
  const SignedHypergraph sh = fixture::signed_builtin("convex_position", 5);
  std::vector<VertexSet> pairs;
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    const VertexSet s(mask);
    if (s.size() != 2) continue;
    pairs.push_back(s);
    o.expect(oracle::hull(5, sh.edges(), s) == s, [&] { return show(s) + " is not convex"; });
    o.expect(conv(sh, s).hull == s, [&] { return show(s) + " is not closed under conv"; });
  }
  for (VertexSet x : pairs)
    for (VertexSet y : pairs) o.expect((x | y) != sh.all(), [&] { return show(x) + " and " + show(y) + " cover"; });
  if (o.passed) o.detail = "10 convex pairs, none of the 100 pair choices covers 5 vertices";
  return o;
}

}  // namespace

int main() {
  const auto start = Clock::now();
  int failed = 0;
  auto report = [&](int id, const std::string& title, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.passed) ++failed;
    std::printf("[%s] %2d %s: %s (%.2f s)\n", o.passed ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(),
                seconds_since(t0));
    std::fflush(stdout);
  };

  const std::vector<SignedHypergraph> base = corpus();
  report(1, "ABA check equals the triple-enumeration oracle", aba_equivalence);
  report(2, "2-SAT signature equals brute force", signature_equivalence);
  report(3, "triangle with center accepted, five-vertex variant rejected", no21_orders);
  report(4, "hemisphere constructions", hemisphere_constructions);
  report(5, "invariant suite on the random corpus", [&] { return invariant_suite(base); });
  report(6, "Caratheodory witnesses", [&] { return caratheodory(base); });
  report(7, "Helly extension", [&] { return helly(base); });
  report(8, "Radon partition of every 4-subset", [&] { return radon(base); });
  report(9, "cup-cap thresholds 3, 7, 5, 21", [&] { return cup_cap(cupcap_corpus(base)); });
  report(10, "Levi edge through two duplicated vertices", [&] { return levi(base); });
  report(11, "separation negative and positive cases", separation);
  report(12, "convex position: pairs are convex yet two never cover", nodualstrong);
  const double total = seconds_since(start);
  report(13, "whole run under 5 minutes", [&] {
    Outcome o;
    o.expect(total < 300.0, [&] { return "took " + std::to_string(total) + " s"; });
    if (o.passed) o.detail = "criteria 1-12 took " + std::to_string(total).substr(0, 6) + " s";
    return o;
  });
  return failed;
}
