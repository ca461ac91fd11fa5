#include "pseudoconvex/invariants.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "pseudoconvex/convexity.hpp"
#include "pseudoconvex/errors.hpp"
#include "pseudoconvex/extension.hpp"
#include "pseudoconvex/extremal.hpp"
#include "pseudoconvex/theorems.hpp"

namespace pseudoconvex {

std::optional<AbaOccurrence> naive_aba(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
    for (EdgeIndex j = 0; j < h.edge_count(); ++j) {
      if (i == j) continue;
      const VertexSet a = h.edge(i), b = h.edge(j);
      for (Rank x = 0; x < n; ++x) {
        for (Rank y = x + 1; y < n; ++y) {
          for (Rank z = y + 1; z < n; ++z) {
            if (a.contains(x) && !b.contains(x) && b.contains(y) && !a.contains(y) && a.contains(z) && !b.contains(z)) {
              return AbaOccurrence{i, j, x, y, z};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

std::string show(VertexSet s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (Rank r : s) {
    out << (first ? "" : ",") << r;
    first = false;
  }
  out << "}";
  return out.str();
}

class Probe {
 public:
  explicit Probe(InvariantResult& r) : r_(r) {}
  void expect(bool ok, const std::function<std::string()>& why) {
    ++r_.checks;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.detail = why();
    }
  }

 private:
  InvariantResult& r_;
};

bool valid_signed(const Hypergraph& h, const std::vector<Sign>& signs) {
  return !check_aba_free(underlying_family(h, signs)).has_value();
}

bool is_cyclic_interval(const std::vector<bool>& marks) {
  const std::size_t len = marks.size();
  std::size_t rises = 0, count = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (marks[i]) ++count;
    if (marks[i] && !marks[(i + len - 1) % len]) ++rises;
  }
  return count == 0 || count == len || rises == 1;
}

// Strictly between consecutive members of s.
std::vector<std::pair<Rank, Rank>> consecutive_pairs(VertexSet s) {
  std::vector<std::pair<Rank, Rank>> out;
  const auto v = s.to_vector();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) out.push_back({v[i], v[i + 1]});
  return out;
}

class Suite {
 public:
  Suite(const SignedHypergraph& sh, const InvariantOptions& options)
      : sh_(sh), options_(options), rng_(options.seed), n_(sh.vertex_count()) {}

  std::vector<InvariantResult> run_all() {
    core();
    recognition();
    extremal();
    convexity();
    extension();
    theorems();
    return std::move(results_);
  }

 private:
  void run(const std::string& module, const std::string& name, const std::function<void(Probe&)>& body) {
    InvariantResult r;
    r.module = module;
    r.name = name;
    Probe probe(r);
    try {
      body(probe);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    results_.push_back(std::move(r));
  }

  VertexSet random_subset() { return VertexSet(rng_()) & sh_.all(); }
  Rank random_rank() { return static_cast<Rank>(rng_() % n_); }

  std::vector<VertexSet> family_members() const {
    std::vector<VertexSet> out;
    for (EdgeIndex i = 0; i < sh_.edge_count(); ++i) out.push_back(sh_.member(i));
    return out;
  }

  void core() {
    const Hypergraph& h = sh_.base();
    run("core", "induced keeps every edge", [&](Probe& p) {
      for (std::size_t s = 0; s < options_.samples; ++s) {
        const VertexSet keep = random_subset();
        p.expect(induced(h, keep).edge_count() == h.edge_count(), [&] { return "keep " + show(keep); });
      }
      p.expect(induced(h, h.all()) == h, [] { return std::string("inducing on all vertices changed the hypergraph"); });
    });
    run("core", "complement is an involution", [&](Probe& p) {
      p.expect(complement_family(complement_family(h)) == h, [] { return std::string("double complement differs"); });
    });
    run("core", "underlying family and its complement are ABA-free", [&](Probe& p) {
      const Hypergraph f = underlying_family(sh_);
      p.expect(!check_aba_free(f), [] { return std::string("underlying family has an ABA occurrence"); });
      p.expect(!check_aba_free(complement_family(f)), [] { return std::string("complemented family has an ABA occurrence"); });
    });
  }

  void recognition() {
    const Hypergraph& h = sh_.base();
    const bool small = n_ <= 16 && sh_.edge_count() <= 40;
    run("recognition", "check_aba_free matches the naive oracle", [&](Probe& p) {
      if (!small) return;
      std::vector<Hypergraph> cases{h, underlying_family(sh_)};
      for (std::size_t s = 0; s < options_.samples / 4; ++s) cases.push_back(h.with_edge(random_subset()));
      for (const Hypergraph& c : cases) {
        p.expect(check_aba_free(c) == naive_aba(c), [] { return std::string("fast and naive ABA checks disagree"); });
      }
    });
    run("recognition", "declared order is recognized", [&](Probe& p) {
      const OrderedRecognition r = recognize_ordered(h);
      p.expect(r.feasible() && valid_signed(h, *r.signature), [] { return std::string("no valid signature found"); });
    });
    run("recognition", "2-SAT agrees with signature brute force", [&](Probe& p) {
      if (sh_.edge_count() >= 12 || !small) return;
      for (std::size_t s = 0; s < 4; ++s) {
        const Hypergraph c = s == 0 ? h : h.with_edge(random_subset());
        bool brute = false;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << c.edge_count()) && !brute; ++mask) {
          std::vector<Sign> signs;
          for (EdgeIndex i = 0; i < c.edge_count(); ++i) signs.push_back((mask >> i) & 1U ? Sign::bottom : Sign::top);
          brute = valid_signed(c, signs);
        }
        p.expect(recognize_ordered(c).feasible() == brute, [] { return std::string("2-SAT and brute force disagree"); });
      }
    });
    run("recognition", "induced subhypergraphs keep the signature", [&](Probe& p) {
      for (std::size_t s = 0; s < options_.samples; ++s) {
        const VertexSet keep = random_subset();
        p.expect(valid_signed(induced(h, keep), sh_.signs()), [&] { return "keep " + show(keep); });
      }
    });
  }

  void extremal() {
    const ExtremalProfile prof = extremal_profile(sh_);
    const VertexSet t = prof.top, b = prof.bottom, ext = prof.extremal();
    const std::vector<VertexSet> fam = family_members();
    const VertexSet all = sh_.all();
    if (n_ == 0) return;

    run("extremal", "endpoints are top and bottom vertices", [&](Probe& p) {
      for (Rank r : {Rank{0}, n_ - 1}) {
        p.expect(t.contains(r) && b.contains(r), [&] { return "endpoint " + std::to_string(r); });
      }
    });
    run("extremal", "at least three extremal vertices", [&](Probe& p) {
      if (n_ < 3) return;
      p.expect(ext.size() >= 3, [&] { return "extremal set " + show(ext); });
    });
    run("extremal", "circular order lists upper then lower hull", [&](Probe& p) {
      std::vector<Rank> expected = t.to_vector();
      const auto lower = (b - VertexSet{0, n_ - 1}).to_vector();
      expected.insert(expected.end(), lower.rbegin(), lower.rend());
      p.expect(prof.circular == expected, [] { return std::string("circular order differs from the hull walk"); });
    });
    run("extremal", "every topset holds a topvertex, every bottomset a bottomvertex", [&](Probe& p) {
      for (VertexSet f : fam) {
        if (!f.empty()) p.expect(f.intersects(t), [&] { return "member " + show(f) + " misses T"; });
        const VertexSet c = all - f;
        if (!c.empty()) p.expect(c.intersects(b), [&] { return "complement " + show(c) + " misses B"; });
      }
    });
    run("extremal", "every edge meets the extremal vertices", [&](Probe& p) {
      for (VertexSet e : sh_.edges()) {
        if (!e.empty()) p.expect(e.intersects(ext), [&] { return "edge " + show(e); });
      }
    });
    run("extremal", "edges cut intervals of the circular order", [&](Probe& p) {
      for (VertexSet e : sh_.edges()) {
        std::vector<bool> marks;
        for (Rank r : prof.circular) marks.push_back(e.contains(r));
        p.expect(is_cyclic_interval(marks), [&] { return "edge " + show(e); });
      }
    });
    run("extremal", "topsets fill gaps between consecutive bottomvertices", [&](Probe& p) {
      for (VertexSet f : fam) {
        for (auto [lo, hi] : consecutive_pairs(b)) {
          if (f.contains(lo) && f.contains(hi)) {
            p.expect(VertexSet::open_range(lo, hi).subset_of(f), [&] { return "member " + show(f); });
          }
        }
        const VertexSet c = all - f;
        for (auto [lo, hi] : consecutive_pairs(t)) {
          if (c.contains(lo) && c.contains(hi)) {
            p.expect(VertexSet::open_range(lo, hi).subset_of(c), [&] { return "complement " + show(c); });
          }
        }
      }
    });
    run("extremal", "covering one hull covers everything", [&](Probe& p) {
      for (VertexSet f : fam) {
        if (b.subset_of(f)) p.expect(f == all, [&] { return "member " + show(f) + " holds B"; });
        if (t.subset_of(all - f)) p.expect(f.empty(), [&] { return "complement of " + show(f) + " holds T"; });
      }
      for (VertexSet e : sh_.edges()) {
        if (ext.subset_of(e)) p.expect(e == all, [&] { return "edge " + show(e) + " holds every extremal vertex"; });
      }
    });
    run("extremal", "topsets hold the topvertices between their members", [&](Probe& p) {
      for (VertexSet f : fam) {
        if (f.empty()) continue;
        p.expect((t & VertexSet::open_range(f.min(), f.max())).subset_of(f), [&] { return "member " + show(f); });
        const VertexSet c = all - f;
        if (c.empty()) continue;
        p.expect((b & VertexSet::open_range(c.min(), c.max())).subset_of(c), [&] { return "complement " + show(c); });
      }
    });
    run("extremal", "topsets through a bottomvertex hold a whole side", [&](Probe& p) {
      auto one_side = [&](VertexSet s, Rank x) {
        return (all - VertexSet::prefix(x + 1)).subset_of(s) || VertexSet::prefix(x).subset_of(s);
      };
      for (VertexSet f : fam) {
        for (Rank x : f & b) p.expect(one_side(f, x), [&] { return "member " + show(f) + " at " + std::to_string(x); });
        const VertexSet c = all - f;
        for (Rank x : c & t) p.expect(one_side(c, x), [&] { return "complement " + show(c) + " at " + std::to_string(x); });
      }
    });
    run("extremal", "deleting a non-topvertex keeps the topvertices", [&](Probe& p) {
      std::size_t budget = options_.samples;
      for (Rank v = 0; v < n_ && budget > 0; ++v) {
        if (ext.contains(v) && t.contains(v) && b.contains(v)) continue;
        --budget;
        const VertexSet keep = all - VertexSet::single(v);
        const ExtremalProfile q = extremal_profile(induced(sh_, keep));
        if (!t.contains(v)) p.expect(q.top == compress(t, keep), [&] { return "deleting " + std::to_string(v) + " changed T"; });
        if (!b.contains(v)) p.expect(q.bottom == compress(b, keep), [&] { return "deleting " + std::to_string(v) + " changed B"; });
      }
    });
    run("extremal", "a non-topvertex is cut off below its neighbouring topvertices", [&](Probe& p) {
      for (auto [lo, hi] : consecutive_pairs(t)) {
        for (Rank v : VertexSet::open_range(lo, hi)) {
          bool found = false;
          for (VertexSet f : fam) found = found || (f.contains(lo) && f.contains(hi) && !f.contains(v));
          p.expect(found, [&] { return "no member separates " + std::to_string(v) + " from its topvertices"; });
        }
      }
      for (auto [lo, hi] : consecutive_pairs(b)) {
        for (Rank v : VertexSet::open_range(lo, hi)) {
          bool found = false;
          for (VertexSet f : fam) found = found || (!f.contains(lo) && !f.contains(hi) && f.contains(v));
          p.expect(found, [&] { return "no complement separates " + std::to_string(v) + " from its bottomvertices"; });
        }
      }
    });
    run("extremal", "opposite orientations force four extremal vertices", [&](Probe& p) {
      auto quad = [&](Rank a, Rank bb, Rank c, Rank d) {
        if (orient_triple(sh_, a, bb, c) != Orientation::above || orient_triple(sh_, a, d, c) != Orientation::below) return;
        const VertexSet keep{a, bb, c, d};
        const ExtremalProfile q = extremal_profile(induced(sh_, keep));
        p.expect(q.extremal() == VertexSet::prefix(4) && q.top.contains(compress(VertexSet::single(bb), keep).min()) &&
                     q.bottom.contains(compress(VertexSet::single(d), keep).min()),
                 [&] { return "quadruple " + show(keep); });
      };
      if (n_ < 4) return;
      if (n_ <= 12) {
        for (Rank a = 0; a < n_; ++a)
          for (Rank c = a + 3; c < n_; ++c)
            for (Rank bb : VertexSet::open_range(a, c))
              for (Rank d : VertexSet::open_range(a, c))
                if (bb != d) quad(a, bb, c, d);
      } else {
        for (std::size_t s = 0; s < options_.samples * 8; ++s) {
          Rank a = random_rank(), c = random_rank(), bb = random_rank(), d = random_rank();
          if (a > c) std::swap(a, c);
          if (a < bb && bb < c && a < d && d < c && bb != d) quad(a, bb, c, d);
        }
      }
    });
    // The converse needs a maximal hypergraph; it is checked after saturation.
    run("extremal", "orientation both puts the vertex in the hull of the pair", [&](Probe& p) {
      if (n_ < 3) return;
      for (std::size_t s = 0; s < options_.samples * 4; ++s) {
        Rank x[3] = {random_rank(), random_rank(), random_rank()};
        std::sort(x, x + 3);
        if (x[0] == x[1] || x[1] == x[2]) continue;
        const bool both = orient_triple(sh_, x[0], x[1], x[2]) == Orientation::both;
        p.expect(!both || conv(sh_, VertexSet{x[0], x[2]}).hull.contains(x[1]),
                 [&] { return "triple " + show(VertexSet{x[0], x[1], x[2]}); });
      }
    });
  }

  void convexity() {
    const ExtremalProfile prof = extremal_profile(sh_);
    run("convexity", "conv is a closure operator", [&](Probe& p) {
      for (std::size_t s = 0; s < options_.samples; ++s) {
        const VertexSet q = random_subset(), bigger = q | random_subset();
        const VertexSet c = conv(sh_, q).hull;
        p.expect(q.subset_of(c) && conv(sh_, c).hull == c && c.subset_of(conv(sh_, bigger).hull),
                 [&] { return "query " + show(q); });
      }
    });
    run("convexity", "extremal vertices span the whole set", [&](Probe& p) {
      if (n_ == 0) return;
      p.expect(conv(sh_, prof.extremal()).hull == sh_.all(), [] { return std::string("conv(T u B) is not everything"); });
    });
    run("convexity", "hulls are spanned by their extremal vertices", [&](Probe& p) {
      for (std::size_t s = 0; s < options_.samples; ++s) {
        const VertexSet q = random_subset();
        if (q.empty()) continue;
        const VertexSet e = expand(extremal_profile(induced(sh_, q)).extremal(), q);
        p.expect(conv(sh_, e).hull == conv(sh_, q).hull, [&] { return "query " + show(q); });
      }
    });
    run("convexity", "strongly inside implies hull membership", [&](Probe& p) {
      if (n_ == 0) return;
      for (std::size_t s = 0; s < options_.samples * 2; ++s) {
        const Rank v = random_rank();
        const VertexSet q = random_subset() - VertexSet::single(v);
        if (is_strongly_inside(sh_, v, q)) p.expect(conv(sh_, q).hull.contains(v), [&] { return "query " + show(q); });
      }
      for (auto [v, q] : strongly_inside_queries()) {
        p.expect(conv(sh_, q).hull.contains(v), [&, q = q] { return "query " + show(q); });
      }
    });
    run("convexity", "closure enumeration equals subfamily enumeration", [&](Probe& p) {
      if (sh_.edge_count() > 16) return;
      p.expect(enumerate_convex_sets(sh_, EnumerationMode::closure) == enumerate_convex_sets(sh_, EnumerationMode::subsets),
               [] { return std::string("enumerations differ"); });
    });
  }

  void extension() {
    if (n_ == 0 || n_ >= kMaxVertices) return;
    run("extension", "vertex extension reproduces its core and re-verifies", [&](Probe& p) {
      for (std::size_t s = 0; s < std::min<std::size_t>(options_.samples, 8); ++s) {
        // A copy of x placed right after it is always a valid insertion; feed part of it as the core.
        const Rank x = random_rank();
        VertexInsertion seed{x + 1, std::vector<bool>(sh_.edge_count())};
        std::vector<EdgeIndex> core;
        for (EdgeIndex i = 0; i < sh_.edge_count(); ++i) {
          seed.membership[i] = sh_.edge(i).contains(x);
          if (rng_() % 2 == 0) core.push_back(i);
        }
        const VertexInsertion out = extend_vertex(sh_, core, seed);
        bool same = true;
        for (EdgeIndex i : core) same = same && out.membership[i] == seed.membership[i];
        p.expect(same, [&] { return "core not reproduced for copy of " + std::to_string(x); });
        p.expect(valid_signed(apply_insertion(sh_.base(), out), sh_.signs()), [&] { return "copy of " + std::to_string(x); });
      }
    });
    run("extension", "discrete Levi edge meets the copies in p and q", [&](Probe& p) {
      if (n_ < 2 || n_ + 2 > kMaxVertices) return;
      for (std::size_t s = 0; s < std::min<std::size_t>(options_.samples, 8); ++s) {
        const Rank a = random_rank(), b = random_rank();
        if (a == b) continue;
        const LeviResult r = discrete_levi(sh_, a, b);
        const VertexSet four{r.p, r.p_copy, r.q, r.q_copy};
        p.expect((r.x & four) == VertexSet{r.p, r.q} &&
                     valid_signed(r.duplicated.base().with_edge(r.x), [&] {
                       auto signs = r.duplicated.signs();
                       signs.push_back(Sign::top);
                       return signs;
                     }()),
                 [&] { return "pair " + std::to_string(a) + "," + std::to_string(b); });
      }
    });
    run("extension", "Helly vertex lies in every edge", [&](Probe& p) {
      const auto& e = sh_.edges();
      const std::size_t m = e.size();
      if (m > 40) return;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j)
          for (std::size_t k = j; k < m; ++k)
            if ((e[i] & e[j] & e[k]).empty()) return;
      std::vector<std::vector<EdgeIndex>> targets;
      for (EdgeIndex i = 0; i < m; ++i) targets.push_back({i});
      const HellyExtension h = helly_extend(sh_, targets);
      bool all_in = true;
      for (bool b : h.insertion.membership) all_in = all_in && b;
      p.expect(all_in && valid_signed(apply_insertion(sh_.base(), h.insertion), sh_.signs()),
               [] { return std::string("Helly insertion misses an edge"); });
    });
    run("extension", "saturation is idempotent; there hulls match strong insideness and orientation", [&](Probe& p) {
      if (n_ > options_.max_saturate_n) return;
      const SignedHypergraph s = saturate(sh_, options_.max_saturate_n);
      p.expect(valid_signed(s.base(), s.signs()), [] { return std::string("saturated family is not ABA-free"); });
      p.expect(saturate(s, options_.max_saturate_n) == s, [] { return std::string("saturate is not idempotent"); });
      for (std::size_t k = 0; k < options_.samples * 2; ++k) {
        const Rank v = random_rank();
        const VertexSet q = random_subset() - VertexSet::single(v);
        if (q.empty()) continue;
        p.expect(conv(s, q).hull.contains(v) == is_strongly_inside(s, v, q),
                 [&] { return "vertex " + std::to_string(v) + " query " + show(q); });
      }
      for (Rank a = 0; a < n_; ++a)
        for (Rank c = a + 2; c < n_; ++c)
          for (Rank b : VertexSet::open_range(a, c))
            p.expect((orient_triple(s, a, b, c) == Orientation::both) == conv(s, VertexSet{a, c}).hull.contains(b),
                     [&] { return "saturated triple " + show(VertexSet{a, b, c}); });
    });
  }

  void theorems() {
    if (n_ == 0) return;
    const auto inside = strongly_inside_queries();
    run("theorems", "Caratheodory witness agrees with brute force", [&](Probe& p) {
      for (auto [v, q] : inside) {
        const VertexSet ext = expand(extremal_profile(induced(sh_, q)).extremal(), q);
        bool brute = false;
        for (Rank a : ext)
          for (Rank b : ext)
            for (Rank c : ext)
              brute = brute || conv(sh_, VertexSet{a, b, c}).hull.contains(v);
        const CaratheodoryTriple w = caratheodory_witness(sh_, v, q);
        p.expect(brute && w.members.size() <= 3 && w.members.subset_of(ext) && conv(sh_, w.members).hull.contains(v),
                 [&, v = v, q = q] { return "vertex " + std::to_string(v) + " query " + show(q); });
      }
    });
    run("theorems", "Steinitz witness keeps the vertex strongly inside", [&](Probe& p) {
      for (auto [v, q] : inside) {
        const VertexSet w = steinitz_witness(sh_, v, q);
        p.expect(w.subset_of(q) && w.size() <= 4 && is_strongly_inside(sh_, v, w),
                 [&, v = v, q = q] { return "vertex " + std::to_string(v) + " query " + show(q); });
      }
    });
    run("theorems", "Radon partitions re-verify", [&](Probe& p) {
      if (n_ < 4 || n_ >= kMaxVertices) return;
      auto one = [&](VertexSet q) {
        const RadonPartition r = radon_partition(sh_, q);
        const Hypergraph grown = apply_insertion(sh_.base(), r.insertion);
        const Rank g = r.new_rank;
        p.expect(!r.part1.intersects(r.part2) && (r.part1 | r.part2) == q &&
                     conv(grown, shifted_set(r.part1, g)).hull.contains(g) &&
                     conv(grown, shifted_set(r.part2, g)).hull.contains(g),
                 [&] { return "quadruple " + show(q); });
      };
      if (n_ <= 9) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_); ++mask) {
          if (VertexSet(mask).size() == 4) one(VertexSet(mask));
        }
      } else {
        for (std::size_t s = 0; s < options_.samples; ++s) {
          VertexSet q;
          while (q.size() < 4) q.insert(random_rank());
          one(q);
        }
      }
    });
    run("theorems", "cup-cap bound is never beaten", [&](Probe& p) {
      for (auto [k, l] : {std::pair{3, 3}, {4, 4}, {3, 5}, {5, 5}}) {
        if (n_ < cup_cap_bound(k, l)) continue;
        const auto r = find_cup_or_cap(sh_, k, l);
        p.expect(r.has_value() && [&] {
          const Shape shape = classify_subset(sh_, VertexSet::from_range(r->members));
          return r->kind == Shape::cup ? is_cup(shape) && r->members.size() == std::size_t(k)
                                       : is_cap(shape) && r->members.size() == std::size_t(l);
        }(), [&] { return "k=" + std::to_string(k) + " l=" + std::to_string(l); });
      }
    });
    run("theorems", "separation results and certificates verify", [&](Probe& p) {
      for (std::size_t s = 0; s < options_.samples; ++s) {
        const VertexSet a = random_subset(), b = random_subset() - a;
        const SeparationResult r = separate(sh_, a, b);
        if (r.separator) {
          auto signs = sh_.signs();
          signs.push_back(r.separator->sign);
          p.expect(separates(r.separator->edge, a, b) && valid_signed(sh_.base().with_edge(r.separator->edge), signs),
                   [&] { return "A " + show(a) + " B " + show(b); });
          continue;
        }
        p.expect(r.failure.has_value() && certificate_holds(a, b, r.failure->d),
                 [&] { return "bad certificate for A " + show(a) + " B " + show(b); });
        if (r.failure && r.failure->common_point) {
          const Hypergraph grown = apply_insertion(sh_.base(), *r.failure->common_point);
          const Rank g = r.failure->common_point->position;
          const VertexSet d = r.failure->d;
          p.expect(conv(grown, shifted_set(a & d, g)).hull.contains(g) && conv(grown, shifted_set(b & d, g)).hull.contains(g),
                   [&] { return "common point outside a hull for A " + show(a) + " B " + show(b); });
        }
      }
    });
    run("theorems", "Kirchberger separator or small witness", [&](Probe& p) {
      for (std::size_t s = 0; s < options_.samples / 2; ++s) {
        const VertexSet a = random_subset(), b = random_subset() - a;
        try {
          const SeparatorEdge e = kirchberger_separator(sh_, a, b);
          p.expect(separates(e.edge, a, b), [&] { return "A " + show(a) + " B " + show(b); });
        } catch (const PremiseViolated& pv) {
          const VertexSet d = VertexSet::from_range(pv.witness);
          bool none = d.size() <= 4;
          for (VertexSet e : sh_.edges()) none = none && !separates(e, a & d, b & d);
          p.expect(none, [&] { return "witness " + show(d) + " is separated"; });
        }
      }
    });
    run("theorems", "hitting pair meets every edge", [&](Probe& p) {
      const auto& e = sh_.edges();
      if (e.size() > 40) return;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i; j < e.size(); ++j)
          for (std::size_t k = j; k < e.size(); ++k)
            if ((e[i] & e[j] & e[k]).empty()) return;
      const VertexSet hp = hitting_pair(sh_);
      bool hits = hp.size() <= 2;
      for (VertexSet x : e) hits = hits && x.intersects(hp);
      p.expect(hits, [&] { return "pair " + show(hp); });
    });
  }

  // Strongly inside vertices only occur inside hulls, so candidates come from conv(q) minus q.
  std::vector<std::pair<Rank, VertexSet>> strongly_inside_queries() {
    std::vector<std::pair<Rank, VertexSet>> out;
    for (std::size_t s = 0; s < options_.samples * 8 && out.size() < options_.samples; ++s) {
      const VertexSet q = random_subset();
      for (Rank v : conv(sh_, q).hull - q) {
        if (is_strongly_inside(sh_, v, q)) out.push_back({v, q});
      }
    }
    return out;
  }

  // No edge meeting d in exactly A&d or B&d can be added to the hypergraph induced on d.
  bool certificate_holds(VertexSet a, VertexSet b, VertexSet d) const {
    if (!d.subset_of(a | b)) return false;
    const SignedHypergraph local = induced(sh_, d);
    for (VertexSet side : {a & d, b & d}) {
      for (Sign sign : {Sign::top, Sign::bottom}) {
        auto signs = local.signs();
        signs.push_back(sign);
        if (valid_signed(local.base().with_edge(compress(side, d)), signs)) return false;
      }
    }
    return true;
  }

  const SignedHypergraph& sh_;
  InvariantOptions options_;
  std::mt19937_64 rng_;
  std::size_t n_;
  std::vector<InvariantResult> results_;
};

}  // namespace

std::vector<InvariantResult> check_invariants(const SignedHypergraph& sh, const InvariantOptions& options) {
  return Suite(sh, options).run_all();
}

}  // namespace pseudoconvex
