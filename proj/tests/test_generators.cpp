#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pseudoconvex/convexity.hpp"
#include "pseudoconvex/errors.hpp"
#include "pseudoconvex/extremal.hpp"
#include "pseudoconvex/generators.hpp"
#include "pseudoconvex/recognition.hpp"

using namespace pseudoconvex;

namespace {

// Sign of the cross product (b - a) x (c - a): positive when c is left of a->b.
int turn(const Point& a, const Point& b, const Point& c) {
  const Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

std::vector<Point> random_points(std::mt19937_64& rng, std::size_t n) {
  std::vector<Point> pts;
  std::set<long> xs;
  while (pts.size() < n) {
    const long x = static_cast<long>(rng() % 40);
    if (!xs.insert(x).second) continue;
    pts.push_back({x, static_cast<long>(rng() % 41) - 20});
  }
  std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) { return p.x < q.x; });
  return pts;
}

bool collinear_triple(const std::vector<Point>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      for (std::size_t k = j + 1; k < p.size(); ++k)
        if (turn(p[i], p[j], p[k]) == 0) return true;
  return false;
}

}  // namespace

TEST_SUITE("generators") {
  TEST_CASE("rationals") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(format_rational(Rational(-3, 2)) == "-3/2");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
    CHECK_THROWS_AS(parse_rational(""), InputError);
  }

  TEST_CASE("from_halfplanes on the triangle with its center") {
    const PointConfiguration pc = no21_configuration();
    REQUIRE(pc.points.size() == 4);
    CHECK(pc.points[1] == Point{2, 1});
    const SignedHypergraph sh = from_halfplanes(pc);
    CHECK(sh.base().edges() == builtin({"no21", 0, 1}).hypergraph.edges());
    CHECK(sh.signs() == Signature{Sign::bottom, Sign::top, Sign::top, Sign::bottom, Sign::top, Sign::top});
  }

  TEST_CASE("from_halfplanes rejects degenerate input") {
    const Line up{0, 1, 0, Side::above};
    CHECK_THROWS_AS(from_halfplanes({{{0, 1}, {0, 2}}, {up}}), InputError);
    CHECK_THROWS_AS(from_halfplanes({{{0, 1}, {1, 2}}, {Line{1, 0, 0, Side::above}}}), InputError);
    CHECK_THROWS_AS(from_halfplanes({{{0, 0}, {1, 2}}, {up}}), InputError);
    CHECK(from_halfplanes({{{1, -1}, {0, 1}}, {up}}).edges() == std::vector<VertexSet>{VertexSet{0}});
  }

  TEST_CASE("shear keeps every sidedness") {
    const PointConfiguration pc{{{0, 1}, {0, -1}, {2, 5}}, {{0, 1, Rational(-1, 2), Side::above}, {1, 1, -3, Side::below}}};
    const PointConfiguration s = shear_to_distinct_x(pc);
    std::set<Rational> xs;
    for (const Point& p : s.points) xs.insert(p.x);
    CHECK(xs.size() == 3);
    for (std::size_t l = 0; l < pc.lines.size(); ++l)
      for (std::size_t i = 0; i < pc.points.size(); ++i)
        CHECK(strictly_on_side(pc.lines[l], pc.points[i]) == strictly_on_side(s.lines[l], s.points[i]));
    CHECK_NOTHROW(from_halfplanes(s));
    CHECK_THROWS_AS(shear_to_distinct_x({{{1, 1}, {1, 1}}, {}}), InputError);
  }

  TEST_CASE("random instances are deterministic and recognized") {
    CHECK(random_instance(5, 6, 1) == random_instance(5, 6, 1));
    CHECK(random_configuration(5, 6, 1) == random_configuration(5, 6, 1));
    CHECK(random_instance(0, 3, 1).vertex_count() == 0);
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const std::size_t n = 1 + seed % 20, m = seed % 15;
      const SignedHypergraph sh = random_instance(n, m, seed);
      CHECK(sh.vertex_count() == n);
      CHECK(sh.edge_count() == m);
      CHECK(oracle::valid(n, sh.edges(), sh.signs()));
      CHECK(recognize_ordered(sh.base()).feasible());
    }
  }

  TEST_CASE("random hemisphere instances carry a valid shift") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      const std::size_t n = 1 + seed % 12;
      const HemisphereHypergraph hh = random_hemisphere(n, 1 + seed % 8, seed);
      CHECK(oracle::valid(n, shift_edges(hh.base(), hh.shift()).edges(), hh.signs()));
    }
  }

  TEST_CASE("builtins") {
    CHECK(builtin({"no21", 0, 1}).hypergraph.edge_count() == 6);
    CHECK(builtin({"no21", 0, 1}).hypergraph.names() == std::vector<std::string>{"a", "v", "c", "b"});
    CHECK(builtin({"no21plus", 0, 1}).hypergraph.vertex_count() == 5);
    CHECK_FALSE(builtin({"no21plus", 0, 1}).signs);
    const Hypergraph h14 = builtin({"hemisphere14", 0, 1}).hypergraph;
    CHECK(h14.vertex_count() == 4);
    CHECK(h14.edge_count() == 14);
    CHECK(std::set<VertexSet>(h14.edges().begin(), h14.edges().end()).size() == 14);
    CHECK(builtin({"hemisphere15", 0, 1}).hypergraph.edge_count() == 15);
    CHECK_THROWS_AS(builtin({"nonsense", 0, 1}), InputError);
    CHECK_THROWS_AS(builtin({"arrangement", 4, 1}), InputError);
    for (const std::string& name : builtin_names()) {
      if (name == "arrangement") continue;
      const BuiltinInstance b = builtin({name, 0, 1});
      if (b.signs) CHECK(oracle::valid(b.hypergraph.vertex_count(), b.hypergraph.edges(), *b.signs));
    }
  }

  TEST_CASE("cara: the middle vertex needs every other vertex") {
    for (std::size_t n = 3; n <= 9; ++n) {
      const SignedHypergraph sh = fixture::signed_builtin("cara", n);
      const Rank v = n / 2;
      const VertexSet rest = sh.all() - VertexSet::single(v);
      CHECK(conv(sh, rest).hull == sh.all());
      for (Rank drop : rest) CHECK_FALSE(conv(sh, rest - VertexSet::single(drop)).hull.contains(v));
    }
  }

  TEST_CASE("arrangement points lie on the lines they were built from") {
    const Arrangement a = arrangement(2, 3);
    CHECK(a.lines.size() == 5);
    CHECK(a.configuration.points.size() == 10 + 16);
    CHECK(a.on_line.size() == 5);
    for (VertexSet s : a.on_line) CHECK(s.size() == 4);
    CHECK(a.face_points.size() == 16);
    CHECK_NOTHROW(from_halfplanes(a.configuration));
  }

  TEST_CASE("property: every open halfplane cut is listed, and orientation matches geometry") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 3 + t % 5;
      const auto pts = random_points(rng, n);
      if (collinear_triple(pts)) continue;
      const auto lines = all_halfplanes(pts);
      const SignedHypergraph sh = from_halfplanes({pts, lines});
      std::set<VertexSet> listed(sh.edges().begin(), sh.edges().end());
      // Brute force over many small integer directions and every threshold between projections.
      for (long a = -12; a <= 12; ++a) {
        for (long b = -12; b <= 12; ++b) {
          if (b == 0) continue;
          std::vector<Rational> proj;
          for (const Point& p : pts) proj.push_back(a * p.x + b * p.y);
          std::vector<Rational> cuts = proj;
          std::sort(cuts.begin(), cuts.end());
          for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            if (cuts[i] == cuts[i + 1]) continue;
            const Rational c = (cuts[i] + cuts[i + 1]) / 2;
            VertexSet above;
            for (Rank r = 0; r < n; ++r)
              if (proj[r] > c) above.insert(r);
            CHECK(listed.count(above) == 1);
          }
        }
      }
      for (Rank i = 0; i < n; ++i)
        for (Rank j = i + 1; j < n; ++j)
          for (Rank k = j + 1; k < n; ++k) {
            const Orientation o = orient_triple(sh, i, j, k);
            // j above the segment i-k means i, k, j turn left.
            CHECK(o == (turn(pts[i], pts[k], pts[j]) > 0 ? Orientation::above : Orientation::below));
          }
    }
  }
}
