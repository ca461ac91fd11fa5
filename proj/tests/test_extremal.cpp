#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pseudoconvex/generators.hpp"
#include "pseudoconvex/extremal.hpp"

using namespace pseudoconvex;

namespace {

SignedHypergraph topsets(std::size_t n, std::vector<VertexSet> edges) {
  std::vector<Sign> signs(edges.size(), Sign::top);
  return SignedHypergraph(Hypergraph(n, std::move(edges)), std::move(signs));
}

SignedHypergraph cara() {
  const BuiltinInstance b = builtin({"cara", 5, 1});
  return SignedHypergraph(b.hypergraph, *b.signs);
}

}  // namespace

TEST_SUITE("extremal") {
  TEST_CASE("no edges: everything is extremal") {
    const ExtremalProfile p = extremal_profile(topsets(3, {}));
    CHECK(p.top == VertexSet{0, 1, 2});
    CHECK(p.bottom == VertexSet{0, 1, 2});
    // The middle vertex sits on both hulls and so appears twice.
    CHECK(p.circular == std::vector<Rank>{0, 1, 2, 1});
  }

  TEST_CASE("Caratheodory example: only the endpoints are topvertices") {
    const SignedHypergraph sh = cara();
    CHECK(sh.edges() == std::vector<VertexSet>{VertexSet{0, 1, 2, 3, 4}, VertexSet{0, 1, 3}, VertexSet{0, 1, 4},
                                               VertexSet{0, 3, 4}, VertexSet{1, 3, 4}});
    const ExtremalProfile p = extremal_profile(sh);
    CHECK(p.top == VertexSet{0, 4});
    const auto o = oracle::hulls(5, sh.edges(), sh.signs());
    CHECK(p.bottom == o.bottom);
    CHECK(p.bottom == VertexSet{0, 2, 4});
  }

  TEST_CASE("a singleton topset skips nothing") {
    CHECK(extremal_profile(topsets(3, {VertexSet{1}})).top == VertexSet{0, 1, 2});
  }

  TEST_CASE("orient_triple") {
    CHECK(orient_triple(topsets(3, {}), 0, 1, 2) == Orientation::both);
    CHECK(orient_triple(topsets(3, {VertexSet{0, 2}}), 0, 1, 2) == Orientation::below);
    // (0,0), (1,1), (2,0) with y < 1/2 and y > 1/2.
    const PointConfiguration pc{{{0, 0}, {1, 1}, {2, 0}},
                                {{0, 1, Rational(-1, 2), Side::below}, {0, 1, Rational(-1, 2), Side::above}}};
    const SignedHypergraph sh = from_halfplanes(pc);
    CHECK(sh.edges() == std::vector<VertexSet>{VertexSet{0, 2}, VertexSet{1}});
    CHECK(orient_triple(sh, 0, 1, 2) == Orientation::above);
    // Outer vertices mirror the middle one.
    CHECK(orient(sh, 1, 0, 2) == Orientation::above);
    CHECK(orient(sh, 2, 0, 1) == Orientation::below);
    CHECK(orient(sh, 0, 1, 2) == Orientation::below);
  }

  TEST_CASE("classify_subset") {
    CHECK(classify_subset(topsets(4, {}), VertexSet{0, 2, 3}) == Shape::both);
    CHECK(classify_subset(cara(), VertexSet{0, 1, 3}) == Shape::cup);
    CHECK(classify_subset(cara(), VertexSet{1, 3}) == Shape::both);
    const BuiltinInstance parabola = builtin({"parabola", 5, 1});
    const SignedHypergraph sh(parabola.hypergraph, *parabola.signs);
    for (std::uint64_t mask = 1; mask < 32; ++mask) CHECK(is_cup(classify_subset(sh, VertexSet(mask))));
    CHECK(classify_subset(sh, sh.all()) == Shape::cup);
  }

  TEST_CASE("property: profile, orientation and shape match the definitions") {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
      const std::size_t n = 1 + seed % 10;
      const SignedHypergraph sh = random_instance(n, 1 + seed % 12, seed);
      const ExtremalProfile p = extremal_profile(sh);
      const auto o = oracle::hulls(n, sh.edges(), sh.signs());
      CHECK(p.top == o.top);
      CHECK(p.bottom == o.bottom);
      CHECK(p.top.contains(0));
      CHECK(p.bottom.contains(n - 1));
      if (n >= 3) CHECK(p.extremal().size() >= 3);
      std::mt19937_64 rng(seed);
      for (int t = 0; t < 10 && n >= 3; ++t) {
        Rank x[3] = {rng() % n, rng() % n, rng() % n};
        std::sort(x, x + 3);
        if (x[0] == x[1] || x[1] == x[2]) continue;
        const VertexSet tri{x[0], x[1], x[2]};
        const auto local = oracle::hulls(3, oracle::restrict(sh.edges(), tri), sh.signs());
        const Orientation want = local.top.contains(1) && local.bottom.contains(1) ? Orientation::both
                                 : local.top.contains(1)                             ? Orientation::above
                                                                                     : Orientation::below;
        CHECK(orient_triple(sh, x[0], x[1], x[2]) == want);
        const VertexSet a = VertexSet(rng()) & sh.all();
        if (a.empty()) continue;
        const Shape s = classify_subset(sh, a);
        if (a.size() > 2) {
          CHECK(is_cup(s) == oracle::is_cup(sh.edges(), sh.signs(), a));
          CHECK(is_cap(s) == oracle::is_cap(sh.edges(), sh.signs(), a));
        } else {
          CHECK(s == Shape::both);
        }
      }
    }
  }
}
