#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pseudoconvex/hypergraph.hpp"

namespace pseudoconvex {

using Rational = boost::multiprecision::cpp_rational;

// "p/q" or an integer. Throws InputError otherwise.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

struct Point {
  Rational x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

enum class Side { above, below };

// The open halfplane on `side` of a*x + b*y + c = 0, with b != 0. "above" is the side
// containing points with large y.
struct Line {
  Rational a, b, c;
  Side side = Side::above;
  friend bool operator==(const Line&, const Line&) = default;
};

bool strictly_on_side(const Line& line, const Point& p);

struct PointConfiguration {
  std::vector<Point> points;
  std::vector<Line> lines;
  friend bool operator==(const PointConfiguration&, const PointConfiguration&) = default;
};

// Vertices sorted by x; one edge per line holding the points strictly on its side, signed
// top for upper halfplanes. Rejects repeated x, b == 0 and points on a line.
SignedHypergraph from_halfplanes(const PointConfiguration& pc);

// Applies x -> x + e*y with a small exact e so that all x become distinct; lines follow the
// map so every sidedness is kept. Throws InputError on repeated points.
PointConfiguration shear_to_distinct_x(const PointConfiguration& pc);

// Every subset of the points cut off by an open halfplane, once as a topset and/or once
// as a bottomset (both when a line realizing it can be tilted either way).
std::vector<Line> all_halfplanes(const std::vector<Point>& points);

PointConfiguration random_configuration(std::size_t n, std::size_t m, std::uint64_t seed);
SignedHypergraph random_instance(std::size_t n, std::size_t m, std::uint64_t seed);

// A random instance with each edge xor-ed by a random shift set.
HemisphereHypergraph random_hemisphere(std::size_t n, std::size_t m, std::uint64_t seed);

// Named constructions:
//   no21            triangle with a center, six edges, order (a,v,c,b)
//   no21plus        the same with a fifth vertex w added to every edge, order (a,b,c,v,w)
//   cara N          all (N-2)-subsets avoiding the middle vertex, plus the whole set
//   hemisphere14    every subset of 4 vertices except the empty and the full set
//   hemisphere15    the same plus the full set
//   convex_position N   N points on a circle with every halfplane
//   parabola N      points (i, i^2) with an upper halfplane just below every chord
//   collinear N     points (i, 0) with every prefix and suffix
//   arrangement K   intersections and face points of 2K+1 random lines, every halfplane
struct BuiltinRequest {
  std::string name;
  std::size_t param = 0;  // 0 selects the default size
  std::uint64_t seed = 1;
};

struct BuiltinInstance {
  Hypergraph hypergraph;
  std::optional<std::vector<Sign>> signs;
  std::optional<VertexSet> shift;
  std::optional<PointConfiguration> geometry;
};

BuiltinInstance builtin(const BuiltinRequest& request);
std::vector<std::string> builtin_names();

PointConfiguration no21_configuration();
PointConfiguration convex_position_configuration(std::size_t n);
PointConfiguration parabola_configuration(std::size_t n);
PointConfiguration collinear_configuration(std::size_t n);

struct Arrangement {
  std::vector<Line> lines;  // the 2k+1 arrangement lines (side unused)
  PointConfiguration configuration;
  // For each arrangement line, the vertex ranks of the intersection points on it.
  std::vector<VertexSet> on_line;
  VertexSet face_points;
};

Arrangement arrangement(std::size_t k, std::uint64_t seed);

}  // namespace pseudoconvex
