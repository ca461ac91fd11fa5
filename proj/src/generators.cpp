#include "pseudoconvex/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "pseudoconvex/errors.hpp"
#include "pseudoconvex/recognition.hpp"

namespace pseudoconvex {

using boost::multiprecision::cpp_int;

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto integer = [&](const std::string& s) {
    const bool ok = !s.empty() && std::all_of(s.begin() + (s[0] == '-' || s[0] == '+' ? 1 : 0), s.end(),
                                              [](char ch) { return ch >= '0' && ch <= '9'; }) &&
                    s != "-" && s != "+";
    if (!ok) throw InputError("not a rational number: \"" + text + "\"");
    return cpp_int(s[0] == '+' ? s.substr(1) : s);
  };
  const cpp_int d = integer(den);
  if (d == 0) throw InputError("zero denominator in \"" + text + "\"");
  return Rational(integer(num), d);
}

std::string format_rational(const Rational& r) { return r.str(); }

namespace {

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

Rational value_at(const Line& l, const Point& p) { return l.a * p.x + l.b * p.y + l.c; }

std::string describe(const Point& p) { return "(" + format_rational(p.x) + ", " + format_rational(p.y) + ")"; }

std::vector<std::size_t> x_order(const std::vector<Point>& points) {
  std::vector<std::size_t> idx(points.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return points[i].x < points[j].x; });
  return idx;
}

struct Vec {
  Rational x, y;
};

Rational cross(const Vec& a, const Vec& b) { return a.x * b.y - a.y * b.x; }

bool upper_half(const Vec& v) { return v.y > 0 || (v.y == 0 && v.x > 0); }

// Strict angular order starting from the positive x axis.
bool angle_less(const Vec& a, const Vec& b) {
  const bool ua = upper_half(a), ub = upper_half(b);
  if (ua != ub) return ua;
  return cross(a, b) > 0;
}

bool same_direction(const Vec& a, const Vec& b) { return upper_half(a) == upper_half(b) && cross(a, b) == 0; }

}  // namespace

bool strictly_on_side(const Line& line, const Point& p) {
  const int s = sign_of(value_at(line, p)) * sign_of(line.b);
  return line.side == Side::above ? s > 0 : s < 0;
}

SignedHypergraph from_halfplanes(const PointConfiguration& pc) {
  const std::size_t n = pc.points.size();
  if (n > kMaxVertices) throw InputError("at most 64 points are supported, got " + std::to_string(n));
  const auto order = x_order(pc.points);
  for (std::size_t k = 1; k < n; ++k) {
    if (pc.points[order[k]].x == pc.points[order[k - 1]].x) {
      throw InputError("points " + std::to_string(order[k - 1]) + " " + describe(pc.points[order[k - 1]]) + " and " +
                       std::to_string(order[k]) + " " + describe(pc.points[order[k]]) + " share an x-coordinate");
    }
  }
  std::vector<VertexSet> edges;
  std::vector<Sign> signs;
  for (std::size_t li = 0; li < pc.lines.size(); ++li) {
    const Line& line = pc.lines[li];
    if (line.b == 0) throw InputError("line " + std::to_string(li) + " is vertical (b = 0)");
    VertexSet e;
    for (Rank r = 0; r < n; ++r) {
      const Point& p = pc.points[order[r]];
      if (value_at(line, p) == 0) {
        throw InputError("point " + std::to_string(order[r]) + " " + describe(p) + " lies on line " + std::to_string(li));
      }
      if (strictly_on_side(line, p)) e.insert(r);
    }
    edges.push_back(e);
    signs.push_back(line.side == Side::above ? Sign::top : Sign::bottom);
  }
  Hypergraph h(n, std::move(edges));
  if (check_aba_free(underlying_family(h, signs))) {
    throw InternalError("halfplane hypergraph is not ABA-free under the x order");
  }
  return SignedHypergraph(std::move(h), std::move(signs));
}

PointConfiguration shear_to_distinct_x(const PointConfiguration& pc) {
  std::set<std::pair<Rational, Rational>> seen;
  for (const Point& p : pc.points) {
    if (!seen.insert({p.x, p.y}).second) throw InputError("repeated point " + describe(p));
  }
  auto distinct_x = [](const std::vector<Point>& pts) {
    std::set<Rational> xs;
    for (const Point& p : pts) xs.insert(p.x);
    return xs.size() == pts.size();
  };
  if (distinct_x(pc.points)) return pc;
  Rational eps(1, 2);
  for (int attempt = 0; attempt < 256; ++attempt, eps /= 2) {
    PointConfiguration out;
    for (const Point& p : pc.points) out.points.push_back({p.x + eps * p.y, p.y});
    bool ok = distinct_x(out.points);
    for (const Line& l : pc.lines) {
      const Rational b = l.b - l.a * eps;
      if (sign_of(b) != sign_of(l.b)) ok = false;
      out.lines.push_back({l.a, b, l.c, l.side});
    }
    if (ok) return out;
  }
  throw InputError("could not shear the points to distinct x-coordinates");
}

std::vector<Line> all_halfplanes(const std::vector<Point>& points) {
  const std::size_t n = points.size();
  std::vector<Vec> critical;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec normal{-(points[j].y - points[i].y), points[j].x - points[i].x};
      if (normal.x == 0 && normal.y == 0) continue;
      critical.push_back(normal);
      critical.push_back({-normal.x, -normal.y});
    }
  }
  std::sort(critical.begin(), critical.end(), angle_less);
  critical.erase(std::unique(critical.begin(), critical.end(), same_direction), critical.end());

  // One direction strictly inside each angular gap between consecutive critical directions.
  std::vector<Vec> samples;
  if (critical.empty()) {
    samples = {{Rational(0), Rational(1)}, {Rational(0), Rational(-1)}};
  }
  for (std::size_t k = 0; k < critical.size(); ++k) {
    const Vec& d0 = critical[k];
    const Vec& d1 = critical[(k + 1) % critical.size()];
    std::vector<Vec> options;
    if (critical.size() > 1 && cross(d0, d1) > 0) {
      options = {{d0.x + d1.x, d0.y + d1.y}, {2 * d0.x + d1.x, 2 * d0.y + d1.y}, {d0.x + 2 * d1.x, d0.y + 2 * d1.y}};
    } else {
      const Vec r{-d0.y, d0.x};
      options = {r, {2 * r.x + d0.x, 2 * r.y + d0.y}, {r.x + 2 * d0.x, r.y + 2 * d0.y}};
    }
    for (const Vec& u : options) {
      if (u.y != 0) {
        samples.push_back(u);
        break;
      }
    }
  }

  const auto order = x_order(points);
  std::set<std::pair<std::uint64_t, Side>> seen;
  std::vector<Line> lines;
  for (const Vec& u : samples) {
    std::vector<std::pair<Rational, Rank>> values;
    for (Rank r = 0; r < n; ++r) values.push_back({u.x * points[order[r]].x + u.y * points[order[r]].y, r});
    std::sort(values.begin(), values.end());
    const Side side = u.y > 0 ? Side::above : Side::below;
    // Threshold k keeps the points with value above the k-th smallest.
    for (std::size_t k = 0; k <= n; ++k) {
      VertexSet s;
      for (std::size_t t = k; t < n; ++t) s.insert(values[t].second);
      if (!seen.insert({s.bits(), side}).second) continue;
      Rational threshold;
      if (n == 0) threshold = 0;
      else if (k == 0) threshold = values[0].first - 1;
      else if (k == n) threshold = values[n - 1].first + 1;
      else threshold = (values[k - 1].first + values[k].first) / 2;
      lines.push_back({u.x, u.y, -threshold, side});
    }
  }
  return lines;
}

PointConfiguration random_configuration(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n > kMaxVertices) throw InputError("at most 64 points are supported");
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  PointConfiguration pc;
  if (n == 0) return pc;
  const auto span = static_cast<std::int64_t>(4 * n);
  std::vector<std::int64_t> xs(static_cast<std::size_t>(span) + 1);
  std::iota(xs.begin(), xs.end(), std::int64_t{0});
  for (std::size_t i = 0; i < n; ++i) std::swap(xs[i], xs[i + static_cast<std::size_t>(pick(0, span - static_cast<std::int64_t>(i)))]);
  for (std::size_t i = 0; i < n; ++i) pc.points.push_back({Rational(xs[i]), Rational(pick(-span, span))});
  // Anchoring each line half a unit off a random point keeps it close to the cloud; the
  // half-integer offset against integer coordinates rules out incidences.
  for (std::size_t j = 0; j < m; ++j) {
    const Rational a(pick(-6, 6));
    const Rational b(pick(1, 3));
    const Point& p = pc.points[static_cast<std::size_t>(pick(0, static_cast<std::int64_t>(n) - 1))];
    const Rational offset(pick(0, 1) == 0 ? -1 : 1, 2);
    const Side side = pick(0, 1) == 0 ? Side::above : Side::below;
    pc.lines.push_back({a, b, -(a * p.x + b * p.y) + offset, side});
  }
  return pc;
}

SignedHypergraph random_instance(std::size_t n, std::size_t m, std::uint64_t seed) {
  return from_halfplanes(random_configuration(n, m, seed));
}

HemisphereHypergraph random_hemisphere(std::size_t n, std::size_t m, std::uint64_t seed) {
  const SignedHypergraph sh = random_instance(n, m, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const VertexSet x = VertexSet(rng()) & sh.all();
  return HemisphereHypergraph(shift_edges(sh.base(), x), x, sh.signs());
}

PointConfiguration no21_configuration() {
  PointConfiguration pc;
  // a, v, c, b in x order.
  pc.points = {{0, 0}, {2, 1}, {Rational(21, 10), 3}, {4, 0}};
  pc.lines = {
      {0, 1, Rational(-1, 2), Side::below},   // y < 1/2: {a,b}
      {-1, 1, Rational(1, 2), Side::above},   // y > x - 1/2: {a,c}
      {1, 1, Rational(-7, 2), Side::above},   // y > 7/2 - x: {c,b}
      {0, 1, Rational(-3, 2), Side::below},   // y < 3/2: {a,v,b}
      {-1, 1, 3, Side::above},                // y > x - 3: {a,v,c}
      {1, 1, Rational(-3, 2), Side::above},   // y > 3/2 - x: {v,c,b}
  };
  return pc;
}

PointConfiguration convex_position_configuration(std::size_t n) {
  // Rational points on the unit circle: ((1-s^2)/(1+s^2), 2s/(1+s^2)).
  std::vector<Point> points;
  std::set<Rational> xs;
  for (std::size_t i = 0; i < n; ++i) {
    const double theta = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n) + 0.3;
    const Rational s(static_cast<std::int64_t>(std::llround(std::tan(theta / 2) * 1000)), 1000);
    const Point p{(1 - s * s) / (1 + s * s), 2 * s / (1 + s * s)};
    if (!xs.insert(p.x).second) throw InternalError("circle points collided in x");
    points.push_back(p);
  }
  return {points, all_halfplanes(points)};
}

PointConfiguration parabola_configuration(std::size_t n) {
  PointConfiguration pc;
  for (std::size_t i = 0; i < n; ++i) pc.points.push_back({Rational(i), Rational(i * i)});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // Just below the chord through i and j: keeps everything outside (i, j).
      pc.lines.push_back({-Rational(i + j), 1, Rational(i * j) + Rational(1, 2), Side::above});
    }
  }
  return pc;
}

PointConfiguration collinear_configuration(std::size_t n) {
  PointConfiguration pc;
  for (std::size_t i = 0; i < n; ++i) pc.points.push_back({Rational(i), 0});
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Rational c = Rational(k) + Rational(1, 2);
    pc.lines.push_back({-1, 1, c, Side::above});  // prefix 0..k
    pc.lines.push_back({-1, 1, c, Side::below});  // suffix k+1..n-1
  }
  return pc;
}

Arrangement arrangement(std::size_t k, std::uint64_t seed) {
  if (k < 1 || k > 4) throw InputError("arrangement needs 1 <= k <= 4");
  const std::size_t m = 2 * k + 1;
  const std::size_t faces = 1 + m + m * (m - 1) / 2;
  const std::size_t total = m * (m - 1) / 2 + faces;
  if (total > kMaxVertices) {
    throw InputError("arrangement with k = " + std::to_string(k) + " has " + std::to_string(total) +
                     " points, above the 64-vertex limit");
  }
  std::mt19937_64 rng(seed);
  auto pick = [&rng](std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  // Lines y = s*x + t, i.e. s*x - y + t = 0.
  std::vector<Line> lines;
  std::vector<Point> crossings;
  std::vector<std::pair<std::size_t, std::size_t>> crossing_lines;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 1000) throw InternalError("could not draw lines in general position");
    lines.clear();
    std::set<Rational> slopes;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational s(pick(-40, 40), 7), t(pick(-40, 40), 3);
      slopes.insert(s);
      lines.push_back({s, -1, t, Side::above});
    }
    if (slopes.size() != m) continue;
    crossings.clear();
    crossing_lines.clear();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        const Rational x = (lines[j].c - lines[i].c) / (lines[i].a - lines[j].a);
        crossings.push_back({x, lines[i].a * x + lines[i].c});
        crossing_lines.push_back({i, j});
      }
    }
    bool general = true;
    for (std::size_t p = 0; p < crossings.size() && general; ++p) {
      for (std::size_t l = 0; l < m && general; ++l) {
        if (l == crossing_lines[p].first || l == crossing_lines[p].second) continue;
        if (value_at(lines[l], crossings[p]) == 0) general = false;
      }
    }
    if (general) break;
  }

  auto signs = [&](const Point& p) {
    std::vector<int> s;
    for (const Line& l : lines) s.push_back(sign_of(value_at(l, p)));
    return s;
  };
  std::map<std::vector<int>, Point> face_of;
  for (std::size_t p = 0; p < crossings.size(); ++p) {
    const auto [i, j] = crossing_lines[p];
    const Vec di{1, lines[i].a}, dj{1, lines[j].a};
    const auto base = signs(crossings[p]);
    Rational eps(1, 4);
    for (int attempt = 0;; ++attempt, eps /= 2) {
      if (attempt > 200) throw InternalError("could not step into the faces around a crossing");
      std::vector<Point> around;
      bool ok = true;
      for (int si : {-1, 1}) {
        for (int sj : {-1, 1}) {
          const Point q{crossings[p].x + eps * (si * di.x + sj * dj.x), crossings[p].y + eps * (si * di.y + sj * dj.y)};
          const auto s = signs(q);
          for (std::size_t l = 0; l < m; ++l) {
            if (s[l] == 0 || (l != i && l != j && s[l] != base[l])) ok = false;
          }
          around.push_back(q);
        }
      }
      if (!ok) continue;
      for (const Point& q : around) face_of.emplace(signs(q), q);
      break;
    }
  }
  std::vector<Point> points = crossings;
  for (const auto& [key, q] : face_of) points.push_back(q);

  PointConfiguration pc{points, {}};
  pc = shear_to_distinct_x(pc);
  pc.lines = all_halfplanes(pc.points);

  Arrangement arr;
  arr.lines = lines;
  arr.configuration = pc;
  const auto order = x_order(pc.points);
  std::vector<Rank> rank_of(order.size());
  for (Rank r = 0; r < order.size(); ++r) rank_of[order[r]] = r;
  arr.on_line.resize(m);
  for (std::size_t p = 0; p < crossings.size(); ++p) {
    arr.on_line[crossing_lines[p].first].insert(rank_of[p]);
    arr.on_line[crossing_lines[p].second].insert(rank_of[p]);
  }
  for (std::size_t p = crossings.size(); p < points.size(); ++p) arr.face_points.insert(rank_of[p]);
  return arr;
}

namespace {

Hypergraph no21plus() {
  return Hypergraph(5,
                    {VertexSet{0, 1, 4}, VertexSet{0, 2, 4}, VertexSet{1, 2, 4}, VertexSet{0, 1, 3, 4},
                     VertexSet{0, 2, 3, 4}, VertexSet{1, 2, 3, 4}},
                    {"a", "b", "c", "v", "w"});
}

SignedHypergraph cara(std::size_t n) {
  if (n < 3 || n > 20) throw InputError("cara needs 3 <= n <= 20");
  const Rank v = n / 2;
  std::vector<VertexSet> edges{VertexSet::prefix(n)};
  const VertexSet rest = VertexSet::prefix(n) - VertexSet::single(v);
  // (n-2)-subsets of rest in lexicographic order = drop one vertex of rest, last dropped first.
  const auto items = rest.to_vector();
  for (auto it = items.rbegin(); it != items.rend(); ++it) edges.push_back(rest - VertexSet::single(*it));
  std::vector<Sign> signs(edges.size(), Sign::top);
  return SignedHypergraph(Hypergraph(n, std::move(edges)), std::move(signs));
}

Hypergraph hemisphere(bool with_full) {
  std::vector<VertexSet> edges;
  for (std::uint64_t mask = 1; mask < (with_full ? 16U : 15U); ++mask) edges.emplace_back(mask);
  return Hypergraph(4, std::move(edges));
}

BuiltinInstance from_geometry(const PointConfiguration& pc, std::vector<std::string> names = {}) {
  const SignedHypergraph sh = from_halfplanes(pc);
  return {Hypergraph(sh.vertex_count(), sh.edges(), std::move(names)), sh.signs(), std::nullopt, pc};
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"no21", "no21plus", "cara", "hemisphere14", "hemisphere15", "convex_position", "parabola", "collinear",
          "arrangement"};
}

BuiltinInstance builtin(const BuiltinRequest& req) {
  auto size = [&](std::size_t fallback, std::size_t lo, std::size_t hi) {
    const std::size_t v = req.param == 0 ? fallback : req.param;
    if (v < lo || v > hi) {
      throw InputError(req.name + " needs a size in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return v;
  };
  if (req.name == "no21") return from_geometry(no21_configuration(), {"a", "v", "c", "b"});
  if (req.name == "no21plus") return {no21plus(), std::nullopt, std::nullopt, std::nullopt};
  if (req.name == "cara") {
    const SignedHypergraph sh = cara(size(5, 3, 20));
    return {sh.base(), sh.signs(), std::nullopt, std::nullopt};
  }
  if (req.name == "hemisphere14") return {hemisphere(false), std::nullopt, std::nullopt, std::nullopt};
  if (req.name == "hemisphere15") return {hemisphere(true), std::nullopt, std::nullopt, std::nullopt};
  if (req.name == "convex_position") return from_geometry(convex_position_configuration(size(5, 1, 24)));
  if (req.name == "parabola") return from_geometry(parabola_configuration(size(5, 1, 64)));
  if (req.name == "collinear") return from_geometry(collinear_configuration(size(6, 1, 64)));
  if (req.name == "arrangement") return from_geometry(arrangement(size(2, 1, 4), req.seed).configuration);
  throw InputError("unknown builtin \"" + req.name + "\"");
}

}  // namespace pseudoconvex
