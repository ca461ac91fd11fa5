#include "pseudoconvex/json_io.hpp"

#include "pseudoconvex/errors.hpp"

namespace pseudoconvex {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError((path.empty() ? std::string("document") : path) + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string at(const std::string& path, const char* key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

std::size_t parse_count(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

VertexSet parse_ranks(const Json& j, std::size_t n, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of vertex ranks");
  VertexSet s;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::size_t r = parse_count(j[i], at(path, i));
    if (r >= n) fail(at(path, i), "rank " + std::to_string(r) + " is not below n = " + std::to_string(n));
    if (s.contains(r)) fail(at(path, i), "rank " + std::to_string(r) + " repeated");
    s.insert(r);
  }
  return s;
}

Sign parse_sign(const Json& j, const std::string& path) {
  if (j == "top") return Sign::top;
  if (j == "bottom") return Sign::bottom;
  fail(path, "expected \"top\" or \"bottom\"");
}

Rational parse_number(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) fail(path, "expected an integer or a \"p/q\" string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

HypergraphDocument parse_hypergraph(const Json& j) {
  if (!j.is_object()) fail("", "expected a JSON object");
  const std::size_t n = parse_count(field(j, "n", ""), "n");
  if (n > kMaxVertices) fail("n", "at most 64 vertices are supported, got " + std::to_string(n));
  std::vector<std::string> names;
  if (const auto it = j.find("names"); it != j.end()) {
    if (!it->is_array() || it->size() != n) fail("names", "expected an array of " + std::to_string(n) + " strings");
    for (std::size_t i = 0; i < n; ++i) {
      if (!(*it)[i].is_string()) fail(at("names", i), "expected a string");
      names.push_back((*it)[i].get<std::string>());
    }
  }
  const Json& edges_json = field(j, "edges", "");
  if (!edges_json.is_array()) fail("edges", "expected an array");
  std::vector<VertexSet> edges;
  Signature signs;
  std::size_t signed_count = 0;
  for (std::size_t i = 0; i < edges_json.size(); ++i) {
    const std::string path = at("edges", i);
    const Json& e = edges_json[i];
    if (!e.is_object()) fail(path, "expected an object with \"members\"");
    edges.push_back(parse_ranks(field(e, "members", path), n, at(path, "members")));
    if (const auto s = e.find("sign"); s != e.end()) {
      signs.push_back(parse_sign(*s, at(path, "sign")));
      ++signed_count;
    }
  }
  if (signed_count != 0 && signed_count != edges.size()) {
    fail("edges", "either every edge or no edge may carry a sign (" + std::to_string(signed_count) + " of " +
                      std::to_string(edges.size()) + " do)");
  }
  HypergraphDocument doc{Hypergraph(n, std::move(edges), std::move(names)), std::nullopt, std::nullopt};
  if (signed_count != 0) doc.signs = std::move(signs);
  if (const auto it = j.find("shift"); it != j.end()) doc.shift = parse_ranks(*it, n, "shift");
  return doc;
}

Json to_json(VertexSet s) {
  Json out = Json::array();
  for (Rank r : s) out.push_back(r);
  return out;
}

Json to_json(const HypergraphDocument& doc) {
  const Hypergraph& h = doc.hypergraph;
  Json j;
  j["n"] = h.vertex_count();
  if (!h.names().empty()) j["names"] = h.names();
  j["edges"] = Json::array();
  for (EdgeIndex i = 0; i < h.edge_count(); ++i) {
    Json e;
    e["members"] = to_json(h.edge(i));
    if (doc.signs) e["sign"] = std::string(to_string((*doc.signs)[i]));
    j["edges"].push_back(e);
  }
  if (doc.shift) j["shift"] = to_json(*doc.shift);
  return j;
}

Json to_json(const Hypergraph& h) { return to_json(HypergraphDocument{h, std::nullopt, std::nullopt}); }
Json to_json(const SignedHypergraph& sh) { return to_json(HypergraphDocument{sh.base(), sh.signs(), std::nullopt}); }
Json to_json(const HemisphereHypergraph& hh) {
  return to_json(HypergraphDocument{hh.base(), hh.signs(), hh.shift()});
}

PointConfiguration parse_point_configuration(const Json& j) {
  if (!j.is_object()) fail("", "expected a JSON object");
  PointConfiguration pc;
  const Json& points = field(j, "points", "");
  if (!points.is_array()) fail("points", "expected an array");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string path = at("points", i);
    if (!points[i].is_array() || points[i].size() != 2) fail(path, "expected [x, y]");
    pc.points.push_back({parse_number(points[i][0], at(path, std::size_t{0})), parse_number(points[i][1], at(path, 1))});
  }
  const Json& lines = field(j, "lines", "");
  if (!lines.is_array()) fail("lines", "expected an array");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string path = at("lines", i);
    const Json& l = lines[i];
    if (!l.is_object()) fail(path, "expected an object with a, b, c, side");
    Line line{parse_number(field(l, "a", path), at(path, "a")), parse_number(field(l, "b", path), at(path, "b")),
              parse_number(field(l, "c", path), at(path, "c")), Side::above};
    const Json& side = field(l, "side", path);
    if (side == "below") {
      line.side = Side::below;
    } else if (side != "above") {
      fail(at(path, "side"), "expected \"above\" or \"below\"");
    }
    pc.lines.push_back(line);
  }
  return pc;
}

Json to_json(const PointConfiguration& pc) {
  Json j;
  j["points"] = Json::array();
  for (const Point& p : pc.points) j["points"].push_back({format_rational(p.x), format_rational(p.y)});
  j["lines"] = Json::array();
  for (const Line& l : pc.lines) {
    j["lines"].push_back({{"a", format_rational(l.a)},
                          {"b", format_rational(l.b)},
                          {"c", format_rational(l.c)},
                          {"side", l.side == Side::above ? "above" : "below"}});
  }
  return j;
}

Json to_json(const AbaOccurrence& occ) {
  return {{"edge_a", occ.edge_a}, {"edge_b", occ.edge_b}, {"x", occ.x}, {"y", occ.y}, {"z", occ.z}};
}

Json to_json(const PairConstraint& c) {
  Json forbidden = Json::array();
  for (std::size_t i = 0; i < c.forbidden.size(); ++i) {
    forbidden.push_back({{"labels", {to_string(c.forbidden[i].first), to_string(c.forbidden[i].second)}},
                         {"occurrence", to_json(c.occurrences[i])}});
  }
  return {{"edges", {c.first, c.second}}, {"forbidden", forbidden}};
}

Json to_json(const Signature& s) {
  Json out = Json::array();
  for (Sign x : s) out.push_back(std::string(to_string(x)));
  return out;
}

Json to_json(const ExtremalProfile& p) {
  return {{"T", to_json(p.top)}, {"B", to_json(p.bottom)}, {"circular", p.circular}};
}

Json to_json(const VertexInsertion& ins) {
  Json membership = Json::array();
  for (bool b : ins.membership) membership.push_back(b);
  return {{"position", ins.position}, {"membership", membership}};
}

}  // namespace pseudoconvex
