#include "pseudoconvex/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "pseudoconvex/convexity.hpp"
#include "pseudoconvex/errors.hpp"
#include "pseudoconvex/extension.hpp"
#include "pseudoconvex/extremal.hpp"
#include "pseudoconvex/generators.hpp"
#include "pseudoconvex/invariants.hpp"
#include "pseudoconvex/json_io.hpp"
#include "pseudoconvex/recognition.hpp"
#include "pseudoconvex/theorems.hpp"

namespace pseudoconvex::cli {

namespace {

std::string to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::negative: return "negative";
    case Status::premise_violated: return "premise_violated";
    case Status::input_error: return "input_error";
    case Status::internal_error: return "internal_error";
  }
  return "?";
}

// A well-formed question whose answer is "no".
struct Negative {
  std::string message;
  Json payload;
};

struct Options {
  std::string input = "-";
  std::string output;
  std::uint64_t seed = 1;
  std::string order;
  bool json = false;
  std::optional<std::size_t> max_n;

  // Per-command arguments.
  std::string name;
  std::size_t param = 0;
  std::string set, a, b, sub, partial, core, include, targets, triple, shift, mode = "closure", sign = "top";
  std::string points;
  std::size_t vertex = 0, p = 0, q = 0, position = 0, k = 3, l = 3, n = 8, m = 10, samples = 32;
  bool underlying = false, count = false, hemisphere = false;
};

struct Outcome {
  Status status = Status::ok;
  Json payload = Json::object();
  // Commands producing a hypergraph print it bare so their output can be piped on.
  bool bare = false;
};

std::vector<std::size_t> parse_list(const std::string& text, const std::string& what) {
  std::vector<std::size_t> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto lo = item.find_first_not_of(" \t");
    if (lo == std::string::npos) continue;
    const auto hi = item.find_last_not_of(" \t");
    const std::string t = item.substr(lo, hi - lo + 1);
    if (t.find_first_not_of("0123456789") != std::string::npos || t.size() > 18) {
      throw InputError(what + ": \"" + t + "\" is not a non-negative integer");
    }
    out.push_back(std::stoull(t));
  }
  return out;
}

VertexSet parse_set(const std::string& text, std::size_t n, const std::string& what) {
  VertexSet s;
  for (std::size_t r : parse_list(text, what)) {
    if (r >= n) throw InputError(what + ": rank " + std::to_string(r) + " is not below n = " + std::to_string(n));
    s.insert(r);
  }
  return s;
}

Rank parse_rank(std::size_t r, std::size_t n, const std::string& what) {
  if (r >= n) throw InputError(what + ": rank " + std::to_string(r) + " is not below n = " + std::to_string(n));
  return r;
}

std::vector<std::vector<EdgeIndex>> parse_targets(const std::string& text, std::size_t m) {
  std::vector<std::vector<EdgeIndex>> out;
  if (text.empty()) {
    for (EdgeIndex i = 0; i < m; ++i) out.push_back({i});
    return out;
  }
  std::string group;
  std::istringstream in(text);
  while (std::getline(in, group, ';')) {
    out.push_back(parse_list(group, "--targets"));
    for (EdgeIndex i : out.back()) {
      if (i >= m) throw InputError("--targets: edge " + std::to_string(i) + " does not exist (m = " + std::to_string(m) + ")");
    }
  }
  return out;
}

Sign parse_sign(const std::string& s) {
  if (s == "top") return Sign::top;
  if (s == "bottom") return Sign::bottom;
  throw InputError("--sign must be top or bottom, got \"" + s + "\"");
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-" || path.empty()) return read_all(in);
  std::ifstream file(path);
  if (!file) throw InputError("cannot open " + path);
  return read_all(file);
}

void verified(bool ok, const char* what) {
  if (!ok) throw InternalError(std::string("re-verification failed: ") + what);
}

bool accepted(const Hypergraph& h, const Signature& signs) { return !check_aba_free(underlying_family(h, signs)); }

// Loads the input hypergraph, applying --order.
class Instance {
 public:
  Instance(const Options& o, std::istream& in) {
    const std::string text = read_source(o.input, in);
    Json j = parse_json_text(text, o.input == "-" ? "stdin" : o.input);
    // Results of other commands carry their hypergraph under "hypergraph".
    if (j.is_object() && !j.contains("n") && j.contains("hypergraph")) j = j["hypergraph"];
    doc_ = parse_hypergraph(j);
    if (!o.order.empty()) {
      order_ = parse_list(o.order, "--order");
      const std::size_t n = doc_.hypergraph.vertex_count();
      std::vector<bool> seen(n);
      if (order_.size() != n) throw InputError("--order must list all " + std::to_string(n) + " vertices");
      for (std::size_t r : order_) {
        if (r >= n || seen[r]) throw InputError("--order is not a permutation of 0.." + std::to_string(n - 1));
        seen[r] = true;
      }
      doc_.hypergraph = reorder(doc_.hypergraph, order_);
      if (doc_.shift) {
        VertexSet s;
        for (Rank i = 0; i < n; ++i) {
          if (doc_.shift->contains(order_[i])) s.insert(i);
        }
        doc_.shift = s;
      }
    }
  }

  const Hypergraph& hypergraph() const { return doc_.hypergraph; }
  const HypergraphDocument& document() const { return doc_; }
  std::size_t n() const { return doc_.hypergraph.vertex_count(); }
  std::size_t m() const { return doc_.hypergraph.edge_count(); }

  // Uses the declared signs, or solves for a signature under the current order.
  SignedHypergraph signed_hypergraph() const {
    if (doc_.signs) {
      if (const auto occ = check_aba_free(underlying_family(doc_.hypergraph, *doc_.signs))) {
        throw InputError("the declared signs do not give an ABA-free family: edges " + std::to_string(occ->edge_a) +
                         " and " + std::to_string(occ->edge_b) + " at " + std::to_string(occ->x) + "<" +
                         std::to_string(occ->y) + "<" + std::to_string(occ->z));
      }
      return SignedHypergraph(doc_.hypergraph, *doc_.signs);
    }
    const OrderedRecognition r = recognize_ordered(doc_.hypergraph);
    if (!r.feasible()) {
      Json core = Json::array();
      for (const auto& c : r.core) core.push_back(to_json(c));
      throw Negative{"no signature makes the input a pseudohalfplane hypergraph in this order", {{"core", core}}};
    }
    return SignedHypergraph(doc_.hypergraph, *r.signature);
  }

  HemisphereHypergraph hemisphere(const SearchOptions& search) const {
    if (doc_.signs && doc_.shift) return HemisphereHypergraph(doc_.hypergraph, *doc_.shift, *doc_.signs);
    std::vector<Rank> identity(n());
    for (Rank i = 0; i < n(); ++i) identity[i] = i;
    const auto r = recognize_hemisphere(doc_.hypergraph, identity, doc_.shift, search);
    if (!r) throw Negative{"the input is not a pseudohemisphere hypergraph in this order", Json::object()};
    return HemisphereHypergraph(doc_.hypergraph, r->shift, r->signature);
  }

  // Maps ranks of the loaded (reordered) hypergraph back to input vertex indices.
  std::vector<std::size_t> original(const std::vector<Rank>& ranks) const {
    if (order_.empty()) return ranks;
    std::vector<std::size_t> out;
    for (Rank r : ranks) out.push_back(order_[r]);
    return out;
  }

 private:
  HypergraphDocument doc_;
  std::vector<std::size_t> order_;
};

SearchOptions search_options(const Options& o, std::size_t fallback) { return {o.max_n.value_or(fallback)}; }

Json insertion_json(const VertexInsertion& ins) { return to_json(ins); }

Json hemisphere_witness(const HemisphereRecognition& r) {
  return {{"order", r.order}, {"shift", to_json(r.shift)}, {"signature", to_json(r.signature)}};
}

Outcome negative(Json payload) { return {Status::negative, std::move(payload), false}; }

Outcome bare(Json hypergraph) { return {Status::ok, std::move(hypergraph), true}; }

using Handler = std::function<Outcome(const Options&, std::istream&)>;

Outcome check_aba(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  const Hypergraph h = o.underlying ? underlying_family(inst.signed_hypergraph()) : inst.hypergraph();
  const auto occ = check_aba_free(h);
  if (occ) return negative({{"aba_free", false}, {"occurrence", to_json(*occ)}});
  return {Status::ok, {{"aba_free", true}}};
}

Outcome recognize_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  const Hypergraph& h = inst.hypergraph();
  if (o.count) {
    const std::size_t c = count_recognized_orders(h, search_options(o, 10));
    Json payload{{"count", c}};
    return c == 0 ? negative(payload) : Outcome{Status::ok, payload};
  }
  if (!o.order.empty()) {
    const OrderedRecognition r = recognize_ordered(h);
    std::vector<Rank> identity(inst.n());
    for (Rank i = 0; i < inst.n(); ++i) identity[i] = i;
    if (!r.feasible()) {
      Json core = Json::array();
      for (const auto& c : r.core) core.push_back(to_json(c));
      return negative({{"order", inst.original(identity)}, {"core", core}});
    }
    verified(accepted(h, *r.signature), "signature");
    return {Status::ok, {{"order", inst.original(identity)}, {"signature", to_json(*r.signature)}, {"verified", true}}};
  }
  const auto r = recognize(h, search_options(o, 10));
  if (!r) return negative({{"orders_tried", "all"}});
  verified(accepted(reorder(h, r->order), r->signature), "signature");
  Json payload{{"order", r->order}, {"signature", to_json(r->signature)}, {"verified", true}};
  if (!h.names().empty()) {
    std::vector<std::string> names;
    for (Rank v : r->order) names.push_back(h.names()[v]);
    payload["order_names"] = names;
  }
  return {Status::ok, payload};
}

Outcome recognize_hemisphere_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  std::optional<std::vector<Rank>> order;
  if (!o.order.empty()) {
    order.emplace(inst.n());
    for (Rank i = 0; i < inst.n(); ++i) (*order)[i] = i;
  }
  std::optional<VertexSet> shift;
  if (!o.shift.empty()) shift = parse_set(o.shift, inst.n(), "--shift");
  const auto r = recognize_hemisphere(inst.hypergraph(), order, shift, search_options(o, 10));
  if (!r) return negative({{"hemisphere", false}});
  HemisphereHypergraph(reorder(inst.hypergraph(), r->order), r->shift, r->signature);
  Json payload = hemisphere_witness(*r);
  if (order) payload["order"] = inst.original(r->order);
  payload["verified"] = true;
  return {Status::ok, payload};
}

Outcome extremal_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  return {Status::ok, to_json(extremal_profile(inst.signed_hypergraph()))};
}

Outcome orient_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  const auto t = parse_list(o.triple, "--triple");
  if (t.size() != 3) throw InputError("--triple needs three ranks a,b,c");
  for (std::size_t r : t) parse_rank(r, inst.n(), "--triple");
  if (!(t[0] < t[1] && t[1] < t[2])) throw InputError("--triple needs a < b < c");
  const Orientation or_ = orient_triple(inst.signed_hypergraph(), t[0], t[1], t[2]);
  return {Status::ok, {{"orientation", std::string(pseudoconvex::to_string(or_))}}};
}

Outcome classify_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  const VertexSet s = parse_set(o.set, inst.n(), "--set");
  if (s.empty()) throw InputError("--set must not be empty");
  return {Status::ok, {{"shape", std::string(pseudoconvex::to_string(classify_subset(inst.signed_hypergraph(), s)))}}};
}

Outcome hull_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  const ConvexHullResult r = conv(inst.hypergraph(), parse_set(o.set, inst.n(), "--set"));
  return {Status::ok, {{"hull", to_json(r.hull)}, {"definers", r.definers}}};
}

Outcome convex_sets_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  EnumerationMode mode;
  if (o.mode == "closure") {
    mode = EnumerationMode::closure;
  } else if (o.mode == "subsets") {
    mode = EnumerationMode::subsets;
  } else {
    throw InputError("--mode must be closure or subsets");
  }
  const auto sets = enumerate_convex_sets(inst.hypergraph(), mode);
  Json list = Json::array();
  for (VertexSet s : sets) list.push_back(to_json(s));
  return {Status::ok, {{"count", sets.size()}, {"sets", list}}};
}

Outcome inside_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  const SignedHypergraph sh = inst.signed_hypergraph();
  const Rank v = parse_rank(o.vertex, inst.n(), "--vertex");
  const VertexSet q = parse_set(o.set, inst.n(), "--set");
  if (q.contains(v)) throw InputError("--vertex must not be in --set");
  const bool strong = is_strongly_inside(sh, v, q);
  Json payload{{"strongly_inside", strong}, {"in_hull", conv(sh, q).hull.contains(v)}};
  return strong ? Outcome{Status::ok, payload} : negative(payload);
}

Outcome extend_vertex_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  const SignedHypergraph sh = inst.signed_hypergraph();
  if (o.position > inst.n()) throw InputError("--position must be at most n = " + std::to_string(inst.n()));
  std::vector<EdgeIndex> core = parse_list(o.core, "--core");
  VertexInsertion seed{o.position, std::vector<bool>(inst.m())};
  for (EdgeIndex i : core) {
    if (i >= inst.m()) throw InputError("--core: edge " + std::to_string(i) + " does not exist");
  }
  for (EdgeIndex i : parse_list(o.include, "--include")) {
    if (std::find(core.begin(), core.end(), i) == core.end()) throw InputError("--include must be a subset of --core");
    seed.membership[i] = true;
  }
  const VertexInsertion ins = extend_vertex(sh, core, seed);
  const SignedHypergraph grown = apply_insertion(sh, ins);
  verified(accepted(grown.base(), grown.signs()), "extension");
  return {Status::ok, {{"insertion", insertion_json(ins)}, {"verified", true}, {"hypergraph", to_json(grown)}}};
}

Outcome extend_edge_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  const SignedHypergraph sh = inst.signed_hypergraph();
  const VertexSet sub = parse_set(o.sub, inst.n(), "--sub");
  const VertexSet partial = parse_set(o.partial, inst.n(), "--partial");
  const Sign sign = parse_sign(o.sign);
  const VertexSet e = extend_hyperedge(sh, sub, partial, sign);
  const SignedHypergraph grown = sh.with_edge(e, sign);
  verified((e & sub) == (partial & sub), "edge restriction");
  return {Status::ok, {{"edge", to_json(e)}, {"sign", std::string(pseudoconvex::to_string(sign))}, {"verified", true},
                       {"hypergraph", to_json(grown)}}};
}

Outcome levi_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  const SignedHypergraph sh = inst.signed_hypergraph();
  const LeviResult r = discrete_levi(sh, parse_rank(o.p, inst.n(), "--p"), parse_rank(o.q, inst.n(), "--q"));
  verified((r.x & VertexSet{r.p, r.p_copy, r.q, r.q_copy}) == VertexSet{r.p, r.q}, "Levi edge");
  const SignedHypergraph grown = r.duplicated.with_edge(r.x, Sign::top);
  return {Status::ok,
          {{"p", r.p}, {"p_copy", r.p_copy}, {"q", r.q}, {"q_copy", r.q_copy}, {"x", to_json(r.x)}, {"verified", true},
           {"hypergraph", to_json(grown)}}};
}

Json premise_payload(const PremiseViolated& e) {
  return {{"message", e.what()}, {"witness_kind", e.witness_kind}, {"witness", e.witness}};
}

Outcome helly_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  const SignedHypergraph sh = inst.signed_hypergraph();
  const auto targets = parse_targets(o.targets, inst.m());
  const HellyExtension r = helly_extend(sh, targets);
  const SignedHypergraph grown = apply_insertion(sh, r.insertion);
  for (const auto& t : targets) verified(target_set(grown.base(), t).contains(r.new_rank), "target membership");
  return {Status::ok, {{"insertion", insertion_json(r.insertion)}, {"new_rank", r.new_rank}, {"verified", true},
                       {"hypergraph", to_json(grown)}}};
}

Outcome helly_hemisphere_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  const HemisphereHypergraph hh = inst.hemisphere(search_options(o, 10));
  const auto targets = parse_targets(o.targets, inst.m());
  const HemisphereExtension r = hemisphere_helly_extend(hh, targets);
  for (const auto& t : targets) verified(target_set(r.result.base(), t).contains(r.new_rank), "target membership");
  return {Status::ok, {{"insertion", insertion_json(r.insertion)}, {"new_rank", r.new_rank},
                       {"joins_shift", r.joins_shift}, {"verified", true}, {"hypergraph", to_json(r.result)}}};
}

Outcome saturate_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  return bare(to_json(saturate(inst.signed_hypergraph(), o.max_n.value_or(12))));
}

Outcome steinitz_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  const SignedHypergraph sh = inst.signed_hypergraph();
  const Rank v = parse_rank(o.vertex, inst.n(), "--vertex");
  const VertexSet w = steinitz_witness(sh, v, parse_set(o.set, inst.n(), "--set"));
  verified(w.size() <= 4 && is_strongly_inside(sh, v, w), "Steinitz witness");
  return {Status::ok, {{"witness", to_json(w)}, {"verified", true}}};
}

Outcome caratheodory_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  const SignedHypergraph sh = inst.signed_hypergraph();
  const Rank v = parse_rank(o.vertex, inst.n(), "--vertex");
  const CaratheodoryTriple t = caratheodory_witness(sh, v, parse_set(o.set, inst.n(), "--set"));
  verified(t.members.size() <= 3 && conv(sh, t.members).hull.contains(v), "Caratheodory witness");
  return {Status::ok, {{"members", to_json(t.members)}, {"verified", true}}};
}

Outcome separate_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  const SignedHypergraph sh = inst.signed_hypergraph();
  const VertexSet a = parse_set(o.a, inst.n(), "--a"), b = parse_set(o.b, inst.n(), "--b");
  const SeparationResult r = separate(sh, a, b);
  Json payload{{"a_between_b", std::string(pseudoconvex::to_string(r.a_between_b))},
               {"b_between_a", std::string(pseudoconvex::to_string(r.b_between_a))}};
  if (r.separator) {
    verified(separates(r.separator->edge, a, b), "separator");
    sh.with_edge(r.separator->edge, r.separator->sign);
    payload["separator"] = {{"edge", to_json(r.separator->edge)},
                            {"sign", std::string(pseudoconvex::to_string(r.separator->sign))}};
    payload["verified"] = true;
    return {Status::ok, payload};
  }
  Json failure{{"d", to_json(r.failure->d)}};
  if (r.failure->common_point) failure["common_point"] = insertion_json(*r.failure->common_point);
  payload["cannot_separate"] = failure;
  return negative(payload);
}

Outcome kirchberger_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  const SignedHypergraph sh = inst.signed_hypergraph();
  const VertexSet a = parse_set(o.a, inst.n(), "--a"), b = parse_set(o.b, inst.n(), "--b");
  const SeparatorEdge e = kirchberger_separator(sh, a, b);
  verified(separates(e.edge, a, b), "separator");
  sh.with_edge(e.edge, e.sign);
  return {Status::ok, {{"separator", {{"edge", to_json(e.edge)}, {"sign", std::string(pseudoconvex::to_string(e.sign))}}},
                       {"verified", true}}};
}

Outcome radon_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  const SignedHypergraph sh = inst.signed_hypergraph();
  const RadonPartition r = radon_partition(sh, parse_set(o.set, inst.n(), "--set"));
  const Hypergraph grown = apply_insertion(sh.base(), r.insertion);
  verified(conv(grown, shifted_set(r.part1, r.new_rank)).hull.contains(r.new_rank) &&
               conv(grown, shifted_set(r.part2, r.new_rank)).hull.contains(r.new_rank),
           "Radon vertex");
  Json payload{{"part1", to_json(r.part1)}, {"part2", to_json(r.part2)}, {"insertion", insertion_json(r.insertion)},
               {"new_rank", r.new_rank}};
  if (r.duplicate_of) payload["duplicate_of"] = *r.duplicate_of;
  payload["verified"] = true;
  return {Status::ok, payload};
}

Outcome cupcap_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  const SignedHypergraph sh = inst.signed_hypergraph();
  if (o.k < 2 || o.l < 2) throw InputError("--k and --l must be at least 2");
  const auto r = find_cup_or_cap(sh, o.k, o.l);
  if (!r) return negative({{"found", false}, {"n", inst.n()}, {"bound", cup_cap_bound(o.k, o.l)}});
  const Shape s = classify_subset(sh, VertexSet::from_range(r->members));
  verified(r->kind == Shape::cup ? is_cup(s) : is_cap(s), "cup/cap");
  return {Status::ok, {{"kind", std::string(pseudoconvex::to_string(r->kind))}, {"members", r->members},
                       {"used_fallback", r->used_fallback}, {"verified", true}}};
}

Outcome hitting_pair_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  const SignedHypergraph sh = inst.signed_hypergraph();
  const VertexSet hp = hitting_pair(sh);
  for (VertexSet e : sh.edges()) verified(e.intersects(hp), "hitting pair");
  return {Status::ok, {{"pair", to_json(hp)}, {"verified", true}}};
}

Outcome cover_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  const HemisphereHypergraph hh = inst.hemisphere(search_options(o, 10));
  const VertexSet q = parse_set(o.set, inst.n(), "--set");
  const CoverResult r = hemisphere_cover(hh, q, search_options(o, 10));
  verified(q.subset_of(r.edge), "cover");
  return {Status::ok, {{"edge", to_json(r.edge)}, {"witness", hemisphere_witness(r.witness)}, {"verified", true}}};
}

Outcome dual_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  return bare(to_json(dual(inst.hypergraph())));
}

Outcome generate_cmd(const Options& o, std::istream& in) {
  if (!o.points.empty()) {
    const PointConfiguration pc =
        shear_to_distinct_x(parse_point_configuration(parse_json_text(read_source(o.points, in), o.points)));
    return bare(to_json(from_halfplanes(pc)));
  }
  if (o.n > kMaxVertices) throw InputError("--n must be at most 64");
  if (o.hemisphere) return bare(to_json(random_hemisphere(o.n, o.m, o.seed)));
  return bare(to_json(random_instance(o.n, o.m, o.seed)));
}

Outcome builtin_cmd(const Options& o, std::istream&) {
  const BuiltinInstance b = builtin({o.name, o.param, o.seed});
  return bare(to_json(HypergraphDocument{b.hypergraph, b.signs, b.shift}));
}

Outcome verify_cmd(const Options& o, std::istream& in) {
  const Instance inst(o, in);
  const auto results = check_invariants(inst.signed_hypergraph(), {o.seed, o.samples, o.max_n.value_or(8)});
  Json list = Json::array();
  std::size_t failed = 0;
  for (const auto& r : results) {
    Json row{{"module", r.module}, {"name", r.name}, {"passed", r.passed}, {"checks", r.checks}};
    if (!r.passed) {
      row["detail"] = r.detail;
      ++failed;
    }
    list.push_back(row);
  }
  Json payload{{"passed", results.size() - failed}, {"failed", failed}, {"invariants", list}};
  return failed == 0 ? Outcome{Status::ok, payload} : negative(payload);
}

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Stable plain-text layout: one "key: value" line per field; arrays of objects become rows.
void render_text(std::ostream& out, Status status, const Json& payload) {
  out << "status: " << to_string(status) << "\n";
  for (const auto& [key, value] : payload.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << key << ":\n";
      for (const auto& row : value) {
        if (row.contains("passed") && row.contains("name")) {
          out << "  " << (row["passed"].get<bool>() ? "PASS" : "FAIL") << "  " << scalar(row["module"]) << ": "
              << scalar(row["name"]) << " (" << row["checks"].dump() << " checks)";
          if (row.contains("detail")) out << "  " << scalar(row["detail"]);
          out << "\n";
          continue;
        }
        out << " ";
        for (const auto& [k, v] : row.items()) out << " " << k << "=" << scalar(v);
        out << "\n";
      }
    } else {
      out << key << ": " << scalar(value) << "\n";
    }
  }
}

struct Command {
  const char* name;
  const char* help;
  Handler handler;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Environment& env) {
  Options o;
  CLI::App app{"Pseudohalfplane hypergraphs: recognition, convexity and constructive witnesses."};
  app.name("pseudoconvex");
  app.require_subcommand(1);
  app.add_option("--input", o.input, "hypergraph JSON file, - for stdin");
  app.add_option("--output", o.output, "write the result here instead of stdout");
  app.add_option("--seed", o.seed, "random seed");
  app.add_option("--order", o.order, "vertex order i,j,k,...: vertex i of the input becomes rank 0");
  app.add_flag("--json", o.json, "machine-readable output");
  std::size_t max_n = 0;
  auto* max_n_opt = app.add_option("--max-n", max_n, "size guard for exhaustive searches");

  const std::vector<Command> commands{
      {"check-aba", "first ABA occurrence, if any", check_aba},
      {"recognize", "find a vertex order and signature", recognize_cmd},
      {"recognize-hemisphere", "find an order, shift set and signature", recognize_hemisphere_cmd},
      {"extremal", "topvertices, bottomvertices and circular order", extremal_cmd},
      {"orient", "orientation of b relative to a and c", orient_cmd},
      {"classify", "cup / cap / both / neither", classify_cmd},
      {"hull", "convex hull of a vertex set", hull_cmd},
      {"convex-sets", "every intersection of edges", convex_sets_cmd},
      {"inside", "is a vertex strongly inside a set", inside_cmd},
      {"extend-vertex", "complete a vertex insertion", extend_vertex_cmd},
      {"extend-edge", "grow a partial edge to the whole vertex set", extend_edge_cmd},
      {"levi", "discrete Levi edge through two duplicated vertices", levi_cmd},
      {"helly", "add a vertex lying in every target convex set", helly_cmd},
      {"helly-hemisphere", "the same for a pseudohemisphere hypergraph", helly_hemisphere_cmd},
      {"saturate", "add every edge that keeps the family ABA-free", saturate_cmd},
      {"steinitz", "at most four vertices keeping v strongly inside", steinitz_cmd},
      {"caratheodory", "at most three extremal vertices whose hull holds v", caratheodory_cmd},
      {"separate", "separating edge or obstruction", separate_cmd},
      {"kirchberger", "separating edge when every small subset is separated", kirchberger_cmd},
      {"radon", "Radon partition of four vertices", radon_cmd},
      {"cupcap", "a k-cup or an l-cap", cupcap_cmd},
      {"hitting-pair", "at most two vertices meeting every edge", hitting_pair_cmd},
      {"cover", "new hemisphere edge containing a set", cover_cmd},
      {"dual", "dual hypergraph (reversed incidence)", dual_cmd},
      {"generate", "random halfplane instance or points file", generate_cmd},
      {"builtin", "named construction", builtin_cmd},
      {"verify", "run the invariant suite", verify_cmd},
  };
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    const std::string name = c.name;
    if (name == "check-aba") sub->add_flag("--underlying", o.underlying, "check the signed underlying family");
    if (name == "recognize") sub->add_flag("--count", o.count, "count accepted orders instead");
    if (name == "recognize-hemisphere") sub->add_option("--shift", o.shift, "fix the shift set");
    if (name == "orient") sub->add_option("--triple", o.triple, "a,b,c with a<b<c")->required();
    if (name == "classify" || name == "hull" || name == "radon" || name == "cover") {
      sub->add_option("--set", o.set, "vertex ranks")->required();
    }
    if (name == "convex-sets") sub->add_option("--mode", o.mode, "closure or subsets");
    if (name == "inside" || name == "steinitz" || name == "caratheodory") {
      sub->add_option("--vertex", o.vertex, "query vertex")->required();
      sub->add_option("--set", o.set, "query set")->required();
    }
    if (name == "extend-vertex") {
      sub->add_option("--position", o.position, "gap 0..n")->required();
      sub->add_option("--core", o.core, "edges whose membership is fixed");
      sub->add_option("--include", o.include, "core edges that receive the vertex");
    }
    if (name == "extend-edge") {
      sub->add_option("--sub", o.sub, "vertices already decided");
      sub->add_option("--partial", o.partial, "members among them");
      sub->add_option("--sign", o.sign, "top or bottom");
    }
    if (name == "levi") {
      sub->add_option("--p", o.p)->required();
      sub->add_option("--q", o.q)->required();
    }
    if (name == "helly" || name == "helly-hemisphere") {
      sub->add_option("--targets", o.targets, "edge groups 0,1;2;... (default: each edge)");
    }
    if (name == "separate" || name == "kirchberger") {
      sub->add_option("--a", o.a, "first set")->required();
      sub->add_option("--b", o.b, "second set")->required();
    }
    if (name == "cupcap") {
      sub->add_option("--k", o.k, "cup size");
      sub->add_option("--l", o.l, "cap size");
    }
    if (name == "generate") {
      sub->add_option("--n", o.n, "vertices");
      sub->add_option("--m", o.m, "edges");
      sub->add_flag("--hemisphere", o.hemisphere, "xor the edges with a random shift set");
      sub->add_option("--points", o.points, "point configuration JSON to ingest instead");
    }
    if (name == "builtin") {
      sub->add_option("name", o.name, "one of: no21 no21plus cara hemisphere14 hemisphere15 convex_position "
                                      "parabola collinear arrangement")
          ->required();
      sub->add_option("param", o.param, "size parameter");
    }
    if (name == "verify") sub->add_option("--samples", o.samples, "random queries per invariant");
  }

  Status status = Status::ok;
  Json payload = Json::object();
  bool bare_output = false;
  std::string message;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "input_error: " << e.what() << "\n";
    return static_cast<int>(Status::input_error);
  }

  try {
    if (max_n_opt->count() > 0) {
      o.max_n = max_n;
    } else if (env.max_n) {
      const auto v = parse_list(*env.max_n, "PSEUDOCONVEX_MAX_N");
      if (v.size() != 1) throw InputError("PSEUDOCONVEX_MAX_N must be one integer");
      o.max_n = v[0];
    }
    for (const Command& c : commands) {
      if (app.got_subcommand(c.name)) {
        Outcome r = c.handler(o, in);
        status = r.status;
        payload = std::move(r.payload);
        bare_output = r.bare;
      }
    }
  } catch (const Negative& e) {
    status = Status::negative;
    payload = e.payload;
    message = e.message;
  } catch (const InputError& e) {
    status = Status::input_error;
    message = e.what();
  } catch (const PremiseViolated& e) {
    status = Status::premise_violated;
    payload = premise_payload(e);
    message = e.what();
  } catch (const ExtensionFailed& e) {
    status = Status::premise_violated;
    payload = {{"message", e.what()}, {"item", e.item}};
    if (e.if_included) payload["if_included"] = to_json(*e.if_included);
    if (e.if_excluded) payload["if_excluded"] = to_json(*e.if_excluded);
    message = e.what();
  } catch (const std::exception& e) {
    status = Status::internal_error;
    message = e.what();
  }

  if (status == Status::input_error || status == Status::internal_error) {
    err << to_string(status) << ": " << message << "\n";
    if (!o.json) return static_cast<int>(status);
    payload = {{"error", message}};
  }

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) {
      err << "input_error: cannot write " << o.output << "\n";
      return static_cast<int>(Status::input_error);
    }
  }
  std::ostream& sink = o.output.empty() ? out : file;
  if (bare_output) {
    sink << payload.dump() << "\n";
  } else if (o.json) {
    Json doc{{"status", to_string(status)}};
    if (!message.empty() && !payload.contains("message") && !payload.contains("error")) doc["message"] = message;
    for (const auto& [key, value] : payload.items()) doc[key] = value;
    sink << doc.dump(2) << "\n";
  } else {
    if (!message.empty()) payload["message"] = message;
    render_text(sink, status, payload);
  }
  return static_cast<int>(status);
}

}  // namespace pseudoconvex::cli
