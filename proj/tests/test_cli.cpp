#include <doctest.h>

#include <json.hpp>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pseudoconvex/cli.hpp"
#include "pseudoconvex/generators.hpp"
#include "pseudoconvex/json_io.hpp"

using namespace pseudoconvex;
using Json = nlohmann::ordered_json;

namespace {

struct Transcript {
  int code = 0;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Transcript run(std::vector<std::string> args, const std::string& input = "", cli::Environment env = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  Transcript t;
  t.code = cli::run(args, in, out, err, env);
  t.out = out.str();
  t.err = err.str();
  return t;
}

std::string builtin_json(const std::string& name, const std::string& param = "") {
  std::vector<std::string> args{"builtin", name};
  if (!param.empty()) args.push_back(param);
  const Transcript t = run(args);
  REQUIRE(t.code == 0);
  return t.out;
}

// Hypergraph JSON; signs are given for all edges or for none.
std::string hg(std::size_t n, const std::vector<std::vector<int>>& edges, const std::vector<std::string>& signs = {}) {
  Json j{{"n", n}, {"edges", Json::array()}};
  for (std::size_t i = 0; i < edges.size(); ++i) {
    Json e{{"members", edges[i]}};
    if (!signs.empty()) e["sign"] = signs[i];
    j["edges"].push_back(e);
  }
  return j.dump();
}

Transcript json_run(std::vector<std::string> args, const std::string& input) {
  args.push_back("--json");
  return run(args, input);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("recognize: positive, negative, counted and pinned") {
    const std::string no21 = builtin_json("no21");
    const Transcript ok = json_run({"recognize"}, no21);
    CHECK(ok.code == 0);
    CHECK(ok.json()["status"] == "ok");
    CHECK(ok.json()["verified"] == true);
    CHECK(ok.json()["order_names"].size() == 4);

    const Transcript no = json_run({"recognize"}, builtin_json("no21plus"));
    CHECK(no.code == 1);
    CHECK(no.json()["status"] == "negative");

    const Transcript pinned = json_run({"recognize", "--order", "0,1,2,3"}, no21);
    CHECK(pinned.code == 0);
    CHECK(pinned.json()["order"] == Json::array({0, 1, 2, 3}));
    const Transcript core = json_run({"recognize", "--order", "0,1,2,3,4"}, builtin_json("no21plus"));
    CHECK(core.code == 1);
    CHECK_FALSE(core.json()["core"].empty());

    CHECK(json_run({"recognize", "--count"}, builtin_json("no21plus")).code == 1);
    CHECK(json_run({"recognize", "--count"}, no21).json()["count"].get<int>() > 0);
  }

  TEST_CASE("plain output is key: value lines") {
    const Transcript t = run({"recognize"}, builtin_json("no21"));
    CHECK(t.code == 0);
    CHECK(t.out.rfind("status: ok\n", 0) == 0);
    CHECK(t.out.find("signature: ") != std::string::npos);
  }

  TEST_CASE("size guard: flag beats environment") {
    const std::string big = run({"generate", "--n", "11", "--m", "2", "--seed", "3"}).out;
    CHECK(run({"recognize"}, big).code == 3);
    cli::Environment env;
    env.max_n = "3";
    CHECK(run({"recognize"}, builtin_json("no21"), env).code == 3);
    CHECK(run({"recognize", "--max-n", "4"}, builtin_json("no21"), env).code == 0);
    env.max_n = "many";
    CHECK(run({"recognize"}, builtin_json("no21"), env).code == 3);
  }

  TEST_CASE("hemisphere recognition") {
    const Transcript t14 = json_run({"recognize-hemisphere"}, builtin_json("hemisphere14"));
    CHECK(t14.code == 0);
    const Transcript pinned = json_run({"recognize-hemisphere", "--order", "0,1,2,3", "--shift", "1,3"}, builtin_json("hemisphere14"));
    CHECK(pinned.code == 0);
    CHECK(pinned.json()["shift"] == Json::array({1, 3}));
    CHECK(json_run({"recognize-hemisphere"}, builtin_json("hemisphere15")).code == 1);
  }

  TEST_CASE("check-aba") {
    const std::string bad = hg(3, {{0, 2}, {1}});
    const Transcript t = json_run({"check-aba"}, bad);
    CHECK(t.code == 1);
    CHECK(t.json()["occurrence"]["y"] == 1);
    CHECK(json_run({"check-aba"}, hg(3, {{0, 1}, {1, 2}})).code == 0);
    CHECK(json_run({"check-aba", "--underlying"}, builtin_json("no21")).code == 0);
  }

  TEST_CASE("extremal, orient, classify") {
    const std::string cara = builtin_json("cara", "5");
    const Transcript e = json_run({"extremal"}, cara);
    CHECK(e.code == 0);
    CHECK(e.json()["T"] == Json::array({0, 4}));
    CHECK(json_run({"orient", "--triple", "0,1,2"}, builtin_json("collinear", "3")).code == 0);
    CHECK(json_run({"orient", "--triple", "2,1,0"}, cara).code == 3);
    const Transcript c = json_run({"classify", "--set", "0,1,3"}, cara);
    CHECK(c.json()["shape"] == "cup");
  }

  TEST_CASE("hull, convex-sets, inside") {
    const std::string cara = builtin_json("cara", "5");
    const Transcript h = json_run({"hull", "--set", "0,1,3,4"}, cara);
    CHECK(h.json()["hull"] == Json::array({0, 1, 2, 3, 4}));
    const std::string two = hg(3, {{0, 1}, {1, 2}}, {"top", "top"});
    const Transcript sets = json_run({"convex-sets"}, two);
    CHECK(sets.json()["sets"].size() == 4);
    CHECK(json_run({"convex-sets", "--mode", "subsets"}, two).json()["sets"] == sets.json()["sets"]);
    CHECK(json_run({"convex-sets", "--mode", "other"}, two).code == 3);
    const Transcript in = json_run({"inside", "--vertex", "1", "--set", "0,2,3"}, builtin_json("no21"));
    CHECK(in.code == 0);
    CHECK(in.json()["strongly_inside"] == true);
    CHECK(json_run({"inside", "--vertex", "0", "--set", "1,2,3"}, builtin_json("no21")).code == 1);
  }

  TEST_CASE("extension commands") {
    const std::string one = hg(2, {{0, 1}}, {"top"});
    const Transcript v = json_run({"extend-vertex", "--position", "1"}, one);
    CHECK(v.code == 0);
    CHECK(v.json()["insertion"]["membership"] == Json::array({false}));
    CHECK(json_run({"extend-vertex", "--position", "1", "--core", "0", "--include", "1"}, one).code == 3);
    const Transcript e = json_run({"extend-edge", "--sub", "0,1", "--partial", "0", "--sign", "top"},
                                  hg(4, {}));
    CHECK(e.code == 0);
    CHECK(e.json()["edge"] == Json::array({0}));
    CHECK(json_run({"levi", "--p", "0", "--q", "3"}, builtin_json("no21")).code == 0);
    const Transcript s = run({"saturate"}, hg(2, {}));
    CHECK(s.code == 0);
    CHECK(Json::parse(s.out)["edges"].size() == 8);
  }

  TEST_CASE("helly: premise failure names the triple") {
    const Transcript t = json_run({"helly"}, builtin_json("no21"));
    CHECK(t.code == 2);
    CHECK(t.json()["status"] == "premise_violated");
    CHECK(t.json()["witness"] == Json::array({0, 1, 2}));
    CHECK(t.json()["witness_kind"] == "targets");
    const std::string sunflower = hg(3, {{0, 1}, {1, 2}, {1}}, {"top", "top", "top"});
    CHECK(json_run({"helly"}, sunflower).code == 0);
    CHECK(json_run({"helly", "--targets", "0,1;2"}, sunflower).code == 0);
    CHECK(json_run({"helly", "--targets", "7"}, sunflower).code == 3);
    CHECK(json_run({"helly-hemisphere"}, sunflower).code == 0);
  }

  TEST_CASE("theorem commands") {
    const std::string no21 = builtin_json("no21");
    CHECK(json_run({"steinitz", "--vertex", "1", "--set", "0,2,3"}, no21).json()["witness"] == Json::array({0, 2, 3}));
    CHECK(json_run({"caratheodory", "--vertex", "1", "--set", "0,2,3"}, no21).code == 0);
    CHECK(json_run({"steinitz", "--vertex", "0", "--set", "1,2,3"}, no21).code == 2);
    const std::string line = builtin_json("collinear", "6");
    CHECK(json_run({"separate", "--a", "0,1,2", "--b", "3,4,5"}, line).code == 0);
    CHECK(json_run({"kirchberger", "--a", "0,1,2", "--b", "3,4,5"}, line).code == 0);
    CHECK(json_run({"separate", "--a", "0,1", "--b", "1"}, line).code == 3);
    const std::string square = builtin_json("convex_position", "4");
    CHECK(json_run({"radon", "--set", "0,1,2,3"}, square).code == 0);
    CHECK(json_run({"radon", "--set", "0,1,2"}, square).code == 3);
    CHECK(json_run({"cupcap", "--k", "4", "--l", "4"}, builtin_json("parabola", "7")).json()["kind"] == "cup");
    CHECK(json_run({"cupcap", "--k", "5", "--l", "5"}, square).code == 1);
    CHECK(json_run({"hitting-pair"}, no21).code == 2);
    CHECK(json_run({"cover", "--set", "0,1"}, hg(4, {{0, 1, 2}, {2, 3}})).code == 0);
  }

  TEST_CASE("dual, generate, builtin") {
    const Transcript d = run({"dual"}, hg(2, {{0}}));
    CHECK(d.code == 0);
    CHECK(Json::parse(d.out)["n"] == 1);
    CHECK(run({"generate", "--n", "5", "--m", "6", "--seed", "1"}).out ==
          run({"generate", "--n", "5", "--m", "6", "--seed", "1"}).out);
    CHECK(run({"generate", "--n", "5", "--m", "6", "--seed", "1", "--hemisphere"}).code == 0);
    CHECK(run({"generate", "--n", "65"}).code == 3);
    CHECK(run({"builtin", "nonsense"}).code == 3);
  }

  TEST_CASE("generate --points shears repeated x") {
    const std::string path = "cli_points_test.json";
    {
      std::ofstream f(path);
      f << R"({"points": [["0", "1"], ["0", "-1"], ["2", "5/2"]], "lines": [{"a": "0", "b": "1", "c": "-1/2", "side": "above"}]})";
    }
    const Transcript t = run({"generate", "--points", path});
    CHECK(t.code == 0);
    const Json j = Json::parse(t.out);
    CHECK(j["n"] == 3);
    // (0,-1) moves left of (0,1).
    CHECK(j["edges"][0]["members"] == Json::array({1, 2}));
    CHECK(j["edges"][0]["sign"] == "top");
    std::remove(path.c_str());
  }

  TEST_CASE("verify") {
    const std::string inst = run({"generate", "--n", "8", "--m", "10", "--seed", "7"}).out;
    const Transcript t = json_run({"verify", "--samples", "8"}, inst);
    CHECK(t.code == 0);
    for (const Json& row : t.json()["invariants"]) CHECK(row["passed"] == true);
  }

  TEST_CASE("input errors") {
    CHECK(run({"recognize"}, hg(2, {{0, 5}})).code == 3);
    CHECK(run({"recognize"}, R"({"n": 2, "edges": [{"members": [0, 1)").code == 3);
    CHECK(run({"recognize"}, "").code == 3);
    CHECK(run({"no-such-command"}).code == 3);
    CHECK(run({"recognize", "--input", "/nonexistent/file.json"}).code == 3);
    const Transcript t = run({"recognize"}, hg(2, {{0, 5}}));
    CHECK(t.err.rfind("input_error: ", 0) == 0);
  }

  TEST_CASE("JSON round trip") {
    for (const std::string& name : {"no21", "no21plus", "hemisphere14", "cara", "parabola"}) {
      const std::string text = builtin_json(name);
      const HypergraphDocument doc = parse_hypergraph(parse_json_text(text, "test"));
      CHECK(parse_hypergraph(to_json(doc)) == doc);
    }
  }
}
