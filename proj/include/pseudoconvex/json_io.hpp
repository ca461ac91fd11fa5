#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pseudoconvex/extension.hpp"
#include "pseudoconvex/extremal.hpp"
#include "pseudoconvex/generators.hpp"
#include "pseudoconvex/hypergraph.hpp"
#include "pseudoconvex/recognition.hpp"

namespace pseudoconvex {

using Json = nlohmann::ordered_json;

// A hypergraph file. `signs` is set when every edge carries a sign; files where only
// some edges do are rejected.
struct HypergraphDocument {
  Hypergraph hypergraph;
  std::optional<Signature> signs;
  std::optional<VertexSet> shift;
  friend bool operator==(const HypergraphDocument&, const HypergraphDocument&) = default;
};

// Parse errors carry the byte offset; schema errors carry a path such as edges[2].members[0].
Json parse_json_text(const std::string& text, const std::string& source);

HypergraphDocument parse_hypergraph(const Json& j);
Json to_json(const HypergraphDocument& doc);
Json to_json(const Hypergraph& h);
Json to_json(const SignedHypergraph& sh);
Json to_json(const HemisphereHypergraph& hh);

PointConfiguration parse_point_configuration(const Json& j);
Json to_json(const PointConfiguration& pc);

Json to_json(VertexSet s);
Json to_json(const AbaOccurrence& occ);
Json to_json(const PairConstraint& c);
Json to_json(const Signature& s);
Json to_json(const ExtremalProfile& p);
Json to_json(const VertexInsertion& ins);

}  // namespace pseudoconvex
