#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "vpotts/graph.hpp"
#include "vpotts/potts.hpp"

namespace vpotts {

inline constexpr int kGraphFormatVersion = 1;

/// A parsed graph file.
///
/// {
///   "format_version": 1,
///   "vertices": [{"id": "v1", "weight": {"kind": "formal", "label": "a"}},
///                {"id": "v2", "weight": {"kind": "field", "values": [[1, 0], [0, 0]]}}],
///   "edges": [{"id": "e1", "u": "v1", "v": "v2", "gamma": "symbolic", "J": [1, 0]}],
///   "q": 2, "beta": 0.5,
///   "edge_order": ["e1"]
/// }
///
/// Omitted weights default to the formal generator named by the vertex id;
/// omitted gammas are symbolic. A vertex may also carry "z": [re, im], the
/// random-field Ising site field (zero when absent). Numbers may be written as
/// [re, im] pairs or as plain reals.
struct GraphDocument {
  WeightedGraph graph;
  std::optional<PottsParams> params;  // present iff q and beta are given
  std::map<std::string, Complex> site_field;
};

/// Throws ParseError whose path is a JSON pointer into the offending node.
GraphDocument parse_graph(std::string_view text);
GraphDocument parse_graph(std::istream& in);

/// Serializes a graph (and optional parameters) in the same format.
std::string to_json(const WeightedGraph& g, const std::optional<PottsParams>& params = std::nullopt);

}  // namespace vpotts
