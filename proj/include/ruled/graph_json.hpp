#pragma once

#include <string>

#include <json.hpp>

#include "ruled/graph.hpp"

namespace ruled {

/// Canonical form of a decorated graph:
///   {"height": "p/q", "genus": g, "bottom_area": "p/q", "top_area": "p/q",
///    "chains": [[v0, e1, v1, ...], ...]}
/// Rationals are strings, edge labels integers, chains in by_start order.
/// Two graphs serialize to the same bytes iff they are the same graph.
nlohmann::ordered_json graph_to_json(const DecoratedGraph& g);

/// Inverse of graph_to_json. Throws std::invalid_argument on malformed input.
DecoratedGraph graph_from_json(const nlohmann::ordered_json& j);

std::string canonical_string(const DecoratedGraph& g);

/// Graphviz rendering: fat vertices as boxes (area, genus), interior fixed
/// points as points placed by height, edges labelled with their isotropy.
std::string graph_to_dot(const DecoratedGraph& g, const std::string& name = "G");

}  // namespace ruled
