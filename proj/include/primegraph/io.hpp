#pragma once

#include <string>

#include <json.hpp>

#include "primegraph/graph.hpp"
#include "primegraph/lattice.hpp"

namespace primegraph {

using Json = nlohmann::json;

// {"type":"graph","n":4,"edges":[[0,1],[1,2]]}; edges u < v, sorted.
Json to_json(const Graph& g);
// {"type":"poset","n":3,"lt":[[0,1],[0,2]]}; the full strict relation.
Json to_json(const Poset& p);
// {"type":"incidence","e":2,"f":3,"rho":[[0,1]]}; related pairs (x, y).
Json to_json(const IncidenceStructure& r);
// {"type":"lattice","universe":3,"elements":[[],[0],...],"covers":[[0,1],...]}
Json to_json(const Lattice& l);

// Loaders validate and throw std::invalid_argument with a description.
Graph graph_from_json(const Json& j);
Poset poset_from_json(const Json& j);
IncidenceStructure incidence_from_json(const Json& j);
// Recomputes the covers and checks them against the listed ones, along with
// intersection closure and the presence of the universe.
Lattice lattice_from_json(const Json& j);

std::string to_dot(const Graph& g);
// Hasse diagram drawn upward.
std::string to_dot(const Poset& p);
std::string to_dot(const Lattice& l);

std::string read_text_file(const std::string& path);
Json read_json_file(const std::string& path);

}  // namespace primegraph
