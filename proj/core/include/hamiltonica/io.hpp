#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "hamiltonica/graph.hpp"

namespace hamiltonica {

// graph6 ASCII encoding (unlabeled structure only), bit-exact per the
// standard format; supports n up to 258047.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// JSON document {"n":..., "edges":[[u,v],...], "labels":{...}} with edges
// sorted (u<v, lexicographic) and canonical field order.
nlohmann::ordered_json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
std::string to_json_string(const Graph& g);
Graph graph_from_json_string(const std::string& s);

// DOT export for human inspection; labels become node names.
std::string to_dot(const Graph& g);

nlohmann::ordered_json label_to_json(const VertexLabel& l);
VertexLabel label_from_json(const nlohmann::json& j);

// Reads a graph file, sniffing JSON vs graph6 by first character.
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path,
                      const std::string& format);

}  // namespace hamiltonica
