#pragma once

#include <string>

#include "rcs/core.hpp"
#include "rcs/graph.hpp"

namespace rcs {

// Instance wire format:
//   {"alphabet": "abc", "t": "aabbcc", "patterns": ["abb", ...],
//    "kind": "substring"|"subsequence"}
std::string instance_to_json(const Instance& instance);
Instance instance_from_json(const std::string& text);

std::string report_to_json(const Instance& instance, const SolutionReport& report);

// Graph wire format:
//   {"n": 3, "edges": [[0,1],...], "directed": true,
//    "weights": [1,0,...]}   (weights optional, parallel to edges)
std::string digraph_to_json(const Digraph& g);
Digraph digraph_from_json(const std::string& text);
std::string undirected_to_json(const UndirectedGraph& g);
UndirectedGraph undirected_from_json(const std::string& text);

// Either orientation, keyed on "directed". Undirected graphs come back as a
// symmetric Digraph via to_digraph when a caller needs arcs.
bool json_is_directed(const std::string& text);

}  // namespace rcs
