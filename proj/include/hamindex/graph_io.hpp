#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "hamindex/graph.hpp"

namespace hamindex {

/// graph6 encoding (one line, no trailing newline).
std::string to_graph6(const Graph& g);
/// Decodes a single graph6 line; an optional ">>graph6<<" prefix is accepted.
Graph from_graph6(std::string_view line);

/// Edge-list text: "n m" on the first line, then m lines "u v" (0-indexed).
std::string to_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in, const std::string& source = "<stream>");

/// Reads every graph in a file. Edge-list files hold one graph; anything else
/// is treated as graph6 with one graph per non-empty line. Errors name the file
/// and line.
std::vector<Graph> read_graph_file(const std::string& path);

}  // namespace hamindex
