#pragma once

#include <string>
#include <string_view>

#include "orpath/graph.hpp"

namespace orpath {

// graph6: 6-bit packed upper-triangle encoding, no ">>graph6<<" header.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// Plain text format: "n m" header line, then one "u v" line per edge.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

enum class GraphFormat { auto_detect, graph6, edge_list };

// Reads a single graph from text, sniffing the format when asked to.
Graph read_graph(std::string_view text, GraphFormat format = GraphFormat::auto_detect);

}  // namespace orpath
