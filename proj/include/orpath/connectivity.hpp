#pragma once

#include <vector>

#include "orpath/graph.hpp"

namespace orpath {

struct ConnectivityInfo {
  std::vector<std::vector<int>> components;  // sorted vertices, ordered by smallest member
  std::vector<int> cut_vertices;             // ascending
  bool connected = false;
  bool biconnected = false;  // connected, no cut vertex, n >= 3
};

ConnectivityInfo connectivity(const Graph& g);

bool is_connected(const Graph& g);

// Components of the subgraph induced by vertices not in `removed`.
std::vector<std::vector<int>> components_excluding(const Graph& g, const Bitset& removed);

// Component count of G - removed (0 when nothing remains).
int count_components_excluding(const Graph& g, const Bitset& removed);

}  // namespace orpath
