#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "orpath/graph.hpp"
#include "orpath/patterns.hpp"

namespace testutil {

inline orpath::Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
  return orpath::Graph::from_edges(n, edges);
}

inline orpath::Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return make_graph(n, std::move(e));
}

inline orpath::Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < 5; ++v) {
    e.emplace_back(v, (v + 1) % 5);          // outer cycle
    e.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
    e.emplace_back(v, 5 + v);                // spokes
  }
  return make_graph(10, std::move(e));
}

// Brute-force oracle: number of vertex subsets whose induced subgraph is
// isomorphic to the pattern (isomorphism tried over all permutations).
// Independent of the production enumerator's search and pruning.
inline std::size_t subset_scan_count(const orpath::Graph& g, const orpath::PatternId& id) {
  orpath::Graph h = orpath::gen_pattern(id);
  int hn = h.vertex_count();
  int n = g.vertex_count();
  if (hn > n) return 0;
  std::vector<int> pick(static_cast<std::size_t>(hn));
  std::size_t count = 0;

  auto isomorphic = [&]() {
    std::vector<int> perm(static_cast<std::size_t>(hn));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (int i = 0; i < hn && ok; ++i)
        for (int j = i + 1; j < hn && ok; ++j)
          if (h.adjacent(i, j) !=
              g.adjacent(pick[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])],
                         pick[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]))
            ok = false;
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  };

  // enumerate hn-subsets
  for (int i = 0; i < hn; ++i) pick[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (isomorphic()) ++count;
    int pos = hn - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - hn + pos) --pos;
    if (pos < 0) break;
    ++pick[static_cast<std::size_t>(pos)];
    for (int q = pos + 1; q < hn; ++q) pick[static_cast<std::size_t>(q)] = pick[static_cast<std::size_t>(q) - 1] + 1;
  }
  return count;
}

}  // namespace testutil
