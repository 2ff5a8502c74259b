#include "orpath/connectivity.hpp"

#include <algorithm>

namespace orpath {

namespace {

// Collects the component containing src, skipping `blocked` vertices.
void flood(const Graph& g, int src, Bitset& seen, const Bitset* blocked, std::vector<int>& out) {
  std::vector<int> stack{src};
  seen.set(src);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    out.push_back(v);
    g.for_each_neighbor(v, [&](int u) {
      if (seen.test(u)) return;
      if (blocked && blocked->test(u)) return;
      seen.set(u);
      stack.push_back(u);
    });
  }
}

// Iterative lowpoint DFS for articulation vertices.
std::vector<int> articulation_vertices(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<bool> is_cut(n, false);
  int timer = 0;

  struct Frame {
    int v;
    int next;  // next neighbor index to process
    std::vector<int> nbrs;
  };

  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    int root_children = 0;
    std::vector<Frame> stack;
    disc[root] = low[root] = timer++;
    stack.push_back({root, 0, g.neighbors(root)});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < static_cast<int>(f.nbrs.size())) {
        int u = f.nbrs[f.next++];
        if (disc[u] == -1) {
          parent[u] = f.v;
          if (f.v == root) ++root_children;
          disc[u] = low[u] = timer++;
          stack.push_back({u, 0, g.neighbors(u)});
        } else if (u != parent[f.v]) {
          low[f.v] = std::min(low[f.v], disc[u]);
        }
      } else {
        int v = f.v;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= disc[p]) is_cut[p] = true;
        }
      }
    }
    if (root_children > 1) is_cut[root] = true;
  }

  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.push_back(v);
  return out;
}

}  // namespace

ConnectivityInfo connectivity(const Graph& g) {
  ConnectivityInfo info;
  int n = g.vertex_count();
  Bitset seen(n);
  for (int v = 0; v < n; ++v) {
    if (seen.test(v)) continue;
    std::vector<int> comp;
    flood(g, v, seen, nullptr, comp);
    std::sort(comp.begin(), comp.end());
    info.components.push_back(std::move(comp));
  }
  info.connected = info.components.size() == 1;
  info.cut_vertices = articulation_vertices(g);
  info.biconnected = info.connected && info.cut_vertices.empty() && n >= 3;
  return info;
}

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  Bitset seen(n);
  std::vector<int> comp;
  comp.reserve(static_cast<std::size_t>(n));
  flood(g, 0, seen, nullptr, comp);
  return static_cast<int>(comp.size()) == n;
}

std::vector<std::vector<int>> components_excluding(const Graph& g, const Bitset& removed) {
  std::vector<std::vector<int>> out;
  int n = g.vertex_count();
  Bitset seen(n);
  for (int v = 0; v < n; ++v) {
    if (removed.test(v) || seen.test(v)) continue;
    std::vector<int> comp;
    flood(g, v, seen, &removed, comp);
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

int count_components_excluding(const Graph& g, const Bitset& removed) {
  int n = g.vertex_count();
  Bitset seen(n);
  int count = 0;
  std::vector<int> comp;
  for (int v = 0; v < n; ++v) {
    if (removed.test(v) || seen.test(v)) continue;
    comp.clear();
    flood(g, v, seen, &removed, comp);
    ++count;
  }
  return count;
}

}  // namespace orpath
