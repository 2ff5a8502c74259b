#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "orpath/bits.hpp"
#include "orpath/errors.hpp"

namespace orpath {

inline constexpr int kMaxVertices = 1 << 20;

// Immutable simple undirected graph over vertices 0..n-1, one adjacency
// bitset row per vertex. Symmetric and loop-free by construction.
class Graph {
 public:
  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }
  int degree(int v) const { return deg_[static_cast<std::size_t>(v)]; }

  bool adjacent(int u, int v) const { return bits::test(row(u), v); }

  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
  }

  template <class F>
  void for_each_neighbor(int v, F f) const {
    bits::for_each_set(row(v), f);
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(degree(v)));
    for_each_neighbor(v, [&](int u) { out.push_back(u); });
    return out;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

 private:
  friend class GraphBuilder;
  Graph() = default;

  int n_ = 0;
  int words_ = 0;
  long long m_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<int> deg_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  void add_edge(int u, int v);  // duplicates collapse; throws on loop / bad index
  bool has_edge(int u, int v) const { return bits::test(g_.row(u), v); }
  int vertex_count() const { return g_.n_; }

  Graph build();

 private:
  Graph g_;
};

}  // namespace orpath
