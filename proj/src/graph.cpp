#include "orpath/graph.hpp"

#include <string>

namespace orpath {

GraphBuilder::GraphBuilder(int n) {
  if (n < 1 || n > kMaxVertices)
    raise(Errc::bad_parameter, "vertex count out of range: " + std::to_string(n));
  g_.n_ = n;
  g_.words_ = bits::word_count(n);
  g_.bits_.assign(static_cast<std::size_t>(n) * g_.words_, 0);
}

void GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
    raise(Errc::index_out_of_range,
          "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside 0.." + std::to_string(g_.n_ - 1));
  if (u == v) raise(Errc::loop_edge, "loop at vertex " + std::to_string(u));
  std::span<std::uint64_t> all(g_.bits_);
  bits::set(all.subspan(static_cast<std::size_t>(u) * g_.words_, g_.words_), v);
  bits::set(all.subspan(static_cast<std::size_t>(v) * g_.words_, g_.words_), u);
}

Graph GraphBuilder::build() {
  g_.deg_.resize(static_cast<std::size_t>(g_.n_));
  long long total = 0;
  for (int v = 0; v < g_.n_; ++v) {
    g_.deg_[static_cast<std::size_t>(v)] = bits::popcount(g_.row(v));
    total += g_.deg_[static_cast<std::size_t>(v)];
  }
  g_.m_ = total / 2;
  return std::move(g_);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

}  // namespace orpath
