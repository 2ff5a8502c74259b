#include "orpath/generators.hpp"

#include <random>
#include <string>

#include "orpath/connectivity.hpp"

namespace orpath {

Graph gen_g1(int k, int n) {
  if (k < 1) raise(Errc::bad_parameter, "gen_g1: k must be >= 1");
  if (n < 2 * k + 1) raise(Errc::bad_parameter, "gen_g1: need n >= 2k+1, got n=" + std::to_string(n));
  int q = n - 2 * k;  // clique size
  GraphBuilder b(n);
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v) b.add_edge(u, v);
  for (int i = 0; i < k; ++i) {
    int xi = q + i;
    int pend = q + k + i;
    for (int c = 0; c < q; ++c) b.add_edge(xi, c);
    b.add_edge(xi, pend);
  }
  return b.build();
}

bool in_g1_paper_range(int k, int n) { return k >= 3 && n >= 4 * k - 3; }

Graph gen_g2(int k, int n) {
  if (k < 1) raise(Errc::bad_parameter, "gen_g2: k must be >= 1");
  if (n < 3 * k + 7) raise(Errc::bad_parameter, "gen_g2: need n >= 3k+7, got n=" + std::to_string(n));
  int q = n - 3 * k - 6;  // clique size
  GraphBuilder b(n);
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v) b.add_edge(u, v);
  for (int gadget = 0; gadget < 3; ++gadget) {
    int base = q + gadget * (k + 2);
    int hub = base + k;
    int pend = base + k + 1;
    for (int i = 0; i < k; ++i) {
      for (int c = 0; c < q; ++c) b.add_edge(base + i, c);
      b.add_edge(hub, base + i);
    }
    b.add_edge(hub, pend);
  }
  return b.build();
}

bool in_g2_paper_range(int k, int n) { return k >= 5 && n >= 6 * k + 9; }

namespace {

// One uniform draw in [0,1) from the top 53 bits; keeps results identical
// across standard libraries, unlike std::uniform_real_distribution.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

Graph random_connected(int n, double p, std::uint64_t seed) {
  if (n < 1 || n > kMaxVertices) raise(Errc::bad_parameter, "random_connected: bad n");
  if (!(p > 0.0) || p > 1.0) raise(Errc::bad_parameter, "random_connected: need 0 < p <= 1");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000000; ++attempt) {
    GraphBuilder b(n);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (unit_draw(rng) < p) b.add_edge(i, j);
    Graph g = b.build();
    if (is_connected(g)) return g;
  }
  raise(Errc::give_up, "random_connected: no connected sample after 1e6 attempts");
}

ConnectedEnumerator::ConnectedEnumerator(int n) : ConnectedEnumerator(n, 0, 0) {
  mask_end_ = std::uint64_t{1} << (n * (n - 1) / 2);
}

ConnectedEnumerator::ConnectedEnumerator(int n, std::uint64_t mask_begin, std::uint64_t mask_end)
    : n_(n), mask_(mask_begin), mask_end_(mask_end) {
  if (n < 1) raise(Errc::bad_parameter, "enumerate_connected: n must be >= 1");
  if (n > 8) raise(Errc::too_large, "enumerate_connected: n > 8");
}

std::optional<Graph> ConnectedEnumerator::next() {
  int pairs = n_ * (n_ - 1) / 2;
  for (; mask_ < mask_end_; ++mask_) {
    std::uint64_t m = mask_;
    GraphBuilder b(n_);
    int bit = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i, ++bit)
        if ((m >> bit) & 1) b.add_edge(i, j);
    (void)pairs;
    Graph g = b.build();
    if (is_connected(g)) {
      ++mask_;
      return g;
    }
  }
  return std::nullopt;
}

std::uint64_t count_connected_graphs(int n) {
  ConnectedEnumerator en(n);
  std::uint64_t c = 0;
  while (en.next()) ++c;
  return c;
}

}  // namespace orpath
