#pragma once

#include <cstdint>
#include <optional>

#include "orpath/graph.hpp"

namespace orpath {

// Clique K_{n-2k} joined to k stubs x_1..x_k, each x_i carrying one pendant
// x'_i. Layout: clique 0..n-2k-1, then x_1..x_k, then x'_1..x'_k.
// Requires k >= 1 and n >= 2k+1; the drawing's intended range is k >= 3,
// n >= 4k-3 (see in_g1_paper_range).
Graph gen_g1(int k, int n);
bool in_g1_paper_range(int k, int n);

// Clique K_{n-3k-6} plus three identical gadgets. Each gadget: k vertices
// joined to the whole clique, one hub adjacent to those k, one pendant on
// the hub. Layout: clique first, then per gadget [g_1..g_k, hub, pendant].
// Requires k >= 1 and n >= 3k+7; intended range k >= 5, n >= 6k+9.
Graph gen_g2(int k, int n);
bool in_g2_paper_range(int k, int n);

// G(n,p) resampled until connected; deterministic for a fixed seed
// (mt19937_64, one 53-bit draw per pair in (0,1),(0,2),(1,2),... order).
Graph random_connected(int n, double p, std::uint64_t seed);

// Every labeled connected graph on n vertices, in ascending order of the
// upper-triangle edge mask (same pair order as random_connected). n <= 8.
// A [begin,end) mask subrange can be enumerated for parallel sweeps.
class ConnectedEnumerator {
 public:
  explicit ConnectedEnumerator(int n);
  ConnectedEnumerator(int n, std::uint64_t mask_begin, std::uint64_t mask_end);

  std::optional<Graph> next();

  std::uint64_t mask_space() const { return mask_end_; }

 private:
  int n_;
  std::uint64_t mask_ = 0;
  std::uint64_t mask_end_ = 0;
};

std::uint64_t count_connected_graphs(int n);

}  // namespace orpath
