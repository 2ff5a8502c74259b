#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orpath/graph.hpp"
#include "orpath/patterns.hpp"

namespace orpath {

// Relaxed adjacency: uv is an edge, or u,v nonadjacent with
// d(u)+d(v) >= n+r. Default relaxation level is r = -1.
inline bool relaxed_pair(const Graph& g, int u, int v, int r = -1) {
  if (u == v) return false;
  if (g.adjacent(u, v)) return true;
  return g.degree(u) + g.degree(v) >= g.vertex_count() + r;
}

// Materialized relaxed-adjacency relation (a graph on the same vertices).
Graph e_tilde(const Graph& g, int r = -1);

struct HeavyPair {
  int u = -1;
  int v = -1;
  int sum = 0;

  bool operator==(const HeavyPair&) const = default;
};

// Witnesses that an induced occurrence is not o_r-heavy: every nonadjacent
// pair of the embedding, with its (too small) degree sum.
struct NonHeavyWitness {
  Embedding embedding;
  std::vector<HeavyPair> pair_sums;
  int r = -1;
};

// Max-sum nonadjacent pair of the embedding reaching n+r, if any.
// Ties break toward the smaller (u,v). Throws on an invalid embedding.
std::optional<HeavyPair> embedding_o_heavy(const Graph& g, const Embedding& emb, int r = -1);

// All nonadjacent pairs of the occurrence with their degree sums.
NonHeavyWitness make_non_heavy_witness(const Graph& g, const Embedding& emb, int r = -1);

struct HeavyCheck {
  std::optional<NonHeavyWitness> witness;  // empty = every occurrence heavy
  bool ok() const { return !witness.has_value(); }
};

// Full scan: is every induced occurrence of H o_r-heavy? On failure returns
// the first non-heavy occurrence in enumeration order.
HeavyCheck check_h_o_heavy(const Graph& g, const PatternId& h, int r = -1);

// Short-circuit equivalents used by the sweep harness (no witness built).
bool is_h_o_heavy(const Graph& g, const PatternId& h, int r = -1);
bool is_p3_o_heavy(const Graph& g, int r = -1);
bool is_claw_o_heavy(const Graph& g, int r = -1);

bool witness_checks(const Graph& g, const NonHeavyWitness& w);

// Aggregate hypothesis flags for Theorems 5, 7 and 8, with witnesses for
// every failed flag.
struct HypothesisReport {
  int r = -1;
  bool connected = false;
  bool p3_o_heavy = false;
  bool claw_o_heavy = false;
  bool c3_free = false;
  bool z1_free = false;
  bool p4_free = false;
  bool b_free = false;

  std::vector<std::vector<int>> components;          // witness when disconnected
  std::optional<NonHeavyWitness> p3_witness;
  std::optional<NonHeavyWitness> claw_witness;
  std::optional<Embedding> c3_violation;
  std::optional<Embedding> z1_violation;
  std::optional<Embedding> p4_violation;
  std::optional<Embedding> b_violation;
};

HypothesisReport classify(const Graph& g, int r = -1);

enum class Hypothesis { p3, claw_z1, claw_p4, auto_detect };

std::string hypothesis_name(Hypothesis h);

// Fast certification used by sweeps; matches the classify flags.
bool certifies(const Graph& g, Hypothesis h, int r = -1);

}  // namespace orpath
