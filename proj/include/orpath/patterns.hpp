#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orpath/graph.hpp"

namespace orpath {

// The small fixed graphs used as generators and as forbidden/heavy patterns:
// paths P_i, the triangle, Z_i (triangle plus a pendant path of i edges),
// bull, net, wounded, claw, complete and complete bipartite graphs.
struct PatternId {
  enum class Tag { path, c3, z, bull, net, wounded, claw, complete, complete_bipartite };

  Tag tag = Tag::path;
  int a = 0;
  int b = 0;

  static PatternId path(int i) { return {Tag::path, i, 0}; }
  static PatternId c3() { return {Tag::c3, 0, 0}; }
  static PatternId z(int i) { return {Tag::z, i, 0}; }
  static PatternId bull() { return {Tag::bull, 0, 0}; }
  static PatternId net() { return {Tag::net, 0, 0}; }
  static PatternId wounded() { return {Tag::wounded, 0, 0}; }
  static PatternId claw() { return {Tag::claw, 0, 0}; }
  static PatternId complete(int m) { return {Tag::complete, m, 0}; }
  static PatternId complete_bipartite(int a, int b) { return {Tag::complete_bipartite, a, b}; }

  int vertex_count() const;
  std::string name() const;
  static std::optional<PatternId> parse(std::string_view s);

  bool operator==(const PatternId&) const = default;
};

// Builds the catalog graph in its canonical vertex order:
//   path:     0-1-...-(i-1)
//   c3:       triangle 0,1,2
//   z(i):     triangle 0,1,2 with pendant path 2-3-...-(i+2)
//   bull:     triangle 0,1,2; pendants 3 on 1 and 4 on 2
//   net:      triangle 0,1,2; pendants 3 on 0, 4 on 1, 5 on 2
//   wounded:  triangle 0,1,2; pendant 3 on 1; path 2-4-5
//   claw:     center 0, leaves 1,2,3
//   complete / complete_bipartite: parts 0..a-1 and a..a+b-1
Graph gen_pattern(const PatternId& id);

// Induced occurrence of a pattern: map[k] is the host vertex playing the
// pattern's vertex k. Exactly one embedding is reported per occurrence
// (lexicographically least over the pattern's automorphisms).
struct Embedding {
  PatternId pattern;
  std::vector<int> map;

  bool operator==(const Embedding&) const = default;
};

// Visits induced occurrences in deterministic (lexicographic) order.
// The visitor returns false to stop early; the function returns false
// iff the visitor stopped it.
bool for_each_induced(const Graph& g, const PatternId& id, const std::function<bool(const Embedding&)>& visit);

std::vector<Embedding> enumerate_induced(const Graph& g, const PatternId& id);
std::size_t count_induced(const Graph& g, const PatternId& id);
std::optional<Embedding> find_free_violation(const Graph& g, const PatternId& id);
bool is_free(const Graph& g, const PatternId& id);

// True iff `e.map` is injective, in range, and induces `e.pattern` in g.
bool verify_embedding(const Graph& g, const Embedding& e);

// Specialized short-circuit scans used by the sweep harness. Equivalent to
// is_free(g, ...) for the matching catalog entry; cross-checked in tests.
bool is_c3_free(const Graph& g);
bool is_z1_free(const Graph& g);
bool is_p4_free(const Graph& g);

}  // namespace orpath
