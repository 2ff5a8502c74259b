#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orpath/graph.hpp"
#include "orpath/heavy.hpp"
#include "orpath/patterns.hpp"

namespace orpath {

struct PathSeq {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  bool operator==(const PathSeq&) const = default;
};

// Independent validity checks: distinct vertices, consecutive real edges.
bool is_valid_path(const Graph& g, const PathSeq& p);
bool is_hamilton_path(const Graph& g, const PathSeq& p);

// Vertex sequence whose consecutive pairs are edges or degree-heavy pairs.
struct ORPath {
  std::vector<int> vertices;
  int r = -1;
};

// Number of consecutive non-edge pairs, or nullopt if some consecutive pair
// is not even relaxed-adjacent. Throws on duplicate vertices.
std::optional<int> deficit(const Graph& g, std::span<const int> seq, int r = -1);

struct LiftStats {
  int steps = 0;
  int common_neighbor = 0;   // insert an outside common neighbor
  int prefix_reversal = 0;   // endpoint edge to the gap's right side
  int suffix_reversal = 0;   // endpoint edge to the gap's left side
  int crossing_rotation = 0; // matched neighbor pair across the gap
};

// Deficit-reduction loop: turns a valid o_{-1}-path into a real path over a
// superset of its vertices. Each round removes the first non-edge gap; the
// transformation count never exceeds the initial deficit.
PathSeq lift(const Graph& g, const ORPath& p, LiftStats* stats = nullptr);

enum class MoveKind {
  endpoint_extend,
  ear_endpoint_attach,
  o1_insert,
  claim1_rotation,
  claim3_rotation_z1,
  claim3_rotation_p4,
  claim4_rotation_p4a,
  claim4_rotation_p4b,
};

std::string move_kind_name(MoveKind k);

struct Move {
  MoveKind kind;
  std::vector<int> args;
};

// Shortest ear found against the current path: endpoints at path positions
// i < j, interior vertices listed from the i side. k is the position of the
// first vertex after i nonadjacent to path[i] (the P4-mode pivot), or -1.
struct EarContext {
  bool found = false;
  int i = -1;
  int j = -1;
  std::vector<int> interior;
  int k = -1;
};

struct GrowResult {
  std::optional<PathSeq> grown;
  Move move{MoveKind::endpoint_extend, {}};
  EarContext ear;

  bool grew() const { return grown.has_value(); }
};

// One growth attempt: endpoint extension, ear endpoint attachment, relaxed
// insertion, then the ear rotations of the hypothesis' move set. Every
// grown path strictly extends the old vertex set.
GrowResult try_grow(const Graph& g, const PathSeq& path, Hypothesis moveset);

using Witness = std::variant<NonHeavyWitness, Embedding>;

struct UnresolvedInfo {
  std::string reason;
  PathSeq best;
};

struct Outcome {
  std::variant<PathSeq, Witness, UnresolvedInfo> result;
  std::vector<Move> moves;

  bool is_path() const { return std::holds_alternative<PathSeq>(result); }
  bool is_violation() const { return std::holds_alternative<Witness>(result); }
  bool is_unresolved() const { return std::holds_alternative<UnresolvedInfo>(result); }

  const PathSeq& path() const { return std::get<PathSeq>(result); }
  const Witness& witness() const { return std::get<Witness>(result); }
  const UnresolvedInfo& unresolved() const { return std::get<UnresolvedInfo>(result); }
};

// Cut-vertex decomposition under the claw-heavy hypothesis: exactly two
// components, and same-component neighbors of x are pairwise relaxed-adjacent.
// Three or more components yield the refuting claw instead.
struct SeparableStructure {
  int cut_vertex = -1;
  std::vector<int> comp_c;
  std::vector<int> comp_d;
};

std::variant<SeparableStructure, NonHeavyWitness> separable_structure(const Graph& g, int x);

Outcome solve_p3(const Graph& g);
Outcome solve_claw_z1(const Graph& g);
Outcome solve_claw_p4(const Graph& g);
Outcome solve(const Graph& g, Hypothesis hypothesis);

// True when the outcome's witness re-verifies against the graph.
bool witness_checks(const Graph& g, const Witness& w);

}  // namespace orpath
