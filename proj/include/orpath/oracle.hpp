#pragma once

#include <optional>
#include <vector>

#include "orpath/graph.hpp"
#include "orpath/path_engine.hpp"

namespace orpath {

// Cheap, independently checkable reasons a graph cannot have a Hamilton
// path: three or more pendant vertices, or a separator S whose removal
// leaves more than |S|+1 components, or disconnectedness.
struct Certificate {
  enum class Kind { pendant_excess, cut_set_excess, disconnected };

  Kind kind = Kind::disconnected;
  std::vector<int> vertices;   // pendants, or the separator
  int component_count = 0;
};

struct TraceResult {
  bool traceable = false;
  std::optional<PathSeq> path;
};

// Exact subset/endpoint dynamic program; n <= 24.
TraceResult traceable_dp(const Graph& g);

std::optional<Certificate> nontraceability_certificate(const Graph& g);
bool verify_certificate(const Graph& g, const Certificate& c);

struct SearchResult {
  enum class Status { yes, no, timeout };

  Status status = Status::timeout;
  std::optional<PathSeq> path;          // when yes
  std::optional<Certificate> cert;      // when no, if certificate-based
  bool exhausted = false;               // when no, proof by complete search/DP
};

// Certificate first, exact DP when it fits, otherwise pruned backtracking
// within the time budget.
SearchResult traceable_search(const Graph& g, int budget_ms);

// Pruned backtracking only (test hook for DP cross-checks).
SearchResult traceable_backtrack(const Graph& g, int budget_ms);

}  // namespace orpath
