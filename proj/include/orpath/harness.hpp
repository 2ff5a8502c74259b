#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "orpath/graph.hpp"
#include "orpath/heavy.hpp"
#include "orpath/oracle.hpp"
#include "orpath/path_engine.hpp"

namespace orpath {

struct SweepConfig {
  int theorem = 5;  // 5, 7 or 8
  int exhaustive_max_n = 0;
  int sample_count = 0;
  int sample_min_n = 8;
  int sample_max_n = 14;
  std::uint64_t seed = 42;
  int threads = 0;  // 0 = hardware concurrency
  bool csv = false;
};

struct SweepCounts {
  std::uint64_t population = 0;
  std::uint64_t certified = 0;
  std::uint64_t solved_with_path = 0;
  std::uint64_t violations = 0;
  std::uint64_t unresolved = 0;
  std::uint64_t oracle_disagreements = 0;
};

struct SweepReport {
  SweepConfig config;
  SweepCounts counts;
  std::string population_desc;
  std::string csv_rows;  // one row per certified graph when config.csv
  double wall_ms = 0.0;  // excluded from the JSON report
};

SweepReport verify_theorem(const SweepConfig& config);

bool sweep_clean(const SweepReport& r);

struct ClaimResult {
  std::string id;
  std::string description;
  bool pass = false;
  nlohmann::json details;
};

struct CounterexampleReport {
  std::vector<ClaimResult> claims;
  bool all_pass = false;
};

// The checkable claims about the two counterexample families, the
// bipartite sharpness example, and the o_r parameter thresholds.
CounterexampleReport verify_counterexamples();

// JSON shapes (stable field names; reports are byte-identical across runs
// for a fixed config and seed).
nlohmann::json to_json(const SweepReport& r);
nlohmann::json to_json(const CounterexampleReport& r);
nlohmann::json to_json(const Embedding& e);
nlohmann::json to_json(const NonHeavyWitness& w);
nlohmann::json to_json(const HypothesisReport& r);
nlohmann::json to_json(const Graph& g, const Outcome& o);
nlohmann::json to_json(const Graph& g, const Certificate& c);
nlohmann::json to_json(const Graph& g, const SearchResult& s);

}  // namespace orpath
