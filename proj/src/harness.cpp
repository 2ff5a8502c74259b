#include "orpath/harness.hpp"

#include <chrono>
#include <future>
#include <sstream>
#include <thread>

#include "orpath/connectivity.hpp"
#include "orpath/generators.hpp"
#include "orpath/graph_io.hpp"

namespace orpath {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

Hypothesis theorem_hypothesis(int theorem) {
  switch (theorem) {
    case 5: return Hypothesis::p3;
    case 7: return Hypothesis::claw_z1;
    case 8: return Hypothesis::claw_p4;
  }
  raise(Errc::bad_config, "theorem must be 5, 7 or 8");
}

Outcome run_solver(Hypothesis h, const Graph& g) {
  switch (h) {
    case Hypothesis::p3: return solve_p3(g);
    case Hypothesis::claw_z1: return solve_claw_z1(g);
    case Hypothesis::claw_p4: return solve_claw_p4(g);
    default: return solve(g, h);
  }
}

struct Shard {
  SweepCounts counts;
  std::string csv;
};

void process_graph(const Graph& g, Hypothesis hyp, bool want_csv, Shard& shard) {
  ++shard.counts.population;
  if (!certifies(g, hyp, -1)) return;
  ++shard.counts.certified;
  Outcome out = run_solver(hyp, g);
  TraceResult dp = traceable_dp(g);
  std::string verdict;
  if (out.is_path() && is_hamilton_path(g, out.path())) {
    ++shard.counts.solved_with_path;
    verdict = "path";
    if (!dp.traceable) ++shard.counts.oracle_disagreements;
  } else if (out.is_path()) {
    ++shard.counts.oracle_disagreements;
    verdict = "invalid_path";
  } else if (out.is_violation()) {
    ++shard.counts.violations;
    verdict = "violation";
  } else {
    ++shard.counts.unresolved;
    verdict = "unresolved";
  }
  if (want_csv) {
    shard.csv += write_graph6(g);
    shard.csv += ',';
    shard.csv += std::to_string(g.vertex_count());
    shard.csv += ',';
    shard.csv += verdict;
    shard.csv += '\n';
  }
}

int worker_count(const SweepConfig& config) {
  if (config.threads > 0) return config.threads;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(std::min(hc, 16u));
}

}  // namespace

SweepReport verify_theorem(const SweepConfig& config) {
  Hypothesis hyp = theorem_hypothesis(config.theorem);
  if (config.exhaustive_max_n < 0 || config.exhaustive_max_n > 8)
    raise(Errc::bad_config, "exhaustive_max_n must be in [0,8]");
  if (config.sample_count < 0) raise(Errc::bad_config, "sample_count must be >= 0");
  if (config.sample_count > 0) {
    if (config.sample_min_n < 1 || config.sample_min_n > config.sample_max_n || config.sample_max_n > 24)
      raise(Errc::bad_config, "sample range must satisfy 1 <= min <= max <= 24");
  }

  auto t0 = std::chrono::steady_clock::now();
  SweepReport report;
  report.config = config;
  int workers = worker_count(config);

  for (int n = 1; n <= config.exhaustive_max_n; ++n) {
    std::uint64_t space = std::uint64_t{1} << (n * (n - 1) / 2);
    std::uint64_t chunk = (space + static_cast<std::uint64_t>(workers) - 1) / static_cast<std::uint64_t>(workers);
    std::vector<std::future<Shard>> futs;
    for (int w = 0; w < workers; ++w) {
      std::uint64_t lo = std::min(space, static_cast<std::uint64_t>(w) * chunk);
      std::uint64_t hi = std::min(space, lo + chunk);
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, [&, n, lo, hi] {
        Shard shard;
        ConnectedEnumerator en(n, lo, hi);
        while (auto g = en.next()) process_graph(*g, hyp, config.csv, shard);
        return shard;
      }));
    }
    for (auto& f : futs) {
      Shard s = f.get();
      report.counts.population += s.counts.population;
      report.counts.certified += s.counts.certified;
      report.counts.solved_with_path += s.counts.solved_with_path;
      report.counts.violations += s.counts.violations;
      report.counts.unresolved += s.counts.unresolved;
      report.counts.oracle_disagreements += s.counts.oracle_disagreements;
      report.csv_rows += s.csv;
    }
  }

  if (config.sample_count > 0) {
    std::uint64_t total = static_cast<std::uint64_t>(config.sample_count);
    std::uint64_t chunk = (total + static_cast<std::uint64_t>(workers) - 1) / static_cast<std::uint64_t>(workers);
    std::vector<std::future<Shard>> futs;
    for (int w = 0; w < workers; ++w) {
      std::uint64_t lo = std::min(total, static_cast<std::uint64_t>(w) * chunk);
      std::uint64_t hi = std::min(total, lo + chunk);
      if (lo >= hi) break;
      futs.push_back(std::async(std::launch::async, [&, lo, hi] {
        Shard shard;
        const double ps[4] = {0.3, 0.5, 0.7, 0.9};
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
          std::uint64_t s0 = splitmix64(config.seed ^ (idx * 0x9e3779b97f4a7c15ull + 1));
          std::uint64_t s1 = splitmix64(s0);
          std::uint64_t s2 = splitmix64(s1);
          int span = config.sample_max_n - config.sample_min_n + 1;
          int n = config.sample_min_n + static_cast<int>(s0 % static_cast<std::uint64_t>(span));
          double p = ps[s1 % 4];
          Graph g = random_connected(n, p, s2);
          process_graph(g, hyp, config.csv, shard);
        }
        return shard;
      }));
    }
    for (auto& f : futs) {
      Shard s = f.get();
      report.counts.population += s.counts.population;
      report.counts.certified += s.counts.certified;
      report.counts.solved_with_path += s.counts.solved_with_path;
      report.counts.violations += s.counts.violations;
      report.counts.unresolved += s.counts.unresolved;
      report.counts.oracle_disagreements += s.counts.oracle_disagreements;
      report.csv_rows += s.csv;
    }
  }

  std::ostringstream desc;
  if (config.exhaustive_max_n > 0) desc << "exhaustive connected n <= " << config.exhaustive_max_n;
  if (config.sample_count > 0) {
    if (config.exhaustive_max_n > 0) desc << " plus ";
    desc << config.sample_count << " samples n in [" << config.sample_min_n << "," << config.sample_max_n
         << "] seed " << config.seed;
  }
  report.population_desc = desc.str();
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

bool sweep_clean(const SweepReport& r) {
  return r.counts.violations == 0 && r.counts.unresolved == 0 && r.counts.oracle_disagreements == 0 &&
         r.counts.certified == r.counts.solved_with_path;
}

namespace {

ClaimResult claim(const std::string& id, const std::string& description, bool pass, nlohmann::json details = {}) {
  return ClaimResult{id, description, pass, std::move(details)};
}

bool oracle_says_nontraceable(const Graph& g) {
  SearchResult s = traceable_search(g, 10000);
  return s.status == SearchResult::Status::no;
}

// All vertex subsets of size >= 3 induce an o_{-2}-heavy subgraph
// (degree sums taken in the host).
bool all_subsets_o2_heavy(const Graph& g) {
  int n = g.vertex_count();
  if (n > 20) raise(Errc::too_large, "subset scan capped at 20 vertices");
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) < 3) continue;
    bool heavy = false;
    for (int u = 0; u < n && !heavy; ++u) {
      if (!((mask >> u) & 1)) continue;
      for (int v = u + 1; v < n && !heavy; ++v) {
        if (!((mask >> v) & 1)) continue;
        if (!g.adjacent(u, v) && g.degree(u) + g.degree(v) >= n - 2) heavy = true;
      }
    }
    if (!heavy) return false;
  }
  return true;
}

}  // namespace

CounterexampleReport verify_counterexamples() {
  CounterexampleReport rep;
  auto add = [&](ClaimResult c) { rep.claims.push_back(std::move(c)); };

  // G1(3,9): heavy/free flags and non-traceability
  {
    Graph g1 = gen_g1(3, 9);
    add(claim("g1_claw_heavy", "G1(3,9) is claw-o_{-1}-heavy", is_claw_o_heavy(g1, -1)));
    add(claim("g1_p4_heavy", "G1(3,9) is P4-o_{-1}-heavy", is_h_o_heavy(g1, PatternId::path(4), -1)));
    add(claim("g1_b_free", "G1(3,9) is bull-free", is_free(g1, PatternId::bull())));
    auto z1hit = find_free_violation(g1, PatternId::z(1));
    add(claim("g1_not_z1_free", "G1(3,9) contains an induced Z1",
              z1hit.has_value() && verify_embedding(g1, *z1hit),
              z1hit ? to_json(*z1hit) : nlohmann::json{}));
    TraceResult dp = traceable_dp(g1);
    auto cert = nontraceability_certificate(g1);
    bool pendant = cert && cert->kind == Certificate::Kind::pendant_excess && verify_certificate(g1, *cert);
    add(claim("g1_nontraceable", "G1(3,9) is non-traceable (DP and pendant certificate agree)",
              !dp.traceable && pendant));
  }

  // G1 threshold: claw-o_{-1}-heaviness flips exactly at n = 4k-3 = 9
  {
    bool ok = true;
    nlohmann::json scan = nlohmann::json::array();
    for (int n = 7; n <= 12; ++n) {
      bool heavy = is_claw_o_heavy(gen_g1(3, n), -1);
      scan.push_back({{"n", n}, {"claw_o1_heavy", heavy}});
      if (heavy != (n >= 9)) ok = false;
    }
    add(claim("g1_claw_threshold", "G1(3,n) claw-o_{-1}-heaviness flips at n = 9", ok, scan));
  }

  // G2(5,39): heavy flags and non-traceability
  {
    Graph g2 = gen_g2(5, 39);
    add(claim("g2_claw_heavy", "G2(5,39) is claw-o_{-1}-heavy", is_claw_o_heavy(g2, -1)));
    add(claim("g2_z1_heavy", "G2(5,39) is Z1-o_{-1}-heavy", is_h_o_heavy(g2, PatternId::z(1), -1)));
    auto cert = nontraceability_certificate(g2);
    bool pendant = cert && cert->kind == Certificate::Kind::pendant_excess && verify_certificate(g2, *cert);
    add(claim("g2_nontraceable", "G2(5,39) is non-traceable by pendant certificate", pendant));
  }

  // G2 thresholds: claw flip at n = 6k+9, Z1 flip at k = 5
  {
    bool ok = true;
    nlohmann::json scan = nlohmann::json::array();
    for (int n = 37; n <= 41; ++n) {
      bool heavy = is_claw_o_heavy(gen_g2(5, n), -1);
      scan.push_back({{"n", n}, {"claw_o1_heavy", heavy}});
      if (heavy != (n >= 39)) ok = false;
    }
    add(claim("g2_claw_threshold", "G2(5,n) claw-o_{-1}-heaviness flips at n = 39", ok, scan));
  }
  {
    bool ok = true;
    nlohmann::json scan = nlohmann::json::array();
    for (int k = 3; k <= 7; ++k) {
      bool heavy = is_h_o_heavy(gen_g2(k, 6 * k + 9), PatternId::z(1), -1);
      scan.push_back({{"k", k}, {"z1_o1_heavy", heavy}});
      if (heavy != (k >= 5)) ok = false;
    }
    add(claim("g2_z1_threshold", "G2(k,6k+9) Z1-o_{-1}-heaviness flips at k = 5", ok, scan));
  }

  // K_{3,5} sharpness: every induced subgraph on >= 3 vertices is
  // o_{-2}-heavy, yet the graph is non-traceable
  {
    Graph k35 = gen_pattern(PatternId::complete_bipartite(3, 5));
    add(claim("k35_o2_heavy", "every >=3-vertex subset of K_{3,5} induces an o_{-2}-heavy subgraph",
              all_subsets_o2_heavy(k35)));
    add(claim("k35_nontraceable", "K_{3,5} is non-traceable", oracle_says_nontraceable(k35)));
  }

  // o_r generalization, r in {0,1,2}
  for (int r = 0; r <= 2; ++r) {
    std::string rs = std::to_string(r);
    {
      Graph at = gen_g1(3, 10 + r);
      Graph below = gen_g1(3, 9 + r);
      bool pass = is_claw_o_heavy(at, r) && is_h_o_heavy(at, PatternId::path(4), r) &&
                  oracle_says_nontraceable(at) && !is_claw_o_heavy(below, r);
      add(claim("g1_or_r" + rs, "G1(3,10+r) is {claw,P4}-o_r-heavy and non-traceable; fails one below (r=" + rs + ")",
                pass));
    }
    {
      int k = r + 6;
      int n = 6 * k + r + 10;
      Graph at = gen_g2(k, n);
      bool pass = is_claw_o_heavy(at, r) && is_h_o_heavy(at, PatternId::z(1), r) && oracle_says_nontraceable(at);
      // one parameter below: claw fails at n-1, Z1 fails at k-1
      pass = pass && !is_claw_o_heavy(gen_g2(k, n - 1), r);
      int kb = k - 1;
      pass = pass && !is_h_o_heavy(gen_g2(kb, 6 * kb + r + 10), PatternId::z(1), r);
      add(claim("g2_or_r" + rs,
                "G2(r+6,6(r+6)+r+10) is {claw,Z1}-o_r-heavy and non-traceable; fails one below (r=" + rs + ")",
                pass));
    }
  }

  rep.all_pass = true;
  for (const auto& c : rep.claims)
    if (!c.pass) rep.all_pass = false;
  return rep;
}

nlohmann::json to_json(const Embedding& e) {
  return {{"pattern", e.pattern.name()}, {"vertices", e.map}};
}

nlohmann::json to_json(const NonHeavyWitness& w) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& p : w.pair_sums) pairs.push_back({{"u", p.u}, {"v", p.v}, {"sum", p.sum}});
  return {{"embedding", to_json(w.embedding)}, {"pair_sums", pairs}, {"r", w.r}};
}

nlohmann::json to_json(const HypothesisReport& r) {
  nlohmann::json j{{"r", r.r},
                   {"connected", r.connected},
                   {"p3_o_heavy", r.p3_o_heavy},
                   {"claw_o_heavy", r.claw_o_heavy},
                   {"c3_free", r.c3_free},
                   {"z1_free", r.z1_free},
                   {"p4_free", r.p4_free},
                   {"b_free", r.b_free}};
  nlohmann::json witnesses = nlohmann::json::object();
  if (!r.connected) witnesses["connected"] = {{"components", r.components}};
  if (r.p3_witness) witnesses["p3_o_heavy"] = to_json(*r.p3_witness);
  if (r.claw_witness) witnesses["claw_o_heavy"] = to_json(*r.claw_witness);
  if (r.c3_violation) witnesses["c3_free"] = to_json(*r.c3_violation);
  if (r.z1_violation) witnesses["z1_free"] = to_json(*r.z1_violation);
  if (r.p4_violation) witnesses["p4_free"] = to_json(*r.p4_violation);
  if (r.b_violation) witnesses["b_free"] = to_json(*r.b_violation);
  j["witnesses"] = witnesses;
  return j;
}

nlohmann::json to_json(const Graph& g, const Outcome& o) {
  nlohmann::json j;
  nlohmann::json moves = nlohmann::json::array();
  for (const auto& m : o.moves) moves.push_back({{"kind", move_kind_name(m.kind)}, {"args", m.args}});
  j["moves"] = moves;
  j["n"] = g.vertex_count();
  if (o.is_path()) {
    j["outcome"] = "path";
    j["path"] = o.path().vertices;
  } else if (o.is_violation()) {
    j["outcome"] = "violation";
    const Witness& w = o.witness();
    if (std::holds_alternative<NonHeavyWitness>(w)) {
      j["witness"] = to_json(std::get<NonHeavyWitness>(w));
      j["witness"]["kind"] = "non_heavy";
    } else {
      j["witness"] = to_json(std::get<Embedding>(w));
      j["witness"]["kind"] = "forbidden_pattern";
    }
  } else {
    j["outcome"] = "unresolved";
    j["reason"] = o.unresolved().reason;
    j["best_path"] = o.unresolved().best.vertices;
  }
  return j;
}

nlohmann::json to_json(const Graph& g, const Certificate& c) {
  (void)g;
  const char* kind = c.kind == Certificate::Kind::pendant_excess    ? "pendant_excess"
                     : c.kind == Certificate::Kind::cut_set_excess ? "cut_set_excess"
                                                                   : "disconnected";
  return {{"kind", kind}, {"vertices", c.vertices}, {"component_count", c.component_count}};
}

nlohmann::json to_json(const Graph& g, const SearchResult& s) {
  nlohmann::json j;
  switch (s.status) {
    case SearchResult::Status::yes:
      j["status"] = "yes";
      j["traceable"] = true;
      if (s.path) j["path"] = s.path->vertices;
      break;
    case SearchResult::Status::no:
      j["status"] = "no";
      j["traceable"] = false;
      j["exhausted"] = s.exhausted;
      if (s.cert) j["certificate"] = to_json(g, *s.cert);
      break;
    case SearchResult::Status::timeout:
      j["status"] = "timeout";
      j["traceable"] = nullptr;
      break;
  }
  return j;
}

nlohmann::json to_json(const SweepReport& r) {
  return {{"theorem", r.config.theorem},
          {"config",
           {{"exhaustive_max_n", r.config.exhaustive_max_n},
            {"sample_count", r.config.sample_count},
            {"sample_min_n", r.config.sample_min_n},
            {"sample_max_n", r.config.sample_max_n},
            {"seed", r.config.seed}}},
          {"population", r.population_desc},
          {"counts",
           {{"population", r.counts.population},
            {"certified", r.counts.certified},
            {"solved_with_path", r.counts.solved_with_path},
            {"violations", r.counts.violations},
            {"unresolved", r.counts.unresolved},
            {"oracle_disagreements", r.counts.oracle_disagreements}}}};
}

nlohmann::json to_json(const CounterexampleReport& r) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : r.claims)
    claims.push_back({{"id", c.id}, {"description", c.description}, {"pass", c.pass}, {"details", c.details}});
  return {{"claims", claims}, {"all_pass", r.all_pass}};
}

}  // namespace orpath
