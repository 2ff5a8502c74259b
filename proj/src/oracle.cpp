#include "orpath/oracle.hpp"

#include <algorithm>
#include <chrono>

#include "orpath/connectivity.hpp"

namespace orpath {

TraceResult traceable_dp(const Graph& g) {
  int n = g.vertex_count();
  if (n > 24) raise(Errc::too_large, "exact DP capped at 24 vertices");
  if (n == 1) return {true, PathSeq{{0}}};

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    g.for_each_neighbor(v, [&](int u) { adj[static_cast<std::size_t>(v)] |= 1u << u; });

  std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  // ends[mask] = endpoints v such that some path covers mask and stops at v
  std::vector<std::uint32_t> ends(static_cast<std::size_t>(full) + 1, 0);
  for (int v = 0; v < n; ++v) ends[static_cast<std::size_t>(1u << v)] = 1u << v;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t e = ends[mask];
    if (!e) continue;
    std::uint32_t cand = ~mask & full;
    while (cand) {
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      if (adj[static_cast<std::size_t>(v)] & e) ends[mask | (1u << v)] |= 1u << v;
    }
  }
  if (!ends[full]) return {false, std::nullopt};

  // walk the table backwards to recover one path
  std::vector<int> seq;
  std::uint32_t mask = full;
  int v = std::countr_zero(ends[full]);
  while (true) {
    seq.push_back(v);
    std::uint32_t rest = mask & ~(1u << v);
    if (!rest) break;
    std::uint32_t prev = ends[rest] & adj[static_cast<std::size_t>(v)];
    mask = rest;
    v = std::countr_zero(prev);
  }
  std::reverse(seq.begin(), seq.end());
  return {true, PathSeq{std::move(seq)}};
}

namespace {

std::optional<Certificate> cut_set_excess(const Graph& g, const std::vector<int>& sep) {
  Bitset removed(g.vertex_count());
  for (int v : sep) removed.set(v);
  int comps = count_components_excluding(g, removed);
  if (comps > static_cast<int>(sep.size()) + 1)
    return Certificate{Certificate::Kind::cut_set_excess, sep, comps};
  return std::nullopt;
}

}  // namespace

std::optional<Certificate> nontraceability_certificate(const Graph& g) {
  int n = g.vertex_count();
  if (!is_connected(g)) {
    Bitset none(n);
    return Certificate{Certificate::Kind::disconnected, {}, count_components_excluding(g, none)};
  }
  std::vector<int> pendants;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 1) pendants.push_back(v);
  if (pendants.size() >= 3)
    return Certificate{Certificate::Kind::pendant_excess, pendants, 0};

  // separators up to size 3, then the articulation set as a heuristic
  for (int a = 0; a < n; ++a)
    if (auto c = cut_set_excess(g, {a})) return c;
  if (n >= 2)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (auto c = cut_set_excess(g, {a, b})) return c;
  if (n >= 3)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c3 = b + 1; c3 < n; ++c3)
          if (auto c = cut_set_excess(g, {a, b, c3})) return c;
  ConnectivityInfo conn = connectivity(g);
  if (conn.cut_vertices.size() > 3)
    if (auto c = cut_set_excess(g, conn.cut_vertices)) return c;
  return std::nullopt;
}

bool verify_certificate(const Graph& g, const Certificate& c) {
  switch (c.kind) {
    case Certificate::Kind::disconnected: {
      return !is_connected(g) && c.component_count >= 2;
    }
    case Certificate::Kind::pendant_excess: {
      if (c.vertices.size() < 3) return false;
      for (int v : c.vertices)
        if (v < 0 || v >= g.vertex_count() || g.degree(v) != 1) return false;
      return true;
    }
    case Certificate::Kind::cut_set_excess: {
      Bitset removed(g.vertex_count());
      for (int v : c.vertices) {
        if (v < 0 || v >= g.vertex_count()) return false;
        removed.set(v);
      }
      int comps = count_components_excluding(g, removed);
      return comps == c.component_count && comps > static_cast<int>(c.vertices.size()) + 1;
    }
  }
  return false;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Backtracker {
  const Graph& g;
  Clock::time_point deadline;
  bool timed_out = false;
  long long nodes = 0;
  Bitset visited;
  std::vector<int> seq;

  explicit Backtracker(const Graph& g_, Clock::time_point dl)
      : g(g_), deadline(dl), visited(g_.vertex_count()) {}

  bool prune() {
    // remaining vertices plus the live endpoint must stay connected
    int n = g.vertex_count();
    Bitset blocked = visited;
    blocked.reset(seq.back());
    int remaining = n - static_cast<int>(seq.size()) + 1;
    Bitset seen(n);
    std::vector<int> stack{seq.back()};
    seen.set(seq.back());
    int count = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++count;
      g.for_each_neighbor(v, [&](int u) {
        if (seen.test(u) || blocked.test(u)) return;
        seen.set(u);
        stack.push_back(u);
      });
    }
    return count < remaining;
  }

  bool extend() {
    if ((++nodes & 1023) == 0 && Clock::now() > deadline) {
      timed_out = true;
      return false;
    }
    if (static_cast<int>(seq.size()) == g.vertex_count()) return true;
    if (prune()) return false;
    int tail = seq.back();
    bool found = false;
    g.for_each_neighbor(tail, [&](int u) {
      if (found || timed_out || visited.test(u)) return;
      visited.set(u);
      seq.push_back(u);
      if (extend()) found = true;
      if (!found) {
        seq.pop_back();
        visited.reset(u);
      }
    });
    return found;
  }
};

}  // namespace

SearchResult traceable_backtrack(const Graph& g, int budget_ms) {
  SearchResult res;
  auto deadline = Clock::now() + std::chrono::milliseconds(budget_ms);
  int n = g.vertex_count();
  if (n == 1) return {SearchResult::Status::yes, PathSeq{{0}}, std::nullopt, false};
  for (int start = 0; start < n; ++start) {
    Backtracker bt(g, deadline);
    bt.visited.set(start);
    bt.seq.push_back(start);
    if (bt.extend()) {
      res.status = SearchResult::Status::yes;
      res.path = PathSeq{bt.seq};
      return res;
    }
    if (bt.timed_out) {
      res.status = SearchResult::Status::timeout;
      return res;
    }
  }
  res.status = SearchResult::Status::no;
  res.exhausted = true;
  return res;
}

SearchResult traceable_search(const Graph& g, int budget_ms) {
  SearchResult res;
  if (auto cert = nontraceability_certificate(g)) {
    res.status = SearchResult::Status::no;
    res.cert = cert;
    return res;
  }
  if (g.vertex_count() <= 24) {
    TraceResult dp = traceable_dp(g);
    if (dp.traceable) return {SearchResult::Status::yes, dp.path, std::nullopt, false};
    res.status = SearchResult::Status::no;
    res.exhausted = true;
    return res;
  }
  return traceable_backtrack(g, budget_ms);
}

}  // namespace orpath
