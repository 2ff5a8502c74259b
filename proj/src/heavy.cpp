#include "orpath/heavy.hpp"

#include <algorithm>

#include "orpath/connectivity.hpp"

namespace orpath {

Graph e_tilde(const Graph& g, int r) {
  int n = g.vertex_count();
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (relaxed_pair(g, u, v, r)) b.add_edge(u, v);
  return b.build();
}

std::optional<HeavyPair> embedding_o_heavy(const Graph& g, const Embedding& emb, int r) {
  if (!verify_embedding(g, emb)) raise(Errc::invalid_embedding, "embedding does not induce " + emb.pattern.name());
  int n = g.vertex_count();
  std::optional<HeavyPair> best;
  int h = static_cast<int>(emb.map.size());
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j) {
      int u = emb.map[static_cast<std::size_t>(i)];
      int v = emb.map[static_cast<std::size_t>(j)];
      if (g.adjacent(u, v)) continue;
      int sum = g.degree(u) + g.degree(v);
      if (sum < n + r) continue;
      if (u > v) std::swap(u, v);
      if (!best || sum > best->sum || (sum == best->sum && std::pair(u, v) < std::pair(best->u, best->v)))
        best = HeavyPair{u, v, sum};
    }
  return best;
}

NonHeavyWitness make_non_heavy_witness(const Graph& g, const Embedding& emb, int r) {
  NonHeavyWitness w;
  w.embedding = emb;
  w.r = r;
  int h = static_cast<int>(emb.map.size());
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j) {
      int u = emb.map[static_cast<std::size_t>(i)];
      int v = emb.map[static_cast<std::size_t>(j)];
      if (g.adjacent(u, v)) continue;
      if (u > v) std::swap(u, v);
      w.pair_sums.push_back({u, v, g.degree(u) + g.degree(v)});
    }
  std::sort(w.pair_sums.begin(), w.pair_sums.end(),
            [](const HeavyPair& a, const HeavyPair& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  return w;
}

namespace {

bool occurrence_heavy(const Graph& g, const Embedding& emb, int threshold) {
  int h = static_cast<int>(emb.map.size());
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j) {
      int u = emb.map[static_cast<std::size_t>(i)];
      int v = emb.map[static_cast<std::size_t>(j)];
      if (!g.adjacent(u, v) && g.degree(u) + g.degree(v) >= threshold) return true;
    }
  return false;
}

}  // namespace

HeavyCheck check_h_o_heavy(const Graph& g, const PatternId& h, int r) {
  HeavyCheck out;
  int threshold = g.vertex_count() + r;
  for_each_induced(g, h, [&](const Embedding& emb) {
    // a clique occurrence has no nonadjacent pair and can never be heavy
    if (!occurrence_heavy(g, emb, threshold)) {
      out.witness = make_non_heavy_witness(g, emb, r);
      return false;
    }
    return true;
  });
  return out;
}

bool is_h_o_heavy(const Graph& g, const PatternId& h, int r) {
  int threshold = g.vertex_count() + r;
  bool all_heavy = true;
  for_each_induced(g, h, [&](const Embedding& emb) {
    if (!occurrence_heavy(g, emb, threshold)) {
      all_heavy = false;
      return false;
    }
    return true;
  });
  return all_heavy;
}

bool is_p3_o_heavy(const Graph& g, int r) {
  int n = g.vertex_count();
  int threshold = n + r;
  Bitset nonadj(n);
  for (int mid = 0; mid < n; ++mid) {
    auto rm = g.row(mid);
    bool bad = false;
    g.for_each_neighbor(mid, [&](int a) {
      if (bad) return;
      auto ra = g.row(a);
      // b in N(mid)\N(a), b > a, forming induced P3 a-mid-b
      for (std::size_t wi = 0; wi < nonadj.words().size(); ++wi)
        nonadj.words()[wi] = rm[wi] & ~ra[wi];
      nonadj.reset(a);
      nonadj.for_each_set([&](int b) {
        if (bad || b <= a) return;
        if (g.degree(a) + g.degree(b) < threshold) bad = true;
      });
    });
    if (bad) return false;
  }
  return true;
}

bool is_claw_o_heavy(const Graph& g, int r) {
  int n = g.vertex_count();
  int threshold = n + r;
  for (int c = 0; c < n; ++c) {
    std::vector<int> nb = g.neighbors(c);
    int d = static_cast<int>(nb.size());
    if (d < 3) continue;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        int sij = g.degree(nb[static_cast<std::size_t>(i)]) + g.degree(nb[static_cast<std::size_t>(j)]);
        for (int k = j + 1; k < d; ++k) {
          if (g.adjacent(nb[i], nb[k]) || g.adjacent(nb[j], nb[k])) continue;
          if (sij >= threshold) continue;
          if (g.degree(nb[i]) + g.degree(nb[k]) >= threshold) continue;
          if (g.degree(nb[j]) + g.degree(nb[k]) >= threshold) continue;
          return false;
        }
      }
  }
  return true;
}

bool witness_checks(const Graph& g, const NonHeavyWitness& w) {
  if (!verify_embedding(g, w.embedding)) return false;
  int threshold = g.vertex_count() + w.r;
  std::size_t nonadjacent = 0;
  int h = static_cast<int>(w.embedding.map.size());
  for (int i = 0; i < h; ++i)
    for (int j = i + 1; j < h; ++j)
      if (!g.adjacent(w.embedding.map[static_cast<std::size_t>(i)], w.embedding.map[static_cast<std::size_t>(j)]))
        ++nonadjacent;
  if (w.pair_sums.size() != nonadjacent) return false;
  for (const HeavyPair& p : w.pair_sums) {
    if (g.adjacent(p.u, p.v)) return false;
    if (g.degree(p.u) + g.degree(p.v) != p.sum) return false;
    if (p.sum >= threshold) return false;
  }
  return true;
}

HypothesisReport classify(const Graph& g, int r) {
  HypothesisReport rep;
  rep.r = r;

  ConnectivityInfo conn = connectivity(g);
  rep.connected = conn.connected;
  if (!rep.connected) rep.components = conn.components;

  rep.p3_o_heavy = is_p3_o_heavy(g, r);
  if (!rep.p3_o_heavy) rep.p3_witness = check_h_o_heavy(g, PatternId::path(3), r).witness;

  rep.claw_o_heavy = is_claw_o_heavy(g, r);
  if (!rep.claw_o_heavy) rep.claw_witness = check_h_o_heavy(g, PatternId::claw(), r).witness;

  rep.c3_free = is_c3_free(g);
  if (!rep.c3_free) rep.c3_violation = find_free_violation(g, PatternId::c3());

  rep.z1_free = is_z1_free(g);
  if (!rep.z1_free) rep.z1_violation = find_free_violation(g, PatternId::z(1));

  rep.p4_free = is_p4_free(g);
  if (!rep.p4_free) rep.p4_violation = find_free_violation(g, PatternId::path(4));

  rep.b_violation = find_free_violation(g, PatternId::bull());
  rep.b_free = !rep.b_violation.has_value();

  return rep;
}

std::string hypothesis_name(Hypothesis h) {
  switch (h) {
    case Hypothesis::p3: return "p3";
    case Hypothesis::claw_z1: return "claw-z1";
    case Hypothesis::claw_p4: return "claw-p4";
    case Hypothesis::auto_detect: return "auto";
  }
  return "?";
}

bool certifies(const Graph& g, Hypothesis h, int r) {
  switch (h) {
    case Hypothesis::p3: return is_p3_o_heavy(g, r);
    case Hypothesis::claw_z1: return is_claw_o_heavy(g, r) && is_z1_free(g);
    case Hypothesis::claw_p4: return is_claw_o_heavy(g, r) && is_p4_free(g);
    case Hypothesis::auto_detect:
      return certifies(g, Hypothesis::p3, r) || certifies(g, Hypothesis::claw_z1, r) ||
             certifies(g, Hypothesis::claw_p4, r);
  }
  return false;
}

}  // namespace orpath
