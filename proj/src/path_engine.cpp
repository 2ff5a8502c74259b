#include "orpath/path_engine.hpp"

#include <algorithm>
#include <tuple>

#include "orpath/connectivity.hpp"

namespace orpath {

bool is_valid_path(const Graph& g, const PathSeq& p) {
  if (p.vertices.empty()) return false;
  Bitset seen(g.vertex_count());
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    int v = p.vertices[i];
    if (v < 0 || v >= g.vertex_count() || seen.test(v)) return false;
    seen.set(v);
    if (i > 0 && !g.adjacent(p.vertices[i - 1], v)) return false;
  }
  return true;
}

bool is_hamilton_path(const Graph& g, const PathSeq& p) {
  return static_cast<int>(p.vertices.size()) == g.vertex_count() && is_valid_path(g, p);
}

std::optional<int> deficit(const Graph& g, std::span<const int> seq, int r) {
  Bitset seen(g.vertex_count());
  for (int v : seq) {
    if (v < 0 || v >= g.vertex_count()) raise(Errc::index_out_of_range, "sequence vertex out of range");
    if (seen.test(v)) raise(Errc::duplicate_vertex, "repeated vertex " + std::to_string(v));
    seen.set(v);
  }
  int def = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (g.adjacent(seq[i], seq[i + 1])) continue;
    if (!relaxed_pair(g, seq[i], seq[i + 1], r)) return std::nullopt;
    ++def;
  }
  return def;
}

PathSeq lift(const Graph& g, const ORPath& p, LiftStats* stats) {
  if (p.r != -1) raise(Errc::precondition_violated, "lift requires relaxation level -1");
  auto d0 = deficit(g, p.vertices, -1);
  if (!d0) raise(Errc::precondition_violated, "input is not a valid o_{-1}-path");

  std::vector<int> seq = p.vertices;
  Bitset member(g.vertex_count());
  for (int v : seq) member.set(v);
  int def = *d0;
  LiftStats local;

  while (def > 0) {
    int k = -1;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
      if (!g.adjacent(seq[i], seq[i + 1])) {
        k = static_cast<int>(i);
        break;
      }
    int vk = seq[static_cast<std::size_t>(k)];
    int vk1 = seq[static_cast<std::size_t>(k) + 1];

    if (int x = bits::first_common_excluding(g.row(vk), g.row(vk1), member.words()); x >= 0) {
      seq.insert(seq.begin() + k + 1, x);
      member.set(x);
      ++local.common_neighbor;
    } else if (g.adjacent(seq.front(), vk1)) {
      std::reverse(seq.begin(), seq.begin() + k + 1);
      ++local.prefix_reversal;
    } else if (g.adjacent(seq.back(), vk)) {
      std::reverse(seq.begin() + k + 1, seq.end());
      ++local.suffix_reversal;
    } else {
      int hit = -1;
      for (int i = 0; i + 1 < static_cast<int>(seq.size()); ++i) {
        if (i == k) continue;
        if (g.adjacent(seq[static_cast<std::size_t>(i)], vk) &&
            g.adjacent(seq[static_cast<std::size_t>(i) + 1], vk1)) {
          hit = i;
          break;
        }
      }
      if (hit < 0) raise(Errc::internal_stuck, "no lift transformation applies");
      if (hit < k)
        std::reverse(seq.begin() + hit + 1, seq.begin() + k + 1);
      else
        std::reverse(seq.begin() + k + 1, seq.begin() + hit + 1);
      ++local.crossing_rotation;
    }
    ++local.steps;

    auto d = deficit(g, seq, -1);
    if (!d || *d >= def) raise(Errc::internal_stuck, "deficit did not decrease");
    def = *d;
  }
  if (stats) *stats = local;
  return PathSeq{std::move(seq)};
}

std::string move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::endpoint_extend: return "endpoint_extend";
    case MoveKind::ear_endpoint_attach: return "ear_endpoint_attach";
    case MoveKind::o1_insert: return "o1_insert";
    case MoveKind::claim1_rotation: return "claim1_rotation";
    case MoveKind::claim3_rotation_z1: return "claim3_rotation_z1";
    case MoveKind::claim3_rotation_p4: return "claim3_rotation_p4";
    case MoveKind::claim4_rotation_p4a: return "claim4_rotation_p4a";
    case MoveKind::claim4_rotation_p4b: return "claim4_rotation_p4b";
  }
  return "?";
}

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g)) raise(Errc::not_connected, "graph is not connected");
}

// Shortest ear against the path; ties by (i, j, interior). Interior runs
// from the i side. BFS walks outside vertices only, levels in ascending
// vertex order, so the result is deterministic.
std::optional<EarContext> find_shortest_ear(const Graph& g, const std::vector<int>& seq, const Bitset& member) {
  int n = g.vertex_count();
  int p = static_cast<int>(seq.size());
  std::vector<int> pos_of(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < p; ++i) pos_of[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])] = i;

  std::optional<EarContext> best;
  auto consider = [&](int s, int tpos, const std::vector<int>& chain) {
    EarContext e;
    e.found = true;
    e.i = std::min(s, tpos);
    e.j = std::max(s, tpos);
    e.interior = chain;
    if (tpos < s) std::reverse(e.interior.begin(), e.interior.end());
    if (!best) {
      best = std::move(e);
      return;
    }
    auto key = [](const EarContext& c) {
      return std::tuple(static_cast<int>(c.interior.size()), c.i, c.j);
    };
    if (key(e) < key(*best) || (key(e) == key(*best) && e.interior < best->interior)) best = std::move(e);
  };

  std::vector<int> parent(static_cast<std::size_t>(n), -2);
  std::vector<int> level, next_level;
  for (int s = 0; s < p; ++s) {
    int src = seq[static_cast<std::size_t>(s)];
    std::fill(parent.begin(), parent.end(), -2);
    level.clear();
    g.for_each_neighbor(src, [&](int u) {
      if (!member.test(u)) {
        parent[static_cast<std::size_t>(u)] = -1;
        level.push_back(u);
      }
    });
    int depth = 1;
    while (!level.empty()) {
      if (best && depth > static_cast<int>(best->interior.size())) break;
      bool completed = false;
      for (int x : level) {
        bool hit_path = !bits::for_each_common(g.row(x), member.words(), [&](int t) {
          int tpos = pos_of[static_cast<std::size_t>(t)];
          if (tpos == s) return true;
          std::vector<int> chain;
          for (int c = x; c != -1; c = parent[static_cast<std::size_t>(c)]) chain.push_back(c);
          std::reverse(chain.begin(), chain.end());
          consider(s, tpos, chain);
          completed = true;
          return true;
        });
        (void)hit_path;
      }
      if (completed) break;  // longer ears from this source cannot win
      next_level.clear();
      for (int x : level)
        g.for_each_neighbor(x, [&](int u) {
          if (member.test(u) || parent[static_cast<std::size_t>(u)] != -2) return;
          parent[static_cast<std::size_t>(u)] = x;
          next_level.push_back(u);
        });
      std::sort(next_level.begin(), next_level.end());
      level.swap(next_level);
      ++depth;
    }
  }
  return best;
}

std::vector<int> slice(const std::vector<int>& v, int from, int to) {  // inclusive, empty if from > to
  std::vector<int> out;
  if (from > to) return out;
  out.assign(v.begin() + from, v.begin() + to + 1);
  return out;
}

std::vector<int> reversed(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

void append(std::vector<int>& dst, const std::vector<int>& src) { dst.insert(dst.end(), src.begin(), src.end()); }

GrowResult lift_to_grow(const Graph& g, std::vector<int> seq, MoveKind kind, std::vector<int> args,
                        const EarContext& ear, std::size_t old_size) {
  GrowResult res;
  res.ear = ear;
  PathSeq lifted = lift(g, ORPath{std::move(seq), -1});
  if (lifted.vertices.size() <= old_size) raise(Errc::internal_stuck, "move failed to grow the path");
  res.grown = std::move(lifted);
  res.move = Move{kind, std::move(args)};
  return res;
}

}  // namespace

GrowResult try_grow(const Graph& g, const PathSeq& path, Hypothesis moveset) {
  GrowResult res;
  int n = g.vertex_count();
  const std::vector<int>& seq = path.vertices;
  int p = static_cast<int>(seq.size());
  if (p == 0 || p >= n) return res;

  Bitset member(n);
  for (int v : seq) member.set(v);

  // (a) endpoint extension
  if (int x = bits::first_excluding(g.row(seq.back()), member.words()); x >= 0) {
    std::vector<int> s2 = seq;
    s2.push_back(x);
    res.grown = PathSeq{std::move(s2)};
    res.move = Move{MoveKind::endpoint_extend, {x}};
    return res;
  }
  if (int x = bits::first_excluding(g.row(seq.front()), member.words()); x >= 0) {
    std::vector<int> s2{x};
    append(s2, seq);
    res.grown = PathSeq{std::move(s2)};
    res.move = Move{MoveKind::endpoint_extend, {x}};
    return res;
  }

  auto ear = find_shortest_ear(g, seq, member);
  if (ear) res.ear = *ear;

  // (b) ear endpoint attachment
  if (ear && (ear->i == 0 || ear->j == p - 1)) {
    std::vector<int> s2;
    if (ear->i == 0) {
      s2 = reversed(ear->interior);
      append(s2, seq);
    } else {
      s2 = seq;
      append(s2, reversed(ear->interior));
    }
    res.grown = PathSeq{std::move(s2)};
    res.move = Move{MoveKind::ear_endpoint_attach, {ear->i, ear->j}};
    return res;
  }

  // (c) relaxed insertion behind a path vertex
  for (int i = 0; i + 1 < p; ++i) {
    int found = -1;
    auto row = g.row(seq[static_cast<std::size_t>(i)]);
    for (std::size_t wi = 0; wi < row.size() && found < 0; ++wi) {
      std::uint64_t x = row[wi] & ~member.words()[wi];
      while (x) {
        int cand = static_cast<int>(wi * 64) + std::countr_zero(x);
        if (relaxed_pair(g, cand, seq[static_cast<std::size_t>(i) + 1], -1)) {
          found = cand;
          break;
        }
        x &= x - 1;
      }
    }
    if (found >= 0) {
      std::vector<int> s2 = slice(seq, 0, i);
      s2.push_back(found);
      append(s2, slice(seq, i + 1, p - 1));
      return lift_to_grow(g, std::move(s2), MoveKind::o1_insert, {i, found}, res.ear, seq.size());
    }
  }

  if (!ear) return res;  // NoMove without an ear (separable fallback only)

  const int a = ear->i;
  const int b = ear->j;
  const std::vector<int>& R = ear->interior;
  const int r_len = static_cast<int>(R.size());

  // Claim 1: relaxed pair between an ear interior vertex and a path
  // neighbor of an ear endpoint.
  for (int t = 0; t < r_len; ++t) {
    int xt = R[static_cast<std::size_t>(t)];
    const int ypos[4] = {a - 1, a + 1, b - 1, b + 1};
    for (int yi = 0; yi < 4; ++yi) {
      int y = seq[static_cast<std::size_t>(ypos[yi])];
      if (!relaxed_pair(g, xt, y, -1)) continue;
      std::vector<int> s2;
      switch (yi) {
        case 0:  // ..v_{a-1}, x_t..x_1, v_a..
          s2 = slice(seq, 0, a - 1);
          for (int q = t; q >= 0; --q) s2.push_back(R[static_cast<std::size_t>(q)]);
          append(s2, slice(seq, a, p - 1));
          break;
        case 1:  // ..v_a, x_1..x_t, v_{a+1}..
          s2 = slice(seq, 0, a);
          for (int q = 0; q <= t; ++q) s2.push_back(R[static_cast<std::size_t>(q)]);
          append(s2, slice(seq, a + 1, p - 1));
          break;
        case 2:  // ..v_{b-1}, x_t..x_r, v_b..
          s2 = slice(seq, 0, b - 1);
          for (int q = t; q < r_len; ++q) s2.push_back(R[static_cast<std::size_t>(q)]);
          append(s2, slice(seq, b, p - 1));
          break;
        case 3:  // ..v_b, x_r..x_t, v_{b+1}..
          s2 = slice(seq, 0, b);
          for (int q = r_len - 1; q >= t; --q) s2.push_back(R[static_cast<std::size_t>(q)]);
          append(s2, slice(seq, b + 1, p - 1));
          break;
      }
      return lift_to_grow(g, std::move(s2), MoveKind::claim1_rotation, {a, b, t, yi}, res.ear, seq.size());
    }
  }

  if (moveset == Hypothesis::claw_z1) {
    if (relaxed_pair(g, seq[static_cast<std::size_t>(a) - 1], seq[static_cast<std::size_t>(b) - 1], -1)) {
      std::vector<int> s2 = slice(seq, 0, a - 1);
      append(s2, reversed(slice(seq, a, b - 1)));
      append(s2, R);
      append(s2, slice(seq, b, p - 1));
      return lift_to_grow(g, std::move(s2), MoveKind::claim3_rotation_z1, {a, b, 0}, res.ear, seq.size());
    }
    if (relaxed_pair(g, seq[static_cast<std::size_t>(a) + 1], seq[static_cast<std::size_t>(b) + 1], -1)) {
      std::vector<int> s2 = slice(seq, 0, a);
      append(s2, R);
      append(s2, reversed(slice(seq, a + 1, b)));
      append(s2, slice(seq, b + 1, p - 1));
      return lift_to_grow(g, std::move(s2), MoveKind::claim3_rotation_z1, {a, b, 1}, res.ear, seq.size());
    }
  } else if (moveset == Hypothesis::claw_p4) {
    bool gap_relaxed = relaxed_pair(g, seq[static_cast<std::size_t>(a) - 1], seq[static_cast<std::size_t>(a) + 1], -1);
    if (b >= a + 2 && gap_relaxed && g.adjacent(seq[static_cast<std::size_t>(a)], seq[static_cast<std::size_t>(b) - 1])) {
      std::vector<int> s2 = slice(seq, 0, a - 1);
      append(s2, slice(seq, a + 1, b - 1));
      s2.push_back(seq[static_cast<std::size_t>(a)]);
      append(s2, R);
      append(s2, slice(seq, b, p - 1));
      return lift_to_grow(g, std::move(s2), MoveKind::claim3_rotation_p4, {a, b}, res.ear, seq.size());
    }
    if (b >= a + 2 && gap_relaxed) {
      int kp = -1;
      for (int t = a + 1; t <= b - 1; ++t)
        if (!g.adjacent(seq[static_cast<std::size_t>(a)], seq[static_cast<std::size_t>(t)])) {
          kp = t;
          break;
        }
      res.ear.k = kp;
      if (kp >= a + 3 && g.adjacent(R[0], seq[static_cast<std::size_t>(kp) - 1])) {
        std::vector<int> s2 = slice(seq, 0, a - 1);
        append(s2, slice(seq, a + 1, kp - 2));
        s2.push_back(seq[static_cast<std::size_t>(a)]);
        s2.push_back(R[0]);
        append(s2, slice(seq, kp - 1, p - 1));
        return lift_to_grow(g, std::move(s2), MoveKind::claim4_rotation_p4a, {a, b, kp}, res.ear, seq.size());
      }
      if (kp >= a + 2 && g.adjacent(R[0], seq[static_cast<std::size_t>(kp)])) {
        std::vector<int> s2 = slice(seq, 0, a - 1);
        append(s2, slice(seq, a + 1, kp - 1));
        s2.push_back(seq[static_cast<std::size_t>(a)]);
        s2.push_back(R[0]);
        append(s2, slice(seq, kp, p - 1));
        return lift_to_grow(g, std::move(s2), MoveKind::claim4_rotation_p4b, {a, b, kp}, res.ear, seq.size());
      }
    }
  }

  return res;  // NoMove with ear context
}

std::variant<SeparableStructure, NonHeavyWitness> separable_structure(const Graph& g, int x) {
  int n = g.vertex_count();
  if (x < 0 || x >= n) raise(Errc::index_out_of_range, "cut vertex out of range");
  Bitset removed(n);
  removed.set(x);
  auto comps = components_excluding(g, removed);
  if (comps.size() < 2) raise(Errc::bad_parameter, "vertex " + std::to_string(x) + " is not a cut vertex");
  if (comps.size() > 2) {
    // the refuting claw: x with one neighbor from each of three components
    std::vector<int> leaves;
    for (std::size_t c = 0; c < 3; ++c)
      for (int v : comps[c])
        if (g.adjacent(x, v)) {
          leaves.push_back(v);
          break;
        }
    std::sort(leaves.begin(), leaves.end());
    Embedding emb{PatternId::claw(), {x, leaves[0], leaves[1], leaves[2]}};
    return make_non_heavy_witness(g, emb, -1);
  }
  return SeparableStructure{x, comps[0], comps[1]};
}

namespace {

Embedding claw_embedding(int center, int l0, int l1, int l2) {
  std::vector<int> leaves{l0, l1, l2};
  std::sort(leaves.begin(), leaves.end());
  return Embedding{PatternId::claw(), {center, leaves[0], leaves[1], leaves[2]}};
}

Embedding z1_embedding(int t0, int t1, int base, int pendant) {
  if (t0 > t1) std::swap(t0, t1);
  return Embedding{PatternId::z(1), {t0, t1, base, pendant}};
}

Embedding p4_embedding(int a, int b, int c, int d) {
  if (a > d) return Embedding{PatternId::path(4), {d, c, b, a}};
  return Embedding{PatternId::path(4), {a, b, c, d}};
}

Outcome violation_or_unresolved(const Graph& g, Witness w, const PathSeq& best, std::vector<Move> moves,
                                const std::string& what) {
  Outcome out;
  out.moves = std::move(moves);
  if (witness_checks(g, w)) {
    out.result = std::move(w);
  } else {
    out.result = UnresolvedInfo{"witness failed re-verification: " + what, best};
  }
  return out;
}

Outcome unresolved(const std::string& reason, const PathSeq& best, std::vector<Move> moves) {
  Outcome out;
  out.moves = std::move(moves);
  out.result = UnresolvedInfo{reason, best};
  return out;
}

Outcome extract_z1(const Graph& g, const PathSeq& path, const EarContext& ear, std::vector<Move> moves) {
  if (!ear.found) return unresolved("no move applies and no ear exists", path, std::move(moves));
  int n = g.vertex_count();
  const auto& seq = path.vertices;
  const std::pair<int, int> sides[2] = {{ear.i, ear.interior.front()}, {ear.j, ear.interior.back()}};
  for (auto [s, xv] : sides) {
    int u = seq[static_cast<std::size_t>(s) - 1];
    int w = seq[static_cast<std::size_t>(s) + 1];
    int center = seq[static_cast<std::size_t>(s)];
    if (g.adjacent(xv, u) || g.adjacent(xv, w)) continue;  // claim 1 should have consumed these
    if (g.adjacent(u, w))
      return violation_or_unresolved(g, Witness{z1_embedding(u, w, center, xv)}, path, std::move(moves), "Z1");
    if (g.degree(u) + g.degree(w) < n - 1)
      return violation_or_unresolved(g, Witness{make_non_heavy_witness(g, claw_embedding(center, xv, u, w), -1)},
                                     path, std::move(moves), "claw");
  }
  return unresolved("rotation closure reached without a witness", path, std::move(moves));
}

Outcome extract_p4(const Graph& g, const PathSeq& path, const EarContext& ear, std::vector<Move> moves) {
  if (!ear.found) return unresolved("no move applies and no ear exists", path, std::move(moves));
  const auto& seq = path.vertices;
  int a = ear.i, b = ear.j;
  int x1 = ear.interior.front();
  int u = seq[static_cast<std::size_t>(a) - 1];
  int w = seq[static_cast<std::size_t>(a) + 1];
  int va = seq[static_cast<std::size_t>(a)];
  if (!relaxed_pair(g, u, w, -1))
    return violation_or_unresolved(g, Witness{make_non_heavy_witness(g, claw_embedding(va, x1, u, w), -1)}, path,
                                   std::move(moves), "claw");
  if (b >= a + 2) {
    int kp = -1;
    for (int t = a + 1; t <= b - 1; ++t)
      if (!g.adjacent(va, seq[static_cast<std::size_t>(t)])) {
        kp = t;
        break;
      }
    if (kp < 0) return unresolved("claim 3 pivot missing", path, std::move(moves));
    return violation_or_unresolved(
        g, Witness{p4_embedding(x1, va, seq[static_cast<std::size_t>(kp) - 1], seq[static_cast<std::size_t>(kp)])},
        path, std::move(moves), "P4");
  }
  if (ear.interior.size() >= 2)
    return violation_or_unresolved(g, Witness{p4_embedding(ear.interior[1], x1, va, u)}, path, std::move(moves),
                                   "P4");
  return unresolved("adjacent-endpoint ear closed without a witness", path, std::move(moves));
}

Outcome grow_loop(const Graph& g, Hypothesis mode) {
  int n = g.vertex_count();
  PathSeq path{{0}};
  Outcome out;
  while (path.length() < n) {
    GrowResult r = try_grow(g, path, mode);
    if (r.grew()) {
      out.moves.push_back(r.move);
      path = std::move(*r.grown);
      continue;
    }
    Outcome ext = mode == Hypothesis::claw_z1 ? extract_z1(g, path, r.ear, std::move(out.moves))
                                              : extract_p4(g, path, r.ear, std::move(out.moves));
    return ext;
  }
  if (!is_hamilton_path(g, path)) return unresolved("grown path failed validation", path, std::move(out.moves));
  out.result = std::move(path);
  return out;
}

// Hamilton path of a graph that is itself a path, if it is one.
std::optional<PathSeq> path_graph_path(const Graph& g) {
  int n = g.vertex_count();
  if (n == 1) return PathSeq{{0}};
  int start = -1;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) > 2) return std::nullopt;
    if (g.degree(v) == 1 && start < 0) start = v;
  }
  if (start < 0) return std::nullopt;  // all degree 2: a cycle
  std::vector<int> seq{start};
  int prev = -1, cur = start;
  while (static_cast<int>(seq.size()) < n) {
    int nxt = -1;
    g.for_each_neighbor(cur, [&](int u) {
      if (u != prev && nxt < 0) nxt = u;
    });
    if (nxt < 0) return std::nullopt;  // disconnected
    seq.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  return PathSeq{std::move(seq)};
}

// Assertion-failure escape hatch for the separable constructions: a full
// classification either produces the real refutation or an honest
// unresolved outcome naming the failed assertion.
Outcome classify_fallback(const Graph& g, const std::string& assertion) {
  HypothesisReport rep = classify(g, -1);
  if (!rep.claw_o_heavy && rep.claw_witness)
    return violation_or_unresolved(g, Witness{*rep.claw_witness}, PathSeq{}, {}, "claw (classify)");
  if (!rep.z1_free && rep.z1_violation)
    return violation_or_unresolved(g, Witness{*rep.z1_violation}, PathSeq{}, {}, "Z1 (classify)");
  return unresolved("structural assertion failed: " + assertion, PathSeq{}, {});
}

struct Case1Setup {
  int x = -1;
  int w = -1;
  int y = -1;
  int y_prime = -1;
  std::vector<int> comp_c, comp_d;
};

Outcome z1_case_a(const Graph& g, const Case1Setup& cs);
Outcome z1_case_b(const Graph& g, const Case1Setup& cs);
Outcome z1_case_c(const Graph& g, const Case1Setup& cs);

Outcome z1_case1(const Graph& g, int x) {
  int n = g.vertex_count();
  auto sep = separable_structure(g, x);
  if (std::holds_alternative<NonHeavyWitness>(sep))
    return violation_or_unresolved(g, Witness{std::get<NonHeavyWitness>(sep)}, PathSeq{}, {}, "claw (components)");
  auto& s = std::get<SeparableStructure>(sep);

  Case1Setup cs;
  cs.x = x;
  cs.comp_c = s.comp_c;
  cs.comp_d = s.comp_d;
  auto nbrs_in = [&](const std::vector<int>& comp) {
    std::vector<int> out;
    for (int v : comp)
      if (g.adjacent(x, v)) out.push_back(v);
    return out;
  };
  std::vector<int> nc = nbrs_in(cs.comp_c), nd = nbrs_in(cs.comp_d);
  if (static_cast<int>(nd.size()) < 2) {
    std::swap(cs.comp_c, cs.comp_d);
    std::swap(nc, nd);
  }
  if (static_cast<int>(nd.size()) < 2) return classify_fallback(g, "cut vertex has fewer than two neighbors per side");
  cs.w = nc.front();

  // N(x) must be independent; an adjacent pair plus a cross-component
  // neighbor is an induced Z1 rooted at x.
  std::vector<int> nx = g.neighbors(x);
  for (std::size_t i = 0; i < nx.size(); ++i)
    for (std::size_t j = i + 1; j < nx.size(); ++j)
      if (g.adjacent(nx[i], nx[j])) {
        bool in_c = std::binary_search(cs.comp_c.begin(), cs.comp_c.end(), nx[i]);
        const std::vector<int>& other = in_c ? nd : nc;
        return violation_or_unresolved(g, Witness{z1_embedding(nx[i], nx[j], x, other.front())}, PathSeq{}, {},
                                       "Z1 (triangle at cut vertex)");
      }

  cs.y = nd[0];
  cs.y_prime = nd[1];
  if (g.degree(cs.y) < g.degree(cs.y_prime)) std::swap(cs.y, cs.y_prime);
  if (g.degree(cs.y) + g.degree(cs.y_prime) < n - 1)
    return violation_or_unresolved(
        g, Witness{make_non_heavy_witness(g, claw_embedding(x, cs.y, cs.y_prime, cs.w), -1)}, PathSeq{}, {},
        "claw (light neighbor pair)");

  int dx = g.degree(x);
  if (2 * dx == n + 1) return z1_case_a(g, cs);
  if (2 * dx == n) return z1_case_b(g, cs);
  if (2 * dx <= n - 1) return z1_case_c(g, cs);
  return classify_fallback(g, "cut vertex degree exceeds (n+1)/2");
}

// Case A: d(x) = (n+1)/2. Y = N(x) minus w joins completely to the rest.
Outcome z1_case_a(const Graph& g, const Case1Setup& cs) {
  int n = g.vertex_count();
  if (cs.comp_c.size() != 1) return classify_fallback(g, "case A: first side not a single vertex");
  std::vector<int> set_y, set_z;
  Bitset in_y(n);
  for (int v : g.neighbors(cs.x))
    if (v != cs.w) {
      set_y.push_back(v);
      in_y.set(v);
    }
  for (int v = 0; v < n; ++v)
    if (v != cs.x && v != cs.w && !in_y.test(v)) set_z.push_back(v);
  if (set_y.size() != set_z.size() + 1) return classify_fallback(g, "case A: |Y| != |Z|+1");
  for (int yv : set_y)
    for (int zv : set_z)
      if (!g.adjacent(yv, zv)) return classify_fallback(g, "case A: Y-Z join incomplete");

  std::vector<int> seq{cs.w, cs.x};
  for (std::size_t i = 0; i < set_z.size(); ++i) {
    seq.push_back(set_y[i]);
    seq.push_back(set_z[i]);
  }
  seq.push_back(set_y.back());
  PathSeq path{std::move(seq)};
  if (!is_hamilton_path(g, path)) return classify_fallback(g, "case A: assembled path invalid");
  Outcome out;
  out.result = std::move(path);
  return out;
}

// Case B: d(x) = n/2. The minimum-degree vertex of Y pairs with the
// maximum-degree vertex of Z.
Outcome z1_case_b(const Graph& g, const Case1Setup& cs) {
  int n = g.vertex_count();
  if (cs.comp_c.size() != 1) return classify_fallback(g, "case B: first side not a single vertex");
  std::vector<int> set_y, set_z;
  Bitset in_y(n);
  for (int v : g.neighbors(cs.x))
    if (v != cs.w) {
      set_y.push_back(v);
      in_y.set(v);
    }
  for (int v = 0; v < n; ++v)
    if (v != cs.x && v != cs.w && !in_y.test(v)) set_z.push_back(v);
  if (set_y.size() != set_z.size()) return classify_fallback(g, "case B: |Y| != |Z|");
  if (set_z.size() < 2) return classify_fallback(g, "case B: |Z| < 2");

  auto by_degree_min = [&](const std::vector<int>& vs) {
    int best = vs[0];
    for (int v : vs)
      if (g.degree(v) < g.degree(best)) best = v;
    return best;
  };
  auto by_degree_max = [&](const std::vector<int>& vs) {
    int best = vs[0];
    for (int v : vs)
      if (g.degree(v) > g.degree(best)) best = v;
    return best;
  };
  int y1 = by_degree_min(set_y);
  int z1 = by_degree_max(set_z);
  std::erase(set_y, y1);
  std::erase(set_z, z1);
  for (int yv : set_y)
    for (int zv : set_z)
      if (!g.adjacent(yv, zv)) return classify_fallback(g, "case B: Y\\{y1}-Z join incomplete");
  for (int yv : set_y)
    if (!g.adjacent(yv, z1)) return classify_fallback(g, "case B: z1 not joined to Y");
  if (!g.adjacent(y1, z1)) return classify_fallback(g, "case B: y1 not adjacent to z1");

  std::vector<int> seq{cs.w, cs.x, y1, z1};
  for (std::size_t i = 0; i < set_y.size(); ++i) {
    seq.push_back(set_y[i]);
    seq.push_back(set_z[i]);
  }
  PathSeq path{std::move(seq)};
  if (!is_hamilton_path(g, path)) return classify_fallback(g, "case B: assembled path invalid");
  Outcome out;
  out.result = std::move(path);
  return out;
}

// Case C: d(x) <= (n-1)/2. Y is the neighborhood of the heaviest second
// neighbor z; the two x-neighbors inside Y open the alternation.
Outcome z1_case_c(const Graph& g, const Case1Setup& cs) {
  int n = g.vertex_count();
  if (cs.comp_c.size() != 1) return classify_fallback(g, "case C: first side not a single vertex");
  int z = -1;
  g.for_each_neighbor(cs.y, [&](int v) {
    if (v == cs.x) return;
    if (z < 0 || g.degree(v) > g.degree(z)) z = v;
  });
  if (z < 0) return classify_fallback(g, "case C: y has no second neighbor");
  if (g.adjacent(cs.x, z)) return classify_fallback(g, "case C: z adjacent to x");
  if (2 * g.degree(z) < n - 1) return classify_fallback(g, "case C: z degree too small");

  std::vector<int> set_y = g.neighbors(z);
  Bitset in_y(n);
  for (int v : set_y) in_y.set(v);
  std::vector<int> set_z;
  for (int v = 0; v < n; ++v)
    if (v != cs.x && v != cs.w && !in_y.test(v)) set_z.push_back(v);
  if (in_y.test(cs.x) || in_y.test(cs.w)) return classify_fallback(g, "case C: x or w inside N(z)");
  if (set_y.size() != set_z.size() + 1) return classify_fallback(g, "case C: |Y| != |Z|+1");

  std::vector<int> xy;
  for (int v : set_y)
    if (g.adjacent(cs.x, v)) xy.push_back(v);
  if (xy.size() < 2) return classify_fallback(g, "case C: x has fewer than two neighbors in Y");
  int y1 = xy[0], y2 = xy[1];

  int z1 = set_z[0];
  for (int v : set_z)
    if (g.degree(v) < g.degree(z1)) z1 = v;

  for (int zv : set_z)
    if (!g.adjacent(y1, zv) || !g.adjacent(y2, zv))
      return classify_fallback(g, "case C: y1/y2 not joined to Z");
  for (int zv : set_z) {
    if (zv == z1) continue;
    for (int yv : set_y)
      if (!g.adjacent(zv, yv)) return classify_fallback(g, "case C: Z\\{z1} not joined to Y");
  }

  std::vector<int> rest_y, rest_z;
  for (int v : set_y)
    if (v != y1 && v != y2) rest_y.push_back(v);
  for (int v : set_z)
    if (v != z1) rest_z.push_back(v);

  std::vector<int> order_y{y1, y2};
  append(order_y, rest_y);
  std::vector<int> order_z{z1};
  append(order_z, rest_z);

  std::vector<int> seq{cs.w, cs.x};
  for (std::size_t i = 0; i < order_z.size(); ++i) {
    seq.push_back(order_y[i]);
    seq.push_back(order_z[i]);
  }
  seq.push_back(order_y.back());
  PathSeq path{std::move(seq)};
  if (!is_hamilton_path(g, path)) return classify_fallback(g, "case C: assembled path invalid");
  Outcome out;
  out.result = std::move(path);
  return out;
}

}  // namespace

Outcome solve_p3(const Graph& g) {
  require_connected(g);
  int n = g.vertex_count();
  Outcome out;
  std::vector<int> seq{0};
  Bitset member(n);
  member.set(0);

  auto rebuild = [&](const std::vector<int>& s) {
    member.clear();
    for (int v : s) member.set(v);
  };

  while (static_cast<int>(seq.size()) < n) {
    int pos = -1, x = -1;
    for (int i = 0; i < static_cast<int>(seq.size()) && x < 0; ++i) {
      int cand = bits::first_excluding(g.row(seq[static_cast<std::size_t>(i)]), member.words());
      if (cand >= 0) {
        pos = i;
        x = cand;
      }
    }
    if (x < 0) raise(Errc::not_connected, "no outside vertex reachable");
    int p = static_cast<int>(seq.size());
    if (pos == p - 1) {
      seq.push_back(x);
      member.set(x);
      out.moves.push_back({MoveKind::endpoint_extend, {x}});
      continue;
    }
    if (pos == 0) {
      seq.insert(seq.begin(), x);
      member.set(x);
      out.moves.push_back({MoveKind::endpoint_extend, {x}});
      continue;
    }
    int next = seq[static_cast<std::size_t>(pos) + 1];
    if (g.adjacent(x, next)) {
      seq.insert(seq.begin() + pos + 1, x);
      member.set(x);
      out.moves.push_back({MoveKind::o1_insert, {pos, x}});
      continue;
    }
    if (g.degree(x) + g.degree(next) >= n - 1) {
      std::vector<int> s2(seq.begin(), seq.begin() + pos + 1);
      s2.push_back(x);
      s2.insert(s2.end(), seq.begin() + pos + 1, seq.end());
      seq = lift(g, ORPath{std::move(s2), -1}).vertices;
      rebuild(seq);
      out.moves.push_back({MoveKind::o1_insert, {pos, x}});
      continue;
    }
    // the induced P3 {x, v_pos, next} is not o_{-1}-heavy
    Embedding emb{PatternId::path(3), {std::min(x, next), seq[static_cast<std::size_t>(pos)], std::max(x, next)}};
    return violation_or_unresolved(g, Witness{make_non_heavy_witness(g, emb, -1)}, PathSeq{seq},
                                   std::move(out.moves), "P3");
  }
  PathSeq path{std::move(seq)};
  if (!is_hamilton_path(g, path)) return unresolved("assembled path failed validation", path, std::move(out.moves));
  out.result = std::move(path);
  return out;
}

Outcome solve_claw_z1(const Graph& g) {
  require_connected(g);
  if (auto p = path_graph_path(g)) {
    Outcome out;
    out.result = std::move(*p);
    return out;
  }
  ConnectivityInfo conn = connectivity(g);
  if (!conn.cut_vertices.empty()) {
    for (int c : conn.cut_vertices)
      if (g.degree(c) >= 3) return z1_case1(g, c);
    // Every cut vertex has degree 2: not expected for a non-path graph
    // (see notes in the solver docs); the generic loop still applies.
  }
  return grow_loop(g, Hypothesis::claw_z1);
}

Outcome solve_claw_p4(const Graph& g) {
  require_connected(g);
  int n = g.vertex_count();
  ConnectivityInfo conn = connectivity(g);
  if (!conn.cut_vertices.empty()) {
    int x = conn.cut_vertices.front();
    auto sep = separable_structure(g, x);
    if (std::holds_alternative<NonHeavyWitness>(sep))
      return violation_or_unresolved(g, Witness{std::get<NonHeavyWitness>(sep)}, PathSeq{}, {},
                                     "claw (components)");
    auto& s = std::get<SeparableStructure>(sep);

    const std::vector<int>* comps[2] = {&s.comp_c, &s.comp_d};
    for (int side = 0; side < 2; ++side) {
      const std::vector<int>& comp = *comps[side];
      const std::vector<int>& other = *comps[1 - side];
      for (int v : comp) {
        if (g.adjacent(x, v)) continue;
        // v sits at distance >= 2: the first such vertex with a common
        // neighbor realizes the induced P4 w-x-y-z
        Bitset none(n);
        for (int z : comp) {
          if (g.adjacent(x, z)) continue;
          int y = bits::first_common_excluding(g.row(x), g.row(z), none.words());
          if (y < 0) continue;
          int w = -1;
          for (int cand : other)
            if (g.adjacent(x, cand)) {
              w = cand;
              break;
            }
          if (w < 0) break;
          return violation_or_unresolved(g, Witness{p4_embedding(w, x, y, z)}, PathSeq{}, {}, "P4 (distance 2)");
        }
        return unresolved("unreached vertex without a distance-2 witness", PathSeq{}, {});
      }
    }

    // x dominates both sides; consecutive same-side vertices must be
    // relaxed-adjacent, which lifts to a Hamilton path.
    std::vector<int> seq = s.comp_c;
    seq.push_back(x);
    append(seq, s.comp_d);
    for (int side = 0; side < 2; ++side) {
      const std::vector<int>& comp = *comps[side];
      const std::vector<int>& other = *comps[1 - side];
      for (std::size_t i = 0; i + 1 < comp.size(); ++i)
        if (!relaxed_pair(g, comp[i], comp[i + 1], -1))
          return violation_or_unresolved(
              g, Witness{make_non_heavy_witness(g, claw_embedding(x, comp[i], comp[i + 1], other.front()), -1)},
              PathSeq{}, {}, "claw (light same-side pair)");
    }
    Outcome out;
    PathSeq lifted = lift(g, ORPath{std::move(seq), -1});
    if (!is_hamilton_path(g, lifted)) return unresolved("separable lift failed validation", lifted, {});
    out.result = std::move(lifted);
    return out;
  }
  return grow_loop(g, Hypothesis::claw_p4);
}

Outcome solve(const Graph& g, Hypothesis hypothesis) {
  require_connected(g);
  Outcome out;
  switch (hypothesis) {
    case Hypothesis::p3: out = solve_p3(g); break;
    case Hypothesis::claw_z1: out = solve_claw_z1(g); break;
    case Hypothesis::claw_p4: out = solve_claw_p4(g); break;
    case Hypothesis::auto_detect: {
      HypothesisReport rep = classify(g, -1);
      if (rep.p3_o_heavy)
        out = solve_p3(g);
      else if (rep.claw_o_heavy && rep.z1_free)
        out = solve_claw_z1(g);
      else if (rep.claw_o_heavy && rep.p4_free)
        out = solve_claw_p4(g);
      else
        return unresolved("no hypothesis holds", PathSeq{}, {});
      break;
    }
  }
  if (out.is_path() && !is_hamilton_path(g, out.path()))
    return unresolved("final validation rejected the path", out.path(), std::move(out.moves));
  if (out.is_violation() && !witness_checks(g, out.witness()))
    return unresolved("final validation rejected the witness", PathSeq{}, std::move(out.moves));
  return out;
}

bool witness_checks(const Graph& g, const Witness& w) {
  if (std::holds_alternative<NonHeavyWitness>(w)) return witness_checks(g, std::get<NonHeavyWitness>(w));
  return verify_embedding(g, std::get<Embedding>(w));
}

}  // namespace orpath
