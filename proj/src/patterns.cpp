#include "orpath/patterns.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>

namespace orpath {

int PatternId::vertex_count() const {
  switch (tag) {
    case Tag::path: return a;
    case Tag::c3: return 3;
    case Tag::z: return a + 3;
    case Tag::bull: return 5;
    case Tag::net: return 6;
    case Tag::wounded: return 6;
    case Tag::claw: return 4;
    case Tag::complete: return a;
    case Tag::complete_bipartite: return a + b;
  }
  return 0;
}

std::string PatternId::name() const {
  switch (tag) {
    case Tag::path: return "P" + std::to_string(a);
    case Tag::c3: return "C3";
    case Tag::z: return "Z" + std::to_string(a);
    case Tag::bull: return "B";
    case Tag::net: return "N";
    case Tag::wounded: return "W";
    case Tag::claw: return "claw";
    case Tag::complete: return "K" + std::to_string(a);
    case Tag::complete_bipartite: return "K" + std::to_string(a) + "," + std::to_string(b);
  }
  return "?";
}

std::optional<PatternId> PatternId::parse(std::string_view s) {
  std::string t;
  for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  auto num = [](std::string_view v) -> std::optional<int> {
    if (v.empty()) return std::nullopt;
    int x = 0;
    for (char c : v) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      x = x * 10 + (c - '0');
      if (x > kMaxVertices) return std::nullopt;
    }
    return x;
  };
  if (t == "claw" || t == "k1,3") return claw();
  if (t == "c3" || t == "triangle") return c3();
  if (t == "b" || t == "bull") return bull();
  if (t == "n" || t == "net") return net();
  if (t == "w" || t == "wounded") return wounded();
  if (t.size() >= 2 && t[0] == 'p')
    if (auto x = num(t.substr(1))) return path(*x);
  if (t.size() >= 2 && t[0] == 'z')
    if (auto x = num(t.substr(1))) return z(*x);
  if (t.size() >= 2 && t[0] == 'k') {
    auto comma = t.find(',');
    if (comma == std::string::npos) {
      if (auto x = num(std::string_view(t).substr(1))) return complete(*x);
    } else {
      auto x = num(std::string_view(t).substr(1, comma - 1));
      auto y = num(std::string_view(t).substr(comma + 1));
      if (x && y) return complete_bipartite(*x, *y);
    }
  }
  return std::nullopt;
}

Graph gen_pattern(const PatternId& id) {
  using Tag = PatternId::Tag;
  auto need = [&](bool ok) {
    if (!ok) raise(Errc::bad_parameter, "bad pattern parameter for " + id.name());
  };
  switch (id.tag) {
    case Tag::path: {
      need(id.a >= 1);
      GraphBuilder b(id.a);
      for (int v = 0; v + 1 < id.a; ++v) b.add_edge(v, v + 1);
      return b.build();
    }
    case Tag::c3: {
      GraphBuilder b(3);
      b.add_edge(0, 1);
      b.add_edge(1, 2);
      b.add_edge(0, 2);
      return b.build();
    }
    case Tag::z: {
      need(id.a >= 1);
      GraphBuilder b(id.a + 3);
      b.add_edge(0, 1);
      b.add_edge(1, 2);
      b.add_edge(0, 2);
      for (int v = 2; v < id.a + 2; ++v) b.add_edge(v, v + 1);
      return b.build();
    }
    case Tag::bull: {
      GraphBuilder b(5);
      b.add_edge(0, 1);
      b.add_edge(1, 2);
      b.add_edge(0, 2);
      b.add_edge(1, 3);
      b.add_edge(2, 4);
      return b.build();
    }
    case Tag::net: {
      GraphBuilder b(6);
      b.add_edge(0, 1);
      b.add_edge(1, 2);
      b.add_edge(0, 2);
      b.add_edge(0, 3);
      b.add_edge(1, 4);
      b.add_edge(2, 5);
      return b.build();
    }
    case Tag::wounded: {
      GraphBuilder b(6);
      b.add_edge(0, 1);
      b.add_edge(1, 2);
      b.add_edge(0, 2);
      b.add_edge(1, 3);
      b.add_edge(2, 4);
      b.add_edge(4, 5);
      return b.build();
    }
    case Tag::claw: {
      GraphBuilder b(4);
      b.add_edge(0, 1);
      b.add_edge(0, 2);
      b.add_edge(0, 3);
      return b.build();
    }
    case Tag::complete: {
      need(id.a >= 1);
      GraphBuilder b(id.a);
      for (int u = 0; u < id.a; ++u)
        for (int v = u + 1; v < id.a; ++v) b.add_edge(u, v);
      return b.build();
    }
    case Tag::complete_bipartite: {
      need(id.a >= 1 && id.b >= 1);
      GraphBuilder b(id.a + id.b);
      for (int u = 0; u < id.a; ++u)
        for (int v = 0; v < id.b; ++v) b.add_edge(u, id.a + v);
      return b.build();
    }
  }
  raise(Errc::bad_parameter, "unknown pattern");
}

namespace {

struct PatternInfo {
  int h = 0;
  std::array<std::uint8_t, 8> adj{};                 // pattern adjacency rows
  std::vector<std::array<std::uint8_t, 8>> auts;     // all automorphisms
};

PatternInfo make_pattern_info(const PatternId& id) {
  int h = id.vertex_count();
  if (h > 8) raise(Errc::pattern_too_large, "pattern " + id.name() + " has more than 8 vertices");
  Graph hg = gen_pattern(id);
  PatternInfo info;
  info.h = h;
  for (int u = 0; u < h; ++u)
    for (int v = 0; v < h; ++v)
      if (hg.adjacent(u, v)) info.adj[static_cast<std::size_t>(u)] |= static_cast<std::uint8_t>(1u << v);

  std::array<int, 8> perm{};
  std::iota(perm.begin(), perm.begin() + h, 0);
  do {
    bool ok = true;
    for (int u = 0; u < h && ok; ++u)
      for (int v = u + 1; v < h && ok; ++v) {
        bool e = (info.adj[static_cast<std::size_t>(u)] >> v) & 1;
        bool pe = (info.adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] >>
                   perm[static_cast<std::size_t>(v)]) &
                  1;
        if (e != pe) ok = false;
      }
    if (ok) {
      std::array<std::uint8_t, 8> p{};
      for (int i = 0; i < h; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(perm[static_cast<std::size_t>(i)]);
      info.auts.push_back(p);
    }
  } while (std::next_permutation(perm.begin(), perm.begin() + h));
  return info;
}

const PatternInfo& pattern_info(const PatternId& id) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, PatternInfo> cache;
  std::scoped_lock lock(mu);
  auto key = std::make_tuple(static_cast<int>(id.tag), id.a, id.b);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, make_pattern_info(id)).first;
  return it->second;
}

}  // namespace

bool for_each_induced(const Graph& g, const PatternId& id, const std::function<bool(const Embedding&)>& visit) {
  const PatternInfo& info = pattern_info(id);
  int h = info.h;
  int n = g.vertex_count();
  if (h > n) return true;
  int words = bits::word_count(n);

  // cand[level] holds the admissible host vertices for pattern vertex `level`.
  std::vector<std::uint64_t> cand(static_cast<std::size_t>(h) * words);
  std::vector<std::uint64_t> used(static_cast<std::size_t>(words), 0);
  auto level_span = [&](int l) {
    return std::span<std::uint64_t>(cand.data() + static_cast<std::size_t>(l) * words, static_cast<std::size_t>(words));
  };

  Embedding emb;
  emb.pattern = id;
  emb.map.assign(static_cast<std::size_t>(h), -1);
  std::vector<int> cursor(static_cast<std::size_t>(h), -1);

  auto fill_candidates = [&](int l) {
    auto dst = level_span(l);
    for (int w = 0; w < words; ++w) dst[static_cast<std::size_t>(w)] = ~std::uint64_t{0};
    if (n & 63) dst[static_cast<std::size_t>(words - 1)] = (std::uint64_t{1} << (n & 63)) - 1;
    for (int j = 0; j < l; ++j) {
      auto rowj = g.row(emb.map[static_cast<std::size_t>(j)]);
      bool want_edge = (info.adj[static_cast<std::size_t>(j)] >> l) & 1;
      for (int w = 0; w < words; ++w)
        dst[static_cast<std::size_t>(w)] &= want_edge ? rowj[static_cast<std::size_t>(w)] : ~rowj[static_cast<std::size_t>(w)];
    }
    for (int w = 0; w < words; ++w) dst[static_cast<std::size_t>(w)] &= ~used[static_cast<std::size_t>(w)];
  };

  auto next_in = [&](std::span<const std::uint64_t> s, int after) -> int {
    int start = after + 1;
    if (start >= n) return -1;
    std::size_t wi = static_cast<std::size_t>(start) >> 6;
    std::uint64_t x = s[wi] & (~std::uint64_t{0} << (start & 63));
    while (true) {
      if (x) return static_cast<int>(wi * 64) + std::countr_zero(x);
      if (++wi >= s.size()) return -1;
      x = s[wi];
    }
  };

  int level = 0;
  fill_candidates(0);
  while (level >= 0) {
    int v = next_in(level_span(level), cursor[static_cast<std::size_t>(level)]);
    if (v < 0) {
      cursor[static_cast<std::size_t>(level)] = -1;
      --level;
      if (level >= 0) {
        bits::reset(used, emb.map[static_cast<std::size_t>(level)]);
        cursor[static_cast<std::size_t>(level)] = emb.map[static_cast<std::size_t>(level)];
      }
      continue;
    }
    emb.map[static_cast<std::size_t>(level)] = v;
    cursor[static_cast<std::size_t>(level)] = v;
    if (level + 1 == h) {
      // canonical representative: lexicographically least over automorphisms
      bool canonical = true;
      for (const auto& aut : info.auts) {
        for (int i = 0; i < h; ++i) {
          int a = emb.map[static_cast<std::size_t>(aut[static_cast<std::size_t>(i)])];
          int b = emb.map[static_cast<std::size_t>(i)];
          if (a == b) continue;
          if (a < b) canonical = false;
          break;
        }
        if (!canonical) break;
      }
      if (canonical && !visit(emb)) return false;
    } else {
      bits::set(used, v);
      ++level;
      fill_candidates(level);
    }
  }
  return true;
}

std::vector<Embedding> enumerate_induced(const Graph& g, const PatternId& id) {
  std::vector<Embedding> out;
  for_each_induced(g, id, [&](const Embedding& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

std::size_t count_induced(const Graph& g, const PatternId& id) {
  std::size_t c = 0;
  for_each_induced(g, id, [&](const Embedding&) {
    ++c;
    return true;
  });
  return c;
}

std::optional<Embedding> find_free_violation(const Graph& g, const PatternId& id) {
  std::optional<Embedding> out;
  for_each_induced(g, id, [&](const Embedding& e) {
    out = e;
    return false;
  });
  return out;
}

bool is_free(const Graph& g, const PatternId& id) { return !find_free_violation(g, id).has_value(); }

bool verify_embedding(const Graph& g, const Embedding& e) {
  int h = e.pattern.vertex_count();
  if (static_cast<int>(e.map.size()) != h) return false;
  Graph hg = gen_pattern(e.pattern);
  for (int i = 0; i < h; ++i) {
    int u = e.map[static_cast<std::size_t>(i)];
    if (u < 0 || u >= g.vertex_count()) return false;
    for (int j = i + 1; j < h; ++j) {
      int v = e.map[static_cast<std::size_t>(j)];
      if (u == v) return false;
      if (hg.adjacent(i, j) != g.adjacent(u, v)) return false;
    }
  }
  return true;
}

bool is_c3_free(const Graph& g) {
  int n = g.vertex_count();
  Bitset common(n);
  for (int u = 0; u < n; ++u) {
    auto ru = g.row(u);
    bool found = false;
    g.for_each_neighbor(u, [&](int v) {
      if (found || v <= u) return;
      common.assign_and(ru, g.row(v));
      common.for_each_set([&](int w) {
        if (w > v) found = true;
      });
    });
    if (found) return false;
  }
  return true;
}

bool is_z1_free(const Graph& g) {
  int n = g.vertex_count();
  Bitset tri(n), exactly_one(n);
  for (int u = 0; u < n; ++u) {
    auto ru = g.row(u);
    bool found = false;
    g.for_each_neighbor(u, [&](int v) {
      if (found || v <= u) return;
      tri.assign_and(ru, g.row(v));
      auto rv = g.row(v);
      tri.for_each_set([&](int w) {
        if (found || w <= v) return;
        // pendant adjacent to exactly one of {u,v,w}
        auto rw = g.row(w);
        auto eo = exactly_one.words();
        bool any = false;
        for (std::size_t wi = 0; wi < eo.size(); ++wi) {
          std::uint64_t a = ru[wi], b = rv[wi], c = rw[wi];
          std::uint64_t one = (a ^ b ^ c) & ~(a & b & c);
          // clear the triangle's own bits
          eo[wi] = one;
        }
        exactly_one.reset(u);
        exactly_one.reset(v);
        exactly_one.reset(w);
        for (std::size_t wi = 0; wi < eo.size(); ++wi) any = any || eo[wi];
        if (any) found = true;
      });
    });
    if (found) return false;
  }
  return true;
}

bool is_p4_free(const Graph& g) {
  int n = g.vertex_count();
  Bitset a_side(n), b_side(n), rest(n);
  for (int u = 0; u < n; ++u) {
    auto ru = g.row(u);
    bool found = false;
    g.for_each_neighbor(u, [&](int v) {
      if (found) return;
      auto rv = g.row(v);
      // a - u - v - b with a in N(u)\N(v), b in N(v)\N(u), a !~ b
      a_side.words();
      for (std::size_t wi = 0; wi < a_side.words().size(); ++wi) {
        a_side.words()[wi] = ru[wi] & ~rv[wi];
        b_side.words()[wi] = rv[wi] & ~ru[wi];
      }
      a_side.reset(v);
      b_side.reset(u);
      a_side.for_each_set([&](int a) {
        if (found) return;
        auto ra = g.row(a);
        for (std::size_t wi = 0; wi < rest.words().size(); ++wi)
          rest.words()[wi] = b_side.words()[wi] & ~ra[wi];
        rest.reset(a);
        if (rest.any()) found = true;
      });
    });
    if (found) return false;
  }
  return true;
}

}  // namespace orpath
