#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "orpath/connectivity.hpp"
#include "orpath/generators.hpp"
#include "orpath/graph_io.hpp"
#include "test_util.hpp"

using namespace orpath;
using testutil::make_graph;

namespace {

std::multiset<int> degree_multiset(const Graph& g) {
  std::multiset<int> out;
  for (int v = 0; v < g.vertex_count(); ++v) out.insert(g.degree(v));
  return out;
}

// Independent connectivity recount on a plain adjacency matrix.
int component_count_oracle(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u)
        if (g.adjacent(v, u) && comp[u] == -1) {
          comp[u] = c;
          stack.push_back(u);
        }
    }
    ++c;
  }
  return c;
}

}  // namespace

TEST_CASE("build_graph basics") {
  Graph k2 = make_graph(2, {{0, 1}});
  CHECK(k2.degree(0) == 1);
  CHECK(k2.degree(1) == 1);
  CHECK(k2.edge_count() == 1);

  Graph claw = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(claw.degree(0) == 3);
  CHECK(claw.degree(1) == 1);
  CHECK(claw.adjacent(0, 2));
  CHECK(!claw.adjacent(1, 2));

  Graph c5 = testutil::cycle(5);
  for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  // duplicates collapse
  Graph dup = make_graph(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.edge_count() == 1);
}

TEST_CASE("build_graph errors") {
  CHECK_THROWS_AS(make_graph(3, {{0, 3}}), Error);
  CHECK_THROWS_AS(make_graph(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(GraphBuilder(0), Error);
  try {
    make_graph(3, {{1, 1}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::loop_edge);
  }
}

TEST_CASE("adjacency symmetry and degree invariants on generated graphs") {
  for (const Graph& g : {gen_g1(3, 9), gen_g2(5, 39), testutil::petersen(), random_connected(20, 0.4, 7)}) {
    long long degsum = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
      CHECK(!g.adjacent(u, u));
      degsum += g.degree(u);
      for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
    CHECK(degsum == 2 * g.edge_count());
  }
}

TEST_CASE("graph6 frozen strings") {
  // reference encodings cross-checked against a independent implementation
  CHECK(write_graph6(testutil::cycle(5)) == "Dhc");
  CHECK(write_graph6(make_graph(2, {{0, 1}})) == "A_");
  CHECK(write_graph6(gen_pattern(PatternId::claw())) == "Cs");
  CHECK(write_graph6(gen_pattern(PatternId::path(6))) == "EhCG");
  CHECK(write_graph6(gen_pattern(PatternId::complete(5))) == "D~{");
  CHECK(write_graph6(gen_pattern(PatternId::complete_bipartite(3, 5))) == "GFzfF?");

  CHECK(parse_graph6("Dhc") == testutil::cycle(5));
  CHECK(parse_graph6("A_") == make_graph(2, {{0, 1}}));
}

TEST_CASE("graph6 round-trip") {
  CHECK(parse_graph6(write_graph6(gen_g1(3, 9))) == gen_g1(3, 9));
  CHECK(parse_graph6(write_graph6(gen_g2(5, 39))) == gen_g2(5, 39));

  // multi-byte order field
  Graph p63 = gen_pattern(PatternId::path(63));
  std::string s63 = write_graph6(p63);
  CHECK(s63.substr(0, 4) == "~??~");
  CHECK(parse_graph6(s63) == p63);

  Graph big = random_connected(100, 0.1, 3);
  CHECK(parse_graph6(write_graph6(big)) == big);

  ConnectedEnumerator en(4);
  while (auto g = en.next()) CHECK(parse_graph6(write_graph6(*g)) == *g);
}

TEST_CASE("graph6 malformed inputs") {
  CHECK_THROWS_AS(parse_graph6(""), Error);
  CHECK_THROWS_AS(parse_graph6("D"), Error);        // truncated data
  CHECK_THROWS_AS(parse_graph6("Dhcc"), Error);     // excess data
  CHECK_THROWS_AS(parse_graph6("D\x07c"), Error);   // illegal byte
  try {
    parse_graph6("");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::malformed_graph6);
  }
}

TEST_CASE("edge list round-trip") {
  Graph g = gen_g1(3, 9);
  CHECK(parse_edge_list(write_edge_list(g)) == g);
  CHECK(read_graph("3 2\n0 1\n1 2\n") == make_graph(3, {{0, 1}, {1, 2}}));
  CHECK(read_graph("Dhc") == testutil::cycle(5));
  CHECK_THROWS_AS(parse_edge_list("3 5\n0 1\n"), Error);
}

TEST_CASE("connectivity basics") {
  Graph p3 = gen_pattern(PatternId::path(3));
  ConnectivityInfo c = connectivity(p3);
  CHECK(c.connected);
  CHECK(c.cut_vertices == std::vector<int>{1});
  CHECK(!c.biconnected);

  ConnectivityInfo c5 = connectivity(testutil::cycle(5));
  CHECK(c5.connected);
  CHECK(c5.cut_vertices.empty());
  CHECK(c5.biconnected);

  Graph two = make_graph(4, {{0, 1}, {2, 3}});
  ConnectivityInfo tc = connectivity(two);
  CHECK(!tc.connected);
  CHECK(tc.components.size() == 2);
}

TEST_CASE("G1 cut vertices are the gadget stubs") {
  Graph g1 = gen_g1(3, 9);  // clique 0..2, stubs 3..5, pendants 6..8
  ConnectivityInfo c = connectivity(g1);
  CHECK(c.cut_vertices == std::vector<int>{3, 4, 5});

  // oracle: deleting each stub disconnects, deleting anything else does not
  for (int v = 0; v < 9; ++v) {
    Bitset removed(9);
    removed.set(v);
    int comps = static_cast<int>(components_excluding(g1, removed).size());
    bool is_cut = comps > 1;
    CHECK(is_cut == (v >= 3 && v <= 5));
  }
}

TEST_CASE("pattern catalog shapes") {
  CHECK(gen_pattern(PatternId::path(5)).vertex_count() == 5);
  CHECK(gen_pattern(PatternId::c3()).edge_count() == 3);

  Graph z1 = gen_pattern(PatternId::z(1));
  CHECK(z1.vertex_count() == 4);
  CHECK(z1.edge_count() == 4);

  Graph net = gen_pattern(PatternId::net());
  CHECK(net.vertex_count() == 6);
  CHECK(net.edge_count() == 6);
  CHECK(degree_multiset(net) == std::multiset<int>{1, 1, 1, 3, 3, 3});

  Graph w = gen_pattern(PatternId::wounded());
  CHECK(degree_multiset(w) == std::multiset<int>{1, 1, 2, 2, 3, 3});

  Graph bull = gen_pattern(PatternId::bull());
  CHECK(degree_multiset(bull) == std::multiset<int>{1, 1, 2, 3, 3});

  CHECK(gen_pattern(PatternId::z(4)).vertex_count() == 7);
  CHECK(gen_pattern(PatternId::complete_bipartite(2, 3)).edge_count() == 6);
  CHECK_THROWS_AS(gen_pattern(PatternId::path(0)), Error);
  CHECK_THROWS_AS(gen_pattern(PatternId::z(0)), Error);
}

TEST_CASE("pattern names parse back") {
  for (const char* name : {"P4", "C3", "Z1", "B", "N", "W", "claw", "K5", "K3,5"}) {
    auto pid = PatternId::parse(name);
    REQUIRE(pid.has_value());
    CHECK(pid->name() == name);
  }
}

TEST_CASE("G1 structure") {
  Graph g = gen_g1(3, 9);
  CHECK(g.vertex_count() == 9);
  CHECK(g.edge_count() == 15);
  CHECK(degree_multiset(g) == std::multiset<int>{1, 1, 1, 4, 4, 4, 5, 5, 5});

  int pendants = 0;
  for (int v = 0; v < 9; ++v)
    if (g.degree(v) == 1) ++pendants;
  CHECK(pendants == 3);

  CHECK_THROWS_AS(gen_g1(0, 9), Error);
  CHECK_THROWS_AS(gen_g1(3, 6), Error);
  CHECK(in_g1_paper_range(3, 9));
  CHECK(!in_g1_paper_range(3, 8));

  // k pendant vertices for other parameters too
  for (int k = 1; k <= 4; ++k) {
    Graph h = gen_g1(k, 2 * k + 3);
    int cnt = 0;
    for (int v = 0; v < h.vertex_count(); ++v)
      if (h.degree(v) == 1) ++cnt;
    CHECK(cnt == k);
  }
}

TEST_CASE("G2 structure") {
  Graph g = gen_g2(5, 39);
  CHECK(g.vertex_count() == 39);
  CHECK(g.edge_count() == 441);  // 153 clique + 270 join + 15 hub + 3 pendant
  std::multiset<int> want;
  for (int i = 0; i < 3; ++i) want.insert(1);
  for (int i = 0; i < 3; ++i) want.insert(6);
  for (int i = 0; i < 15; ++i) want.insert(19);
  for (int i = 0; i < 18; ++i) want.insert(32);
  CHECK(degree_multiset(g) == want);

  int pendants = 0;
  for (int v = 0; v < 39; ++v)
    if (g.degree(v) == 1) ++pendants;
  CHECK(pendants == 3);

  CHECK_THROWS_AS(gen_g2(5, 21), Error);
  CHECK(in_g2_paper_range(5, 39));
  CHECK(!in_g2_paper_range(5, 38));
}

TEST_CASE("random_connected") {
  CHECK(random_connected(1, 0.5, 11).vertex_count() == 1);
  CHECK(random_connected(5, 1.0, 11) == gen_pattern(PatternId::complete(5)));

  Graph a = random_connected(12, 0.4, 42);
  Graph b = random_connected(12, 0.4, 42);
  CHECK(write_graph6(a) == write_graph6(b));
  CHECK(is_connected(a));

  Graph c = random_connected(12, 0.4, 43);
  CHECK(!(a == c));  // overwhelmingly likely for a sane generator

  CHECK_THROWS_AS(random_connected(5, 0.0, 1), Error);
}

TEST_CASE("enumerate_connected counts") {
  CHECK(count_connected_graphs(1) == 1);
  CHECK(count_connected_graphs(2) == 1);
  CHECK(count_connected_graphs(3) == 4);
  CHECK(count_connected_graphs(4) == 38);
  CHECK(count_connected_graphs(5) == 728);
  CHECK_THROWS_AS(ConnectedEnumerator(9), Error);

  // independent recount via the matrix-based component oracle
  std::uint64_t recount = 0;
  for (std::uint64_t mask = 0; mask < (1u << 6); ++mask) {
    GraphBuilder b(4);
    int bit = 0;
    for (int j = 1; j < 4; ++j)
      for (int i = 0; i < j; ++i, ++bit)
        if ((mask >> bit) & 1) b.add_edge(i, j);
    if (component_count_oracle(b.build()) == 1) ++recount;
  }
  CHECK(recount == 38);

  // mask-range partition covers the space exactly once
  std::uint64_t split = 0;
  ConnectedEnumerator lo(4, 0, 32), hi(4, 32, 64);
  while (lo.next()) ++split;
  while (hi.next()) ++split;
  CHECK(split == 38);
}
