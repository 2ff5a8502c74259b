#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orpath/generators.hpp"
#include "orpath/patterns.hpp"
#include "test_util.hpp"

using namespace orpath;
using testutil::make_graph;
using testutil::subset_scan_count;

TEST_CASE("claw occurrences") {
  CHECK(count_induced(testutil::cycle(5), PatternId::claw()) == 0);

  Graph g1 = gen_g1(3, 9);
  auto embs = enumerate_induced(g1, PatternId::claw());
  REQUIRE(embs.size() == 3);
  for (const auto& e : embs) {
    CHECK(e.map[0] <= 2);                                       // center is a clique vertex
    CHECK(std::vector<int>(e.map.begin() + 1, e.map.end()) == std::vector<int>{3, 4, 5});
    CHECK(verify_embedding(g1, e));
  }
}

TEST_CASE("complete graphs have no induced P3") {
  for (int m : {3, 4, 6}) CHECK(count_induced(gen_pattern(PatternId::complete(m)), PatternId::path(3)) == 0);
}

TEST_CASE("counts match the subset-scan oracle") {
  const PatternId pats[] = {PatternId::path(3), PatternId::path(4), PatternId::claw(),
                            PatternId::c3(),    PatternId::z(1),    PatternId::bull()};
  ConnectedEnumerator en(5);
  while (auto g = en.next())
    for (const auto& p : pats) CHECK(count_induced(*g, p) == subset_scan_count(*g, p));

  // spot checks on bigger fixtures
  Graph g1 = gen_g1(3, 9);
  for (const auto& p : {PatternId::claw(), PatternId::z(1), PatternId::path(4), PatternId::net()})
    CHECK(count_induced(g1, p) == subset_scan_count(g1, p));

  Graph pet = testutil::petersen();
  for (const auto& p : {PatternId::claw(), PatternId::path(4), PatternId::wounded()})
    CHECK(count_induced(pet, p) == subset_scan_count(pet, p));
}

TEST_CASE("freeness flags") {
  Graph g1 = gen_g1(3, 9);
  CHECK(is_free(g1, PatternId::bull()));
  CHECK(!is_free(g1, PatternId::z(1)));
  CHECK(is_free(testutil::cycle(5), PatternId::c3()));

  auto z1hit = find_free_violation(g1, PatternId::z(1));
  REQUIRE(z1hit.has_value());
  CHECK(verify_embedding(g1, *z1hit));
  // triangle = stub + two clique vertices, pendant = the stub's leaf
  CHECK(z1hit->map[0] <= 2);   // clique
  CHECK(z1hit->map[1] <= 2);   // clique
  CHECK(z1hit->map[2] >= 3);   // stub carries the pendant
  CHECK(z1hit->map[3] == z1hit->map[2] + 3);
}

TEST_CASE("find_free_violation is the first enumerated embedding") {
  Graph g = gen_g1(3, 9);
  for (const auto& p : {PatternId::z(1), PatternId::path(4), PatternId::claw()}) {
    auto embs = enumerate_induced(g, p);
    auto first = find_free_violation(g, p);
    CHECK(first.has_value() == !embs.empty());
    if (first) CHECK(*first == embs.front());
  }
}

TEST_CASE("specialized freeness scans agree with the enumerator") {
  ConnectedEnumerator en(5);
  while (auto g = en.next()) {
    CHECK(is_c3_free(*g) == is_free(*g, PatternId::c3()));
    CHECK(is_z1_free(*g) == is_free(*g, PatternId::z(1)));
    CHECK(is_p4_free(*g) == is_free(*g, PatternId::path(4)));
  }
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_connected(11, 0.3 + 0.05 * static_cast<double>(seed % 5), seed);
    CHECK(is_c3_free(g) == is_free(g, PatternId::c3()));
    CHECK(is_z1_free(g) == is_free(g, PatternId::z(1)));
    CHECK(is_p4_free(g) == is_free(g, PatternId::path(4)));
  }
}

TEST_CASE("induced-subgraph monotonicity of freeness") {
  // P3 is an induced subgraph of P4: P3-free implies P4-free
  ConnectedEnumerator en(5);
  while (auto g = en.next())
    if (is_free(*g, PatternId::path(3))) CHECK(is_free(*g, PatternId::path(4)));
}

TEST_CASE("embedding verification rejects junk") {
  Graph c5 = testutil::cycle(5);
  Embedding bogus{PatternId::claw(), {0, 1, 2, 3}};
  CHECK(!verify_embedding(c5, bogus));
  Embedding repeated{PatternId::path(3), {0, 1, 0}};
  CHECK(!verify_embedding(c5, repeated));
  Embedding range{PatternId::path(3), {0, 1, 9}};
  CHECK(!verify_embedding(c5, range));
  Embedding good{PatternId::path(3), {0, 1, 2}};
  CHECK(verify_embedding(c5, good));
}

TEST_CASE("patterns larger than 8 vertices are rejected") {
  CHECK_THROWS_AS(count_induced(testutil::cycle(5), PatternId::path(9)), Error);
  CHECK_THROWS_AS(count_induced(testutil::cycle(5), PatternId::complete(9)), Error);
}

TEST_CASE("deterministic enumeration order") {
  Graph g = random_connected(9, 0.5, 5);
  auto a = enumerate_induced(g, PatternId::claw());
  auto b = enumerate_induced(g, PatternId::claw());
  CHECK(a == b);
  // lexicographic by role tuple
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].map < a[i].map);
}
