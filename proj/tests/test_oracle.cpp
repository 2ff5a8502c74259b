#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orpath/generators.hpp"
#include "orpath/oracle.hpp"
#include "test_util.hpp"

using namespace orpath;
using testutil::make_graph;

TEST_CASE("traceable_dp basics") {
  CHECK(traceable_dp(gen_pattern(PatternId::path(6))).traceable);
  CHECK(!traceable_dp(gen_pattern(PatternId::complete_bipartite(3, 5))).traceable);
  CHECK(!traceable_dp(gen_g1(3, 9)).traceable);
  CHECK(traceable_dp(testutil::petersen()).traceable);

  auto res = traceable_dp(testutil::cycle(7));
  REQUIRE(res.traceable);
  REQUIRE(res.path.has_value());
  CHECK(is_hamilton_path(testutil::cycle(7), *res.path));

  CHECK_THROWS_AS(traceable_dp(gen_g2(5, 39)), Error);  // 39 > 24
}

TEST_CASE("certificates") {
  Graph g2 = gen_g2(5, 39);
  auto c = nontraceability_certificate(g2);
  REQUIRE(c.has_value());
  CHECK(c->kind == Certificate::Kind::pendant_excess);
  CHECK(c->vertices.size() == 3);
  CHECK(verify_certificate(g2, *c));

  auto c1 = nontraceability_certificate(gen_g1(3, 9));
  REQUIRE(c1.has_value());
  CHECK(c1->kind == Certificate::Kind::pendant_excess);
  CHECK(verify_certificate(gen_g1(3, 9), *c1));

  CHECK(!nontraceability_certificate(testutil::cycle(5)).has_value());

  // separator-based: K_{2,4} needs both left vertices removed
  Graph k24 = gen_pattern(PatternId::complete_bipartite(2, 4));
  auto ck = nontraceability_certificate(k24);
  REQUIRE(ck.has_value());
  CHECK(ck->kind == Certificate::Kind::cut_set_excess);
  CHECK(ck->vertices == std::vector<int>{0, 1});
  CHECK(ck->component_count == 4);
  CHECK(verify_certificate(k24, *ck));

  Graph disc = make_graph(4, {{0, 1}, {2, 3}});
  auto cd = nontraceability_certificate(disc);
  REQUIRE(cd.has_value());
  CHECK(cd->kind == Certificate::Kind::disconnected);
  CHECK(verify_certificate(disc, *cd));

  // tampered certificates fail verification
  Certificate bogus{Certificate::Kind::pendant_excess, {0, 1, 2}, 0};
  CHECK(!verify_certificate(testutil::cycle(5), bogus));
}

TEST_CASE("traceable_search") {
  auto fast = traceable_search(gen_g2(5, 39), 1000);
  CHECK(fast.status == SearchResult::Status::no);
  REQUIRE(fast.cert.has_value());
  CHECK(fast.cert->kind == Certificate::Kind::pendant_excess);

  auto k25 = traceable_search(gen_pattern(PatternId::complete(25)), 2000);
  REQUIRE(k25.status == SearchResult::Status::yes);
  CHECK(is_hamilton_path(gen_pattern(PatternId::complete(25)), *k25.path));

  auto c5 = traceable_search(testutil::cycle(5), 1000);
  REQUIRE(c5.status == SearchResult::Status::yes);
  CHECK(c5.path->length() == 5);

  // hard instance with no cheap certificate and a tiny budget
  Graph k1315 = gen_pattern(PatternId::complete_bipartite(13, 15));
  auto hard = traceable_search(k1315, 5);
  CHECK(hard.status == SearchResult::Status::timeout);
}

TEST_CASE("DP agrees with pruned backtracking") {
  std::uint64_t seed = 5150;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>((seed * 2654435761u >> 16) % 11);
    double p = 0.2 + 0.15 * static_cast<double>(trial % 5);
    Graph g = random_connected(n, p, seed++);
    TraceResult dp = traceable_dp(g);
    SearchResult bt = traceable_backtrack(g, 10000);
    REQUIRE(bt.status != SearchResult::Status::timeout);
    CHECK(dp.traceable == (bt.status == SearchResult::Status::yes));
    if (dp.traceable) {
      CHECK(is_hamilton_path(g, *dp.path));
      CHECK(is_hamilton_path(g, *bt.path));
    }
  }
}

TEST_CASE("DP matches exhaustive enumeration of non-traceable graphs") {
  // count non-traceable connected graphs on 5 vertices both ways
  ConnectedEnumerator en(5);
  int dp_no = 0, bt_no = 0;
  while (auto g = en.next()) {
    if (!traceable_dp(*g).traceable) ++dp_no;
    if (traceable_backtrack(*g, 1000).status == SearchResult::Status::no) ++bt_no;
  }
  CHECK(dp_no == bt_no);
  CHECK(dp_no > 0);
}
