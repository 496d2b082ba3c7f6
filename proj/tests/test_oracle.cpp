#include <doctest.h>

#include <fstream>
#include <sstream>

#include "itc/errors.hpp"
#include "itc/ingest.hpp"
#include "itc/oracle.hpp"
#include "support.hpp"

using namespace itc;
using itc::testing::from_layers;
using itc::testing::graph_x;
using itc::testing::ids;
using itc::testing::spec;

#ifndef ITC_TEST_DATA
#define ITC_TEST_DATA "tests/data"
#endif

TEST_CASE("oracle on graph X") {
  CHECK(brute_force_enumerate(graph_x(), spec(IsolationKind::AlltimeMax, "0.001")).entries() ==
        std::vector<TemporalClique>{{ids({1, 2, 3}), {2, 2}}});
  CHECK(brute_force_enumerate(graph_x(), spec(IsolationKind::AlltimeMax, "1.5")).entries() ==
        std::vector<TemporalClique>{{ids({1, 2, 3}), {1, 2}}});
}

TEST_CASE("oracle on an empty graph") {
  for (IsolationKind k : kAllKinds) CHECK(brute_force_enumerate(from_layers(4, {{}, {}}), spec(k, "1")).empty());
}

TEST_CASE("usually-max golden file") {
  std::ifstream golden(ITC_TEST_DATA "/graph_x_usually_max_0.75.golden");
  REQUIRE(golden);
  std::vector<TemporalClique> expected;
  std::string line;
  while (std::getline(golden, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    TemporalClique c;
    row >> c.window.a >> c.window.b;
    for (Vertex v; row >> v;) c.vertices.push_back(v - 1);
    expected.push_back(c);
  }
  CHECK(brute_force_enumerate(graph_x(), spec(IsolationKind::UsuallyMax, "0.75")).entries() == expected);
}

TEST_CASE("oracle caps") {
  const auto wide = generate_random_temporal_graph(17, 2, 0.5, 1);
  CHECK_THROWS_WITH_AS(brute_force_enumerate(wide, spec(IsolationKind::AlltimeMax, "1")),
                       doctest::Contains("instance too large for oracle"), CapacityError);
  const auto tall = generate_random_temporal_graph(4, 9, 0.5, 1);
  CHECK_THROWS_AS(brute_force_enumerate(tall, spec(IsolationKind::AlltimeMax, "1")), CapacityError);
  OracleCaps loose;
  loose.max_layers = 9;
  CHECK_NOTHROW(brute_force_enumerate(tall, spec(IsolationKind::AlltimeMax, "1"), loose));
}

TEST_CASE("brute-force isolated subsets") {
  const auto x = graph_x();
  const auto c = ids({1, 2, 3});
  CHECK(brute_force_isolated_subsets(x, c, {2, 2}, spec(IsolationKind::UsuallyAvg, "1")) ==
        std::vector<VertexSet>{c});
  CHECK(brute_force_isolated_subsets(x, c, {1, 2}, spec(IsolationKind::AlltimeMax, "0.001")).empty());
  VertexSet too_many(21);
  CHECK_THROWS_AS(brute_force_isolated_subsets(x, too_many, {1, 1}, spec(IsolationKind::AlltimeMax, "1")),
                  CapacityError);
}

TEST_CASE("stronger kinds' outputs pass weaker predicates") {
  using K = IsolationKind;
  const std::vector<std::pair<K, K>> implications{
      {K::AlltimeMax, K::AvgAlltime}, {K::AvgAlltime, K::AlltimeAvg}, {K::AlltimeAvg, K::UsuallyAvg},
      {K::AlltimeMax, K::UsuallyMax}, {K::UsuallyMax, K::MaxUsually}, {K::MaxUsually, K::UsuallyAvg}};
  std::mt19937_64 rng(53);
  for (int round = 0; round < 40; ++round) {
    const auto tg = generate_random_temporal_graph(3 + rng() % 6, 1 + rng() % 4, 0.6, rng());
    const auto c = std::array{"0.5", "1", "2", "3.5"}[rng() % 4];
    for (auto [strong, weak] : implications) {
      for (const auto& e : brute_force_enumerate(tg, spec(strong, c)).entries()) {
        CHECK(is_isolated(tg, spec(weak, c), e.vertices, e.window));
      }
    }
  }
}

TEST_CASE("delta cliques of a path of layers") {
  // Edge 12 in layers 1 and 3 only: a 1-clique on [1,3] but no 0-clique beyond single layers.
  const auto tg = from_layers(2, {{{1, 2}}, {}, {{1, 2}}});
  const auto zero = brute_force_delta_cliques(tg, 0);
  CHECK(zero == std::vector<TemporalClique>{{ids({1, 2}), {1, 1}}, {ids({1, 2}), {3, 3}}});
  const auto one = brute_force_delta_cliques(tg, 1);
  CHECK(one == std::vector<TemporalClique>{{ids({1, 2}), {1, 2}}, {ids({1, 2}), {1, 3}}, {ids({1, 2}), {2, 3}}});
}
