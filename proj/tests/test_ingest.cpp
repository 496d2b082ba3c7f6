#include <doctest.h>

#include <random>
#include <sstream>

#include "itc/errors.hpp"
#include "itc/enumerate.hpp"
#include "itc/ingest.hpp"
#include "support.hpp"

using namespace itc;
using itc::testing::ids;

namespace {

ContactList parse(const std::string& text) {
  std::istringstream in(text);
  return parse_contact_list(in);
}

}  // namespace

TEST_CASE("parse contact rows") {
  const auto list = parse("20 1 2\n40 2 3");
  REQUIRE(list.records.size() == 2);
  CHECK(list.labels == std::vector<std::string>{"1", "2", "3"});
  CHECK(list.records[1].timestamp == 40);
  CHECK(list.records[1].u == 1);
  CHECK(list.records[1].v == 2);
}

TEST_CASE("extra columns, comments, tabs and CRLF are tolerated") {
  const auto list = parse("# header\n\n20\t1558\t1567\t3BIO3\t3BIO3\r\n40 1567 32\n");
  REQUIRE(list.records.size() == 2);
  CHECK(list.labels == std::vector<std::string>{"32", "1558", "1567"});
  CHECK(list.records[0].u == 1);
  CHECK(list.records[0].v == 2);
}

TEST_CASE("non-numeric labels sort lexicographically") {
  CHECK(parse("1 bob alice\n").labels == std::vector<std::string>{"alice", "bob"});
}

TEST_CASE("parse errors name the line") {
  CHECK_THROWS_WITH_AS(parse("20 1 1"), doctest::Contains("self-loop"), InputError);
  CHECK_THROWS_WITH_AS(parse("20 1 2\n40 2\n"), doctest::Contains("line 2"), InputError);
  CHECK_THROWS_WITH_AS(parse("x 1 2"), doctest::Contains("line 1"), InputError);
  CHECK_THROWS_AS(parse(""), InputError);
  CHECK_THROWS_AS(parse("# only a comment\n"), InputError);
}

TEST_CASE("binning into layers") {
  const auto d = bin_to_layers(parse("20 1 2\n40 2 3"), {20, true});
  CHECK(d.graph.lifetime() == 2);
  CHECK(d.graph.layer(1).edges() == std::vector<Edge>{{0, 1}});
  CHECK(d.graph.layer(2).edges() == std::vector<Edge>{{1, 2}});
  CHECK(d.lifetime_seconds == 20);

  const auto absolute = bin_to_layers(parse("20 1 2\n40 2 3"), {20, false});
  CHECK(absolute.graph.lifetime() == 3);
  CHECK(absolute.graph.layer(1).edge_count() == 0);

  const auto one = bin_to_layers(parse("0 1 2\n5 2 3\n19 3 1"), {20, true});
  CHECK(one.graph.lifetime() == 1);
  CHECK(one.graph.layer(1).edge_count() == 3);

  const auto dup = bin_to_layers(parse("0 1 2\n5 2 1\n"), {20, true});
  CHECK(dup.graph.time_edge_count() == 1);
}

TEST_CASE("delta scaling floors to whole layers") {
  CHECK(scale_delta(0, 5000, 1000, 1) == 0);
  CHECK(scale_delta(125, 5000, 1000, 1) == 125);
  CHECK(scale_delta(125, 5000, 1000, 20) == 6);  // 6.25 layers
  CHECK(scale_delta(1, 100, 1000, 20) == 0);
  CHECK_THROWS_AS(scale_delta(1, 100, 0, 20), DomainError);
}

TEST_CASE("random temporal graphs") {
  const auto none = generate_random_temporal_graph(6, 3, 0.0, 9);
  CHECK(none.time_edge_count() == 0);
  const auto full = generate_random_temporal_graph(6, 3, 1.0, 9);
  CHECK(full.time_edge_count() == 3 * 15);
  CHECK(generate_random_temporal_graph(10, 4, 0.3, 77) == generate_random_temporal_graph(10, 4, 0.3, 77));
  CHECK_FALSE(generate_random_temporal_graph(10, 4, 0.3, 77) == generate_random_temporal_graph(10, 4, 0.3, 78));
  CHECK_THROWS_AS(generate_random_temporal_graph(1, 4, 0.3, 77), DomainError);
  CHECK_THROWS_AS(generate_random_temporal_graph(3, 4, 1.5, 77), DomainError);
}

TEST_CASE("planted cliques") {
  const auto base = generate_random_temporal_graph(8, 4, 0.5, 3);
  const auto c = ids({2, 4, 6});
  SUBCASE("budget zero isolates under every kind") {
    const auto tg = plant_isolated_clique(base, c, {2, 3}, 0);
    for (IsolationKind k : kAllKinds) CHECK(is_isolated(tg, {k, Rational(1, 1000)}, c, {2, 3}));
  }
  SUBCASE("budget one gives alltime-avg isolation above 1/3") {
    const auto tg = plant_isolated_clique(generate_random_temporal_graph(8, 4, 1.0, 3), c, {1, 4}, 1);
    CHECK(is_isolated(tg, {IsolationKind::AlltimeAvg, Rational(34, 100)}, c, {1, 4}));
    CHECK_FALSE(is_isolated(tg, {IsolationKind::AlltimeAvg, Rational(1, 3)}, c, {1, 4}));
  }
  SUBCASE("planted over the whole lifetime is found") {
    const auto tg = plant_isolated_clique(base, c, {1, 4}, 0);
    const auto found = enumerate_maximal_isolated(tg, {IsolationKind::AlltimeMax, Rational(1, 2)});
    CHECK(found.contains(c, {1, 4}));
  }
}

TEST_CASE("serialising and re-ingesting reproduces the layers") {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 30; ++round) {
    auto tg = generate_random_temporal_graph(4 + rng() % 10, 1 + rng() % 6, 0.5, rng());
    // Every vertex and the last layer must carry an edge to survive the trip.
    const std::size_t n = tg.vertex_count();
    std::vector<std::vector<Edge>> layers;
    for (const auto& g : tg.layers()) layers.push_back(g.edges());
    for (Vertex v = 0; v + 1 < n; ++v) layers.back().push_back({v, v + 1});
    for (auto& l : layers) {
      std::sort(l.begin(), l.end());
      l.erase(std::unique(l.begin(), l.end()), l.end());
    }
    tg = TemporalGraph(n, layers);

    std::stringstream io;
    write_contact_list(io, tg, 20);
    const auto back = bin_to_layers(parse_contact_list(io), {20, false});
    CHECK(back.graph == tg);
  }
}

TEST_CASE("relabelling permutes the graph") {
  const std::string text = "0 a b\n0 b c\n20 c d\n20 a d\n";
  const auto original = bin_to_layers(parse(text), {20, true});
  std::string renamed = text;
  for (char& ch : renamed) {
    if (ch >= 'a' && ch <= 'd') ch = static_cast<char>('d' - (ch - 'a'));
  }
  const auto permuted = bin_to_layers(parse(renamed), {20, true});
  // Label x maps to 'd' - (x - 'a'); ids follow label order, so id i maps to 3 - i.
  for (std::size_t t = 1; t <= 2; ++t) {
    for (const Edge& e : original.graph.layer(t).edges()) CHECK(permuted.graph.layer(t).has_edge(3 - e.u, 3 - e.v));
    CHECK(permuted.graph.layer(t).edge_count() == original.graph.layer(t).edge_count());
  }
}
