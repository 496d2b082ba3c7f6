#include <doctest.h>

#include <random>

#include "itc/errors.hpp"
#include "itc/ingest.hpp"
#include "itc/isolation.hpp"
#include "support.hpp"

using namespace itc;
using itc::testing::graph_x;
using itc::testing::ids;
using itc::testing::spec;

TEST_CASE("rational parsing is exact") {
  CHECK(Rational::parse("0.001") == Rational(1, 1000));
  CHECK(Rational::parse("1.5") == Rational(3, 2));
  CHECK(Rational::parse("125") == Rational(125, 1));
  CHECK(Rational::parse("1/6") == Rational(1, 6));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  CHECK(Rational::parse("2/4").to_string() == "0.5");
  CHECK(Rational::parse("0.001").to_string() == "0.001");
  CHECK(Rational(1, 3).to_string() == "1/3");
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse("1.2.3"));
  CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("rational floors and thresholds") {
  const Rational half(1, 2);
  CHECK(half.floor_minus(3) == 2);   // floor(2.5)
  CHECK(half.floor_minus(0) == -1);  // floor(-0.5)
  CHECK(half.floor_plus(-1) == -1);  // floor(-0.5)
  CHECK(Rational(1, 3).floor_plus(-1) == -1);
  CHECK(Rational(2, 1).floor_minus(4) == 2);
  // 1 < 0.2 * 6 but not 1 < (1/6) * 6.
  CHECK(Rational::parse("0.2").scaled_exceeds(1, 6));
  CHECK_FALSE(Rational(1, 6).scaled_exceeds(1, 6));
  CHECK(Rational(3, 2).reached_by(3, 1));
  CHECK_FALSE(Rational(3, 2).reached_by(2, 1));
}

TEST_CASE("kind tokens") {
  for (IsolationKind k : kAllKinds) CHECK(parse_kind(to_string(k)) == k);
  CHECK_FALSE(parse_kind("usually-sometimes"));
}

TEST_CASE("outdegree profile of graph X") {
  const auto p = outdeg_profile(graph_x(), ids({1, 2, 3}), {1, 2});
  CHECK(p.entry(0, 0) == 1);
  CHECK(p.entry(0, 1) == 0);
  CHECK(p.entry(1, 0) == 0);
  CHECK(p.entry(2, 1) == 0);
  CHECK(p.row_sum(0) == 1);
  CHECK(p.row_sum(1) == 0);
  CHECK(p.row_sum(2) == 0);
  CHECK(p.col_sum(0) == 1);
  CHECK(p.total() == 1);

  const auto k4 = generate_random_temporal_graph(4, 3, 1.0, 1);
  CHECK(outdeg_profile(k4, ids({1, 2, 3, 4}), {1, 3}).total() == 0);

  CHECK_THROWS_WITH_AS(outdeg_profile(graph_x(), ids({1, 4}), {1, 2}), "not a clique in window", DomainError);
}

TEST_CASE("isolation predicates on graph X") {
  const auto x = graph_x();
  const auto c = ids({1, 2, 3});
  const TimeWindow w{1, 2};
  CHECK_FALSE(is_isolated(x, spec(IsolationKind::AlltimeMax, "1"), c, w));
  CHECK(is_isolated(x, spec(IsolationKind::AlltimeMax, "1.5"), c, w));
  CHECK(is_isolated(x, spec(IsolationKind::UsuallyAvg, "0.2"), c, w));
  CHECK_FALSE(is_isolated(x, spec(IsolationKind::UsuallyAvg, "1/6"), c, w));
  CHECK_FALSE(is_isolated(x, spec(IsolationKind::MaxUsually, "0.5"), c, w));
  CHECK(is_isolated(x, spec(IsolationKind::MaxUsually, "0.51"), c, w));
  // Layer 2 alone has no outgoing edge.
  for (IsolationKind k : kAllKinds) CHECK(is_isolated(x, spec(k, "0.001"), c, {2, 2}));
  CHECK_THROWS_AS(is_isolated(x, spec(IsolationKind::AlltimeMax, "1"), ids({1, 4}), w), DomainError);
}

namespace {

struct Sample {
  TemporalGraph tg;
  VertexSet clique;
  TimeWindow window;
  Rational c;
};

template <typename Body>
void for_random_samples(std::uint64_t seed, int count, Body body) {
  std::mt19937_64 rng(seed);
  int done = 0;
  while (done < count) {
    const std::size_t n = 3 + rng() % 10;
    const std::size_t tau = 1 + rng() % 5;
    const double p = std::array{0.3, 0.6, 0.9}[rng() % 3];
    auto tg = generate_random_temporal_graph(n, tau, p, rng());
    itc::testing::CliqueSample s;
    if (!itc::testing::sample_temporal_clique(tg, rng, s)) continue;
    const Rational c(1 + static_cast<std::int64_t>(rng() % 40), 1 + static_cast<std::int64_t>(rng() % 8));
    body(Sample{std::move(tg), s.clique, s.window, c});
    ++done;
  }
}

bool holds(const Sample& s, IsolationKind k) { return is_isolated(s.tg, {k, s.c}, s.clique, s.window); }

}  // namespace

TEST_CASE("implication diagram") {
  using K = IsolationKind;
  for_random_samples(101, 3000, [](const Sample& s) {
    const StaticGraph cap = intersection_graph(s.tg, s.window);
    if (holds(s, K::AlltimeMax)) {
      CHECK(holds(s, K::AvgAlltime));
      CHECK(holds(s, K::UsuallyMax));
    }
    if (holds(s, K::AvgAlltime)) CHECK(holds(s, K::AlltimeAvg));
    if (holds(s, K::AlltimeAvg)) CHECK(holds(s, K::UsuallyAvg));
    if (holds(s, K::UsuallyMax)) CHECK(holds(s, K::MaxUsually));
    if (holds(s, K::MaxUsually)) {
      CHECK(holds(s, K::UsuallyAvg));
      CHECK(is_max_isolated(cap, s.clique, s.c));
    }
    if (holds(s, K::UsuallyAvg)) CHECK(is_avg_isolated(cap, s.clique, s.c));
  });
}

TEST_CASE("isolation is monotone in c") {
  for_random_samples(202, 1000, [](const Sample& s) {
    const Rational larger(s.c.num() * 3 + s.c.den(), s.c.den() * 3);
    for (IsolationKind k : kAllKinds) {
      if (is_isolated(s.tg, {k, s.c}, s.clique, s.window)) CHECK(is_isolated(s.tg, {k, larger}, s.clique, s.window));
    }
  });
}

TEST_CASE("alltime kinds survive shrinking the window") {
  for_random_samples(303, 1000, [](const Sample& s) {
    for (IsolationKind k : {IsolationKind::AlltimeAvg, IsolationKind::AlltimeMax, IsolationKind::AvgAlltime}) {
      if (!is_isolated(s.tg, {k, s.c}, s.clique, s.window)) continue;
      for (std::size_t a = s.window.a; a <= s.window.b; ++a) {
        for (std::size_t b = a; b <= s.window.b; ++b) CHECK(is_isolated(s.tg, {k, s.c}, s.clique, {a, b}));
      }
    }
  });
}

TEST_CASE("tiny c makes every kind demand a zero profile") {
  for_random_samples(404, 1000, [](const Sample& s) {
    // c * |C| * len <= 1 for c = 1 / (|C| * len).
    const Rational tiny(1, static_cast<std::int64_t>(s.clique.size() * s.window.length()));
    const bool zero = outdeg_profile(s.tg, s.clique, s.window).total() == 0;
    for (IsolationKind k : kAllKinds) CHECK(is_isolated(s.tg, {k, tiny}, s.clique, s.window) == zero);
  });
}
