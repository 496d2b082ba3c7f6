#include "itc/isolated_subsets.hpp"

#include <algorithm>
#include <set>

#include "itc/errors.hpp"

namespace itc {

namespace {

// Vertices of `set` ordered by descending score, ties by ascending id.
template <typename Score>
VertexSet top_scored(std::span<const Vertex> set, std::size_t count, Score score) {
  VertexSet ranked(set.begin(), set.end());
  std::stable_sort(ranked.begin(), ranked.end(), [&](Vertex l, Vertex r) { return score(l) > score(r); });
  ranked.resize(std::min(count, ranked.size()));
  return ranked;
}

// Largest r with r < |C| - delta + c - 1, i.e. ceil(|C| - delta + c - 2).
std::size_t removal_budget(std::size_t size, std::size_t delta, const Rational& c) {
  const std::int64_t d = -c.floor_minus(static_cast<std::int64_t>(delta) + 2 - static_cast<std::int64_t>(size));
  return static_cast<std::size_t>(std::clamp<std::int64_t>(d, 0, static_cast<std::int64_t>(size)));
}

// sum >= factor * m * (m - 1 + c): the subset of size m fails the average test.
bool average_violated(std::int64_t sum, std::int64_t m, std::int64_t factor, const Rational& c) {
  return !c.scaled_exceeds(sum - factor * m * (m - 1), factor * m);
}

VertexSet without(std::span<const Vertex> set, std::span<const Vertex> removed) {
  VertexSet out;
  for (Vertex v : set) {
    if (std::find(removed.begin(), removed.end(), v) == removed.end()) out.push_back(v);
  }
  return out;
}

}  // namespace

WindowDegrees::WindowDegrees(const TemporalGraph& tg, const TimeWindow& w)
    : tg_(&tg), window_{w.a, w.a}, max_(tg.vertex_count(), 0), sum_(tg.vertex_count(), 0) {
  if (!tg.valid(w)) throw DomainError("invalid time window");
  add_layer(w.a);
  while (window_.b < w.b) extend();
}

void WindowDegrees::extend() {
  if (window_.b == tg_->lifetime()) throw DomainError("at lifetime end");
  ++window_.b;
  add_layer(window_.b);
}

void WindowDegrees::add_layer(std::size_t t) {
  const StaticGraph& g = tg_->layer(t);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto deg = static_cast<std::int64_t>(g.degree(v));
    if (deg == 0) continue;
    sum_[v] += deg;
    max_[v] = std::max(max_[v], deg);
  }
}

std::vector<VertexSet> keep_inclusion_maximal(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> out;
  for (const auto& s : sets) {
    const bool dominated = std::any_of(sets.begin(), sets.end(), [&](const VertexSet& o) {
      return o.size() > s.size() && std::includes(o.begin(), o.end(), s.begin(), s.end());
    });
    if (!dominated) out.push_back(s);
  }
  return out;
}

std::vector<VertexSet> isolated_subsets_greedy(const WindowDegrees& degrees, std::span<const Vertex> clique,
                                               std::size_t delta, const IsolationSpec& spec) {
  const bool by_max = spec.kind == IsolationKind::AlltimeMax;
  if (!by_max && spec.kind != IsolationKind::MaxUsually) throw DomainError("greedy subsets need alltime-max or max-usually");
  auto score = [&](Vertex v) { return by_max ? degrees.max(v) : degrees.sum(v); };
  const std::int64_t factor = by_max ? 1 : static_cast<std::int64_t>(degrees.window().length());
  const auto floor_size =
      static_cast<std::size_t>(std::max<std::int64_t>(spec.c.floor_minus(static_cast<std::int64_t>(delta) + 2), 2));

  VertexSet current(clique.begin(), clique.end());
  while (current.size() >= floor_size) {
    const auto m = static_cast<std::int64_t>(current.size());
    // Offending: score >= factor * (m - 1 + c). Drop the worst one first.
    auto worst = current.end();
    for (auto it = current.begin(); it != current.end(); ++it) {
      if (spec.c.scaled_exceeds(score(*it) - factor * (m - 1), factor)) continue;
      if (worst == current.end() || score(*it) > score(*worst)) worst = it;
    }
    if (worst == current.end()) return {current};
    current.erase(worst);
  }
  return {};
}

std::vector<VertexSet> isolated_subsets_search(const WindowDegrees& degrees, std::span<const Vertex> clique,
                                               std::size_t delta, const IsolationSpec& spec) {
  const bool by_sum = spec.kind == IsolationKind::UsuallyAvg;
  if (!by_sum && spec.kind != IsolationKind::AvgAlltime) throw DomainError("search subsets need usually-avg or avg-alltime");
  auto score = [&](Vertex v) { return by_sum ? degrees.sum(v) : degrees.max(v); };
  const std::int64_t factor = by_sum ? static_cast<std::int64_t>(degrees.window().length()) : 1;

  const std::size_t budget = removal_budget(clique.size(), delta, spec.c);
  const VertexSet removable = top_scored(clique, budget, score);

  std::int64_t full_sum = 0;
  for (Vertex v : clique) full_sum += score(v);

  std::vector<VertexSet> found;
  // Removal sets as strictly increasing index lists into `removable`.
  std::vector<std::vector<std::size_t>> frontier{{}};
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& removed : frontier) {
      const auto m = static_cast<std::int64_t>(clique.size() - removed.size());
      if (m < 2) continue;
      std::int64_t sum = full_sum;
      for (std::size_t i : removed) sum -= score(removable[i]);
      if (!average_violated(sum, m, factor, spec.c)) {
        VertexSet gone;
        for (std::size_t i : removed) gone.push_back(removable[i]);
        found.push_back(without(clique, gone));
        continue;
      }
      const std::size_t from = removed.empty() ? 0 : removed.back() + 1;
      for (std::size_t i = from; i < removable.size(); ++i) {
        auto extended = removed;
        extended.push_back(i);
        next.push_back(std::move(extended));
      }
    }
    frontier = std::move(next);
  }
  return keep_inclusion_maximal(std::move(found));
}

std::vector<VertexSet> isolated_subsets_alltime_avg(const WindowDegrees& degrees, std::span<const Vertex> clique,
                                                    std::size_t delta, const Rational& c) {
  const TemporalGraph& tg = degrees.graph();
  const TimeWindow& w = degrees.window();
  const std::size_t budget = removal_budget(clique.size(), delta, c);

  std::vector<VertexSet> found;
  std::set<VertexSet> frontier{{}};
  while (!frontier.empty()) {
    std::set<VertexSet> next;
    for (const auto& removed : frontier) {
      const VertexSet subset = without(clique, removed);
      const auto m = static_cast<std::int64_t>(subset.size());
      if (m < 2) continue;

      std::size_t violating = 0;
      for (std::size_t t = w.a; t <= w.b && violating == 0; ++t) {
        std::int64_t sum = 0;
        for (Vertex v : subset) sum += static_cast<std::int64_t>(tg.layer(t).degree(v));
        if (average_violated(sum, m, 1, c)) violating = t;
      }
      if (violating == 0) {
        found.push_back(subset);
        continue;
      }
      // Size guard m > delta - c + 2.
      const __int128 guard = static_cast<__int128>(m - static_cast<std::int64_t>(delta) - 2) * c.den() + c.num();
      if (guard <= 0) continue;
      const StaticGraph& layer = tg.layer(violating);
      for (Vertex e : top_scored(subset, budget, [&](Vertex v) { return layer.degree(v); })) {
        VertexSet extended = removed;
        extended.insert(std::lower_bound(extended.begin(), extended.end(), e), e);
        next.insert(std::move(extended));
      }
    }
    frontier = std::move(next);
  }
  return keep_inclusion_maximal(std::move(found));
}

std::vector<VertexSet> isolated_subsets(const WindowDegrees& degrees, std::span<const Vertex> clique,
                                        std::size_t delta, const IsolationSpec& spec) {
  switch (spec.kind) {
    case IsolationKind::AlltimeMax:
    case IsolationKind::MaxUsually:
      return isolated_subsets_greedy(degrees, clique, delta, spec);
    case IsolationKind::UsuallyAvg:
    case IsolationKind::AvgAlltime:
      return isolated_subsets_search(degrees, clique, delta, spec);
    case IsolationKind::AlltimeAvg:
      return isolated_subsets_alltime_avg(degrees, clique, delta, spec.c);
    case IsolationKind::UsuallyMax:
      break;
  }
  throw UnsupportedError("usually-max is unsupported by fast enumerator; use oracle");
}

}  // namespace itc
