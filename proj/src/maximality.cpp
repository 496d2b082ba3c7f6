#include "itc/maximality.hpp"

#include <algorithm>

#include "itc/candidates.hpp"
#include "itc/errors.hpp"

namespace itc {

namespace {

bool isolated_clique(const TemporalGraph& tg, const VertexSet& set, const TimeWindow& w, const IsolationSpec& spec) {
  return tg.valid(w) && is_temporal_clique(tg, set, w) && is_isolated(tg, spec, set, w);
}

bool complete_in_window(const TemporalGraph& tg, Vertex u, Vertex v, const TimeWindow& w) {
  for (std::size_t t = w.a; t <= w.b; ++t) {
    if (!tg.layer(t).has_edge(u, v)) return false;
  }
  return true;
}

}  // namespace

bool is_vertex_maximal_resultset(const TemporalClique& clique, const ResultSet& results) {
  return !results.has_strict_superset(clique.vertices, clique.window);
}

bool is_vertex_maximal_neighborhood(const TemporalGraph& tg, const TemporalClique& clique, const IsolationSpec& spec) {
  const bool usually = spec.kind == IsolationKind::MaxUsually || spec.kind == IsolationKind::UsuallyAvg;
  if (!usually && spec.kind != IsolationKind::AlltimeMax && spec.kind != IsolationKind::AvgAlltime) {
    throw DomainError("neighbourhood vertex-maximality needs alltime-max, avg-alltime, max-usually or usually-avg");
  }
  const VertexSet& members = clique.vertices;
  const TimeWindow& w = clique.window;

  // Pivot: member of least degree in the first layer; every common neighbour is adjacent to it.
  const StaticGraph& first = tg.layer(w.a);
  const Vertex pivot = *std::min_element(members.begin(), members.end(),
                                         [&](Vertex l, Vertex r) { return first.degree(l) < first.degree(r); });
  VertexSet common;
  for (Vertex u : first.neighbors(pivot)) {
    if (std::binary_search(members.begin(), members.end(), u)) continue;
    const bool adjacent_to_all = std::all_of(members.begin(), members.end(),
                                             [&](Vertex x) { return complete_in_window(tg, u, x, w); });
    if (adjacent_to_all) common.push_back(u);
  }
  if (common.empty()) return true;

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < common.size(); ++i) {
    for (std::size_t j = i + 1; j < common.size(); ++j) {
      if (complete_in_window(tg, common[i], common[j], w)) edges.push_back({common[i], common[j]});
    }
  }
  const StaticGraph among = StaticGraph::from_edges(tg.vertex_count(), edges);

  auto score = [&](Vertex v) {
    std::int64_t acc = 0;
    for (std::size_t t = w.a; t <= w.b; ++t) {
      const auto deg = static_cast<std::int64_t>(tg.layer(t).degree(v));
      acc = usually ? acc + deg : std::max(acc, deg);
    }
    return acc;
  };

  for (VertexSet extra : maximal_cliques_min_size(among, common, 1)) {
    while (!extra.empty()) {
      VertexSet joined = members;
      joined.insert(joined.end(), extra.begin(), extra.end());
      std::sort(joined.begin(), joined.end());
      if (is_isolated(tg, spec, joined, w)) return false;
      extra.erase(std::max_element(extra.begin(), extra.end(),
                                   [&](Vertex l, Vertex r) { return score(l) < score(r); }));
    }
  }
  return true;
}

bool is_maximal_alltime_family(const TemporalGraph& tg, const TemporalClique& clique, const IsolationSpec& spec,
                               const ResultSet& results) {
  const TimeWindow& w = clique.window;
  if (w.a > 1 && isolated_clique(tg, clique.vertices, {w.a - 1, w.b}, spec)) return false;
  if (w.b < tg.lifetime() && isolated_clique(tg, clique.vertices, {w.a, w.b + 1}, spec)) return false;
  if (spec.kind == IsolationKind::AlltimeAvg) return is_vertex_maximal_resultset(clique, results);
  return is_vertex_maximal_neighborhood(tg, clique, spec);
}

bool is_maximal_usually_family(const TemporalGraph& tg, const TemporalClique& clique, const IsolationSpec& spec) {
  const VertexSet& members = clique.vertices;
  const TimeWindow& w = clique.window;
  for (std::size_t a = w.a; a >= 1; --a) {
    if (!is_clique(tg.layer(a), members)) break;
    for (std::size_t b = w.b; b <= tg.lifetime(); ++b) {
      if (!is_clique(tg.layer(b), members)) break;
      const TimeWindow wider{a, b};
      if (wider != w && is_isolated(tg, spec, members, wider)) return false;
      if (!is_vertex_maximal_neighborhood(tg, {members, wider}, spec)) return false;
    }
  }
  return true;
}

bool is_maximal(const TemporalGraph& tg, const TemporalClique& clique, const IsolationSpec& spec,
                const ResultSet& results) {
  if (spec.kind == IsolationKind::UsuallyMax) {
    throw UnsupportedError("usually-max is unsupported by fast enumerator; use oracle");
  }
  if (is_alltime_family(spec.kind)) return is_maximal_alltime_family(tg, clique, spec, results);
  return is_maximal_usually_family(tg, clique, spec);
}

}  // namespace itc
