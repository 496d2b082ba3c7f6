#include "itc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "itc/errors.hpp"

namespace itc {

namespace {

using Mask = std::uint32_t;

void check_caps(const TemporalGraph& tg, const OracleCaps& caps) {
  if (tg.vertex_count() > caps.max_vertices || tg.lifetime() > caps.max_layers || tg.vertex_count() > 31) {
    throw CapacityError("instance too large for oracle (" + std::to_string(tg.vertex_count()) + " vertices, " +
                        std::to_string(tg.lifetime()) + " layers)");
  }
}

VertexSet to_set(Mask m) {
  VertexSet out;
  for (Vertex v = 0; m; ++v, m >>= 1) {
    if (m & 1U) out.push_back(v);
  }
  return out;
}

// Neighbourhood masks of the graph whose edges lie in every listed layer.
std::vector<Mask> common_adjacency(const TemporalGraph& tg, std::size_t from, std::size_t to) {
  const std::size_t n = tg.vertex_count();
  std::vector<Mask> adj(n, n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1);
  for (std::size_t t = from; t <= to; ++t) {
    for (Vertex v = 0; v < n; ++v) {
      Mask row = 0;
      for (Vertex u : tg.layer(t).neighbors(v)) row |= Mask{1} << u;
      adj[v] &= row;
    }
  }
  return adj;
}

std::vector<Mask> union_adjacency(const TemporalGraph& tg, std::size_t from, std::size_t to) {
  std::vector<Mask> adj(tg.vertex_count(), 0);
  for (std::size_t t = from; t <= to; ++t) {
    for (Vertex v = 0; v < tg.vertex_count(); ++v) {
      for (Vertex u : tg.layer(t).neighbors(v)) adj[v] |= Mask{1} << u;
    }
  }
  return adj;
}

bool complete(const std::vector<Mask>& adj, Mask set) {
  for (Mask rest = set; rest; rest &= rest - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(rest));
    const Mask others = set & ~(Mask{1} << v);
    if ((adj[v] & others) != others) return false;
  }
  return true;
}

bool strict_superset_in(const std::vector<Mask>& sets, Mask set) {
  return std::any_of(sets.begin(), sets.end(), [&](Mask o) { return o != set && (o & set) == set; });
}

bool member_of(const std::vector<Mask>& sorted, Mask set) {
  return std::binary_search(sorted.begin(), sorted.end(), set);
}

}  // namespace

ResultSet brute_force_enumerate(const TemporalGraph& tg, const IsolationSpec& spec, const OracleCaps& caps) {
  check_caps(tg, caps);
  const std::size_t n = tg.vertex_count();
  const std::size_t tau = tg.lifetime();
  const Mask universe = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);

  // isolated[a][b]: sorted masks of isolated temporal cliques on [a, b].
  std::vector<std::vector<std::vector<Mask>>> isolated(tau + 1, std::vector<std::vector<Mask>>(tau + 1));
  std::vector<std::vector<std::vector<Mask>>> cliques(tau + 1, std::vector<std::vector<Mask>>(tau + 1));
  for (std::size_t a = 1; a <= tau; ++a) {
    for (std::size_t b = a; b <= tau; ++b) {
      const auto adj = common_adjacency(tg, a, b);
      for (Mask m = 1; m <= universe && m != 0; ++m) {
        if (std::popcount(m) < 2 || !complete(adj, m)) continue;
        cliques[a][b].push_back(m);
        if (is_isolated(tg, spec, to_set(m), {a, b})) isolated[a][b].push_back(m);
      }
    }
  }

  ResultSet out;
  for (std::size_t a = 1; a <= tau; ++a) {
    for (std::size_t b = a; b <= tau; ++b) {
      for (Mask m : isolated[a][b]) {
        bool maximal = true;
        for (std::size_t a2 = 1; a2 <= a && maximal; ++a2) {
          for (std::size_t b2 = b; b2 <= tau && maximal; ++b2) {
            const bool same = a2 == a && b2 == b;
            if (is_alltime_family(spec.kind)) {
              if (same) {
                maximal = !strict_superset_in(isolated[a][b], m);
              } else {
                maximal = !member_of(isolated[a2][b2], m);
              }
            } else {
              if (!member_of(cliques[a2][b2], m)) continue;
              if (!same && member_of(isolated[a2][b2], m)) maximal = false;
              if (strict_superset_in(isolated[a2][b2], m)) maximal = false;
            }
          }
        }
        if (maximal) out.insert(to_set(m), {a, b});
      }
    }
  }
  return out;
}

std::vector<VertexSet> brute_force_isolated_subsets(const TemporalGraph& tg, std::span<const Vertex> clique,
                                                    const TimeWindow& w, const IsolationSpec& spec,
                                                    const OracleCaps& caps) {
  if (clique.size() > caps.max_subset) throw CapacityError("instance too large for oracle");
  const std::size_t k = clique.size();
  std::vector<std::uint32_t> hits;
  for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << k); ++pick) {
    if (std::popcount(pick) < 2) continue;
    VertexSet subset;
    for (std::size_t i = 0; i < k; ++i) {
      if (pick >> i & 1U) subset.push_back(clique[i]);
    }
    if (is_isolated(tg, spec, subset, w)) hits.push_back(pick);
  }
  std::vector<VertexSet> out;
  for (std::uint32_t pick : hits) {
    if (strict_superset_in(hits, pick)) continue;
    VertexSet subset;
    for (std::size_t i = 0; i < k; ++i) {
      if (pick >> i & 1U) subset.push_back(clique[i]);
    }
    out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TemporalClique> brute_force_delta_cliques(const TemporalGraph& tg, std::size_t delta,
                                                      const OracleCaps& caps) {
  check_caps(tg, caps);
  const std::size_t n = tg.vertex_count();
  const std::size_t tau = tg.lifetime();
  const Mask universe = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);

  std::vector<std::vector<Mask>> unions(tau + 1);
  for (std::size_t t = 1; t + delta <= tau; ++t) unions[t] = union_adjacency(tg, t, t + delta);

  std::vector<TemporalClique> out;
  for (Mask m = 1; m <= universe && m != 0; ++m) {
    if (std::popcount(m) < 2) continue;
    for (std::size_t a = 1; a + delta <= tau; ++a) {
      for (std::size_t b = a + delta; b <= tau; ++b) {
        bool ok = true;
        for (std::size_t t = a; t + delta <= b && ok; ++t) ok = complete(unions[t], m);
        if (ok) out.push_back({to_set(m), {a, b}});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace itc
