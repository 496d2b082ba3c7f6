#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "itc/isolation.hpp"
#include "itc/result_set.hpp"
#include "itc/temporal_graph.hpp"

namespace itc {

struct OracleCaps {
  std::size_t max_vertices = 16;
  std::size_t max_layers = 8;
  std::size_t max_subset = 20;
};

/// Exhaustive enumeration of maximal isolated temporal cliques for any of the
/// six kinds: every vertex subset times every window, followed by a direct
/// maximality filter. Throws CapacityError beyond the caps.
///
/// Maximality: for alltime-avg, alltime-max and avg-alltime, (C, [a, b]) is
/// kept unless C is isolated on a strictly larger window or a strict superset
/// of C is isolated on [a, b]. For the usually kinds, every window containing
/// [a, b] on which C stays a clique is inspected; (C, [a, b]) is dropped if C
/// is isolated on one of them (other than [a, b]) or a strict superset of C is
/// isolated on one of them.
ResultSet brute_force_enumerate(const TemporalGraph& tg, const IsolationSpec& spec, const OracleCaps& caps = {});

/// Inclusion-maximal subsets C' of `clique` with |C'| >= 2 and (C', w)
/// isolated, by scanning all subsets.
std::vector<VertexSet> brute_force_isolated_subsets(const TemporalGraph& tg, std::span<const Vertex> clique,
                                                    const TimeWindow& w, const IsolationSpec& spec,
                                                    const OracleCaps& caps = {});

/// Every (C, [a, b]) with |C| >= 2 and b - a >= delta such that C is a clique
/// in the union of layers t..t+delta for every t in [a, b - delta].
std::vector<TemporalClique> brute_force_delta_cliques(const TemporalGraph& tg, std::size_t delta,
                                                      const OracleCaps& caps = {});

}  // namespace itc
