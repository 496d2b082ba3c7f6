#pragma once

#include "itc/isolation.hpp"
#include "itc/result_set.hpp"
#include "itc/temporal_graph.hpp"

namespace itc {

// All checks below assume `clique` is itself an isolated temporal clique for
// `spec` (the phase-one output of the enumerator).

/// alltime-avg, alltime-max, avg-alltime: rejects if the same vertex set is
/// isolated on [a-1, b] or [a, b+1], then checks vertex-maximality (via the
/// result set for alltime-avg, via the common neighbourhood otherwise).
bool is_maximal_alltime_family(const TemporalGraph& tg, const TemporalClique& clique, const IsolationSpec& spec,
                               const ResultSet& results);

/// max-usually, usually-avg: scans every window [a', b'] containing [a, b]
/// on which the vertex set stays a clique. Rejects if the vertex set is
/// isolated on any such window other than [a, b], or is not vertex-maximal
/// on any of them.
bool is_maximal_usually_family(const TemporalGraph& tg, const TemporalClique& clique, const IsolationSpec& spec);

/// False iff `results` holds a strict superset on exactly the same window.
bool is_vertex_maximal_resultset(const TemporalClique& clique, const ResultSet& results);

/// False iff some non-empty set D of common neighbours of C (complete in the
/// window intersection) makes (C + D, window) isolated. Each maximal clique D
/// of the common neighbourhood is peeled by removing its highest-scored
/// vertex (max layer degree for alltime kinds, degree sum for usually kinds)
/// until the union is isolated or D is exhausted.
bool is_vertex_maximal_neighborhood(const TemporalGraph& tg, const TemporalClique& clique, const IsolationSpec& spec);

/// Dispatches to the family check. Throws UnsupportedError for usually-max.
bool is_maximal(const TemporalGraph& tg, const TemporalClique& clique, const IsolationSpec& spec,
                const ResultSet& results);

}  // namespace itc
