#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "itc/isolation.hpp"
#include "itc/temporal_graph.hpp"

namespace itc {

/// Per-vertex maximum and sum of layer degrees over a window, extendable one
/// layer at a time. Extending costs O(|E_b|).
class WindowDegrees {
 public:
  WindowDegrees(const TemporalGraph& tg, const TimeWindow& w);

  const TemporalGraph& graph() const { return *tg_; }
  const TimeWindow& window() const { return window_; }
  std::int64_t max(Vertex v) const { return max_[v]; }
  std::int64_t sum(Vertex v) const { return sum_[v]; }

  void extend();

 private:
  void add_layer(std::size_t t);

  const TemporalGraph* tg_;
  TimeWindow window_;
  std::vector<std::int64_t> max_;
  std::vector<std::int64_t> sum_;
};

// Each isolated_subsets_* function takes a clique C of the window's
// intersection graph and delta = its minimum degree there, and returns the
// inclusion-maximal subsets C' (|C'| >= 2) for which (C', window) is
// isolated, in lexicographic order.

/// alltime-max and max-usually: repeatedly drop a vertex whose score
/// (max resp. sum of layer degrees) rules it out. At most one result.
std::vector<VertexSet> isolated_subsets_greedy(const WindowDegrees& degrees, std::span<const Vertex> clique,
                                               std::size_t delta, const IsolationSpec& spec);

/// usually-avg and avg-alltime: only the d = ceil(|C| - delta + c - 2)
/// highest-scored vertices may be removed; removal sets are explored as
/// increasing index sequences so each is visited once.
std::vector<VertexSet> isolated_subsets_search(const WindowDegrees& degrees, std::span<const Vertex> clique,
                                               std::size_t delta, const IsolationSpec& spec);

/// alltime-avg: branches on the d highest-degree vertices of the earliest
/// layer in which the current subset is not avg-c-isolated.
std::vector<VertexSet> isolated_subsets_alltime_avg(const WindowDegrees& degrees, std::span<const Vertex> clique,
                                                    std::size_t delta, const Rational& c);

/// Dispatches on spec.kind. Throws UnsupportedError for usually-max.
std::vector<VertexSet> isolated_subsets(const WindowDegrees& degrees, std::span<const Vertex> clique,
                                        std::size_t delta, const IsolationSpec& spec);

/// Keeps only the sets not strictly contained in another set of the input.
std::vector<VertexSet> keep_inclusion_maximal(std::vector<VertexSet> sets);

}  // namespace itc
