#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "itc/temporal_graph.hpp"

namespace itc {

struct TemporalClique {
  VertexSet vertices;
  TimeWindow window;

  /// Canonical order: window start, window end, then vertices lexicographically.
  friend bool operator<(const TemporalClique& l, const TemporalClique& r) {
    if (l.window != r.window) return l.window < r.window;
    return l.vertices < r.vertices;
  }
  friend bool operator==(const TemporalClique&, const TemporalClique&) = default;
};

/// Deduplicated cliques keyed by (vertices, window) and indexed by window.
class ResultSet {
 public:
  /// Returns false if the key was already present.
  bool insert(VertexSet vertices, const TimeWindow& w);
  bool insert(const TemporalClique& clique) { return insert(clique.vertices, clique.window); }
  void merge(const ResultSet& other);

  bool contains(std::span<const Vertex> vertices, const TimeWindow& w) const;
  /// Any entry on exactly `w` whose vertex set strictly contains `vertices`.
  bool has_strict_superset(std::span<const Vertex> vertices, const TimeWindow& w) const;

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  /// All entries in canonical order.
  std::vector<TemporalClique> entries() const;
  const std::set<VertexSet>* at_window(const TimeWindow& w) const;

  friend bool operator==(const ResultSet& l, const ResultSet& r) { return l.by_window_ == r.by_window_; }

 private:
  std::map<TimeWindow, std::set<VertexSet>> by_window_;
  std::size_t size_ = 0;
};

}  // namespace itc
