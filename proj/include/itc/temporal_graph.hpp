#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace itc {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Closed interval [a, b] of 1-based layer indices.
struct TimeWindow {
  std::size_t a = 1;
  std::size_t b = 1;

  std::size_t length() const { return b - a + 1; }
  bool contains(const TimeWindow& o) const { return a <= o.a && o.b <= b; }

  friend auto operator<=>(const TimeWindow&, const TimeWindow&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Neighbour lists are kept sorted. For small n a dense bit matrix is kept as
/// well so that adjacency tests are a single load.
class StaticGraph {
 public:
  static constexpr std::size_t kBitRowLimit = 128;

  explicit StaticGraph(std::size_t vertex_count = 0);

  /// Throws InputError on out-of-range endpoints, self-loops or duplicates.
  static StaticGraph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Drops every edge not present in `other`. Returns the number removed.
  std::size_t intersect_with(const StaticGraph& other);

  friend bool operator==(const StaticGraph& l, const StaticGraph& r) { return l.adj_ == r.adj_; }

 private:
  void build_bit_rows();
  void clear_bit(Vertex u, Vertex v);

  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Vertex set plus a sequence of layers G_1..G_tau.
class TemporalGraph {
 public:
  /// Throws InputError if there are no layers or a layer is malformed.
  TemporalGraph(std::size_t vertex_count, const std::vector<std::vector<Edge>>& layers);
  TemporalGraph(std::size_t vertex_count, std::vector<StaticGraph> layers);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t lifetime() const { return layers_.size(); }
  /// 1-based.
  const StaticGraph& layer(std::size_t t) const { return layers_[t - 1]; }
  const std::vector<StaticGraph>& layers() const { return layers_; }
  /// |TE|, the number of time edges.
  std::size_t time_edge_count() const;

  bool valid(const TimeWindow& w) const { return 1 <= w.a && w.a <= w.b && w.b <= lifetime(); }

  friend bool operator==(const TemporalGraph&, const TemporalGraph&) = default;

 private:
  std::size_t vertex_count_;
  std::vector<StaticGraph> layers_;
};

/// Layer i of the result is the union of layers i..i+delta. Throws DomainError
/// when delta >= lifetime.
TemporalGraph delta_union_transform(const TemporalGraph& tg, std::size_t delta);

/// Static graph whose edges are present in every layer of `w`.
StaticGraph intersection_graph(const TemporalGraph& tg, const TimeWindow& w);

/// Cursor over the intersection graphs of [a, a], [a, a+1], ...
class IntersectionView {
 public:
  IntersectionView(const TemporalGraph& tg, std::size_t start);

  const TemporalGraph& base() const { return *base_; }
  const TimeWindow& window() const { return window_; }
  const StaticGraph& graph() const { return graph_; }
  bool at_end() const { return window_.b == base_->lifetime(); }

  /// Moves to [a, b+1]. Throws DomainError at the end of the lifetime.
  void extend();

 private:
  const TemporalGraph* base_;
  TimeWindow window_;
  StaticGraph graph_;
};

/// Number of neighbours of v outside A. Requires v in A.
std::size_t outdeg(const StaticGraph& g, Vertex v, std::span<const Vertex> set);
std::size_t outdeg(const StaticGraph& g, std::span<const Vertex> set);
/// Minimum degree over a non-empty set.
std::size_t min_degree(const StaticGraph& g, std::span<const Vertex> set);

bool is_clique(const StaticGraph& g, std::span<const Vertex> set);
/// |C| >= 2 and C complete in every layer of w.
bool is_temporal_clique(const TemporalGraph& tg, std::span<const Vertex> set, const TimeWindow& w);

}  // namespace itc
