#include "itc/temporal_graph.hpp"

#include <algorithm>
#include <string>

#include "itc/errors.hpp"

namespace itc {

StaticGraph::StaticGraph(std::size_t vertex_count) : adj_(vertex_count) { build_bit_rows(); }

StaticGraph StaticGraph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  StaticGraph g(vertex_count);
  for (const Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw InputError("edge endpoint out of range: " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    g.adj_[e.u].push_back(e.v);
    g.adj_[e.v].push_back(e.u);
  }
  for (auto& row : g.adj_) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) throw InputError("duplicate edge in layer");
  }
  g.edge_count_ = edges.size();
  g.build_bit_rows();
  return g;
}

void StaticGraph::build_bit_rows() {
  const std::size_t n = adj_.size();
  if (n > kBitRowLimit) {
    words_per_row_ = 0;
    bits_.clear();
    return;
  }
  words_per_row_ = (n + 63) / 64;
  bits_.assign(n * words_per_row_, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : adj_[u]) bits_[u * words_per_row_ + v / 64] |= std::uint64_t{1} << (v % 64);
  }
}

void StaticGraph::clear_bit(Vertex u, Vertex v) {
  if (words_per_row_ == 0) return;
  bits_[u * words_per_row_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
}

bool StaticGraph::has_edge(Vertex u, Vertex v) const {
  if (words_per_row_ != 0) return (bits_[u * words_per_row_ + v / 64] >> (v % 64)) & 1U;
  const auto& ru = adj_[u];
  const auto& rv = adj_[v];
  return ru.size() <= rv.size() ? std::binary_search(ru.begin(), ru.end(), v)
                                : std::binary_search(rv.begin(), rv.end(), u);
}

std::vector<Edge> StaticGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::size_t StaticGraph::intersect_with(const StaticGraph& other) {
  std::size_t removed = 0;
  for (Vertex u = 0; u < adj_.size(); ++u) {
    auto& row = adj_[u];
    auto keep = std::remove_if(row.begin(), row.end(), [&](Vertex v) {
      if (other.has_edge(u, v)) return false;
      clear_bit(u, v);
      if (u < v) ++removed;
      return true;
    });
    row.erase(keep, row.end());
  }
  edge_count_ -= removed;
  return removed;
}

TemporalGraph::TemporalGraph(std::size_t vertex_count, const std::vector<std::vector<Edge>>& layers)
    : vertex_count_(vertex_count) {
  if (layers.empty()) throw InputError("temporal graph needs at least one layer");
  layers_.reserve(layers.size());
  for (const auto& edges : layers) layers_.push_back(StaticGraph::from_edges(vertex_count, edges));
}

TemporalGraph::TemporalGraph(std::size_t vertex_count, std::vector<StaticGraph> layers)
    : vertex_count_(vertex_count), layers_(std::move(layers)) {
  if (layers_.empty()) throw InputError("temporal graph needs at least one layer");
  for (const auto& g : layers_) {
    if (g.vertex_count() != vertex_count_) throw InputError("layer vertex count mismatch");
  }
}

std::size_t TemporalGraph::time_edge_count() const {
  std::size_t total = 0;
  for (const auto& g : layers_) total += g.edge_count();
  return total;
}

TemporalGraph delta_union_transform(const TemporalGraph& tg, std::size_t delta) {
  if (delta >= tg.lifetime()) throw DomainError("window exceeds lifetime");
  if (delta == 0) return tg;
  const std::size_t n = tg.vertex_count();
  std::vector<std::vector<Edge>> layers(tg.lifetime() - delta);
  for (std::size_t i = 1; i <= layers.size(); ++i) {
    auto& out = layers[i - 1];
    for (std::size_t t = i; t <= i + delta; ++t) {
      auto e = tg.layer(t).edges();
      out.insert(out.end(), e.begin(), e.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return TemporalGraph(n, layers);
}

StaticGraph intersection_graph(const TemporalGraph& tg, const TimeWindow& w) {
  if (!tg.valid(w)) throw DomainError("invalid time window");
  StaticGraph g = tg.layer(w.a);
  for (std::size_t t = w.a + 1; t <= w.b && g.edge_count() > 0; ++t) g.intersect_with(tg.layer(t));
  return g;
}

IntersectionView::IntersectionView(const TemporalGraph& tg, std::size_t start)
    : base_(&tg), window_{start, start} {
  if (!tg.valid(window_)) throw DomainError("invalid time window");
  graph_ = tg.layer(start);
}

void IntersectionView::extend() {
  if (at_end()) throw DomainError("at lifetime end");
  ++window_.b;
  if (graph_.edge_count() > 0) graph_.intersect_with(base_->layer(window_.b));
}

std::size_t outdeg(const StaticGraph& g, Vertex v, std::span<const Vertex> set) {
  if (!std::binary_search(set.begin(), set.end(), v)) throw DomainError("vertex not in set");
  std::size_t count = 0;
  for (Vertex u : g.neighbors(v)) {
    if (!std::binary_search(set.begin(), set.end(), u)) ++count;
  }
  return count;
}

std::size_t outdeg(const StaticGraph& g, std::span<const Vertex> set) {
  std::size_t total = 0;
  for (Vertex v : set) total += outdeg(g, v, set);
  return total;
}

std::size_t min_degree(const StaticGraph& g, std::span<const Vertex> set) {
  if (set.empty()) throw DomainError("minimum degree of empty set");
  std::size_t best = g.degree(set.front());
  for (Vertex v : set) best = std::min(best, g.degree(v));
  return best;
}

bool is_clique(const StaticGraph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (!g.has_edge(set[i], set[j])) return false;
    }
  }
  return true;
}

bool is_temporal_clique(const TemporalGraph& tg, std::span<const Vertex> set, const TimeWindow& w) {
  if (set.size() < 2 || !tg.valid(w)) return false;
  for (std::size_t t = w.a; t <= w.b; ++t) {
    if (!is_clique(tg.layer(t), set)) return false;
  }
  return true;
}

}  // namespace itc
