#include "support.hpp"

#include <algorithm>
#include <sstream>

namespace itc::testing {

TemporalGraph from_layers(std::size_t n, const std::vector<std::vector<std::pair<Vertex, Vertex>>>& layers) {
  std::vector<std::vector<Edge>> out;
  for (const auto& layer : layers) {
    std::vector<Edge> edges;
    for (auto [u, v] : layer) edges.push_back({u - 1, v - 1});
    out.push_back(std::move(edges));
  }
  return TemporalGraph(n, out);
}

TemporalGraph graph_x() { return from_layers(4, {{{1, 2}, {1, 3}, {2, 3}, {1, 4}}, {{1, 2}, {1, 3}, {2, 3}}}); }

VertexSet ids(std::initializer_list<Vertex> labels) {
  VertexSet out;
  for (Vertex v : labels) out.push_back(v - 1);
  std::sort(out.begin(), out.end());
  return out;
}

IsolationSpec spec(IsolationKind kind, const std::string& c) { return {kind, Rational::parse(c)}; }

std::string describe(const ResultSet& rs) {
  std::ostringstream s;
  for (const auto& e : rs.entries()) {
    s << "({";
    for (std::size_t i = 0; i < e.vertices.size(); ++i) s << (i ? "," : "") << e.vertices[i] + 1;
    s << "},[" << e.window.a << "," << e.window.b << "]) ";
  }
  return s.str();
}

std::string describe(const std::vector<VertexSet>& sets) {
  std::ostringstream s;
  for (const auto& set : sets) {
    s << "{";
    for (std::size_t i = 0; i < set.size(); ++i) s << (i ? "," : "") << set[i] + 1;
    s << "} ";
  }
  return s.str();
}

bool sample_temporal_clique(const TemporalGraph& tg, std::mt19937_64& rng, CliqueSample& out) {
  const std::size_t tau = tg.lifetime();
  const std::size_t a = 1 + rng() % tau;
  const std::size_t b = a + rng() % (tau - a + 1);
  const StaticGraph g = intersection_graph(tg, {a, b});
  if (g.edge_count() == 0) return false;
  // Greedy random clique grown from a random edge.
  const auto edges = g.edges();
  const Edge e = edges[rng() % edges.size()];
  VertexSet clique{e.u, e.v};
  std::vector<Vertex> pool;
  for (Vertex v = 0; v < g.vertex_count(); ++v) pool.push_back(v);
  std::shuffle(pool.begin(), pool.end(), rng);
  for (Vertex v : pool) {
    if (std::find(clique.begin(), clique.end(), v) != clique.end()) continue;
    if (std::all_of(clique.begin(), clique.end(), [&](Vertex u) { return g.has_edge(u, v); }) && rng() % 4 != 0) {
      clique.push_back(v);
    }
  }
  std::sort(clique.begin(), clique.end());
  out = {clique, {a, b}};
  return true;
}

}  // namespace itc::testing
