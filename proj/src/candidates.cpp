#include "itc/candidates.hpp"

#include <algorithm>
#include <limits>

namespace itc {

namespace {

std::size_t min_clique_size(const StaticGraph& g, Vertex pivot, const Rational& c) {
  const std::int64_t k = c.floor_minus(static_cast<std::int64_t>(g.degree(pivot)) + 2);
  return static_cast<std::size_t>(std::max<std::int64_t>(k, 2));
}

// Dense adjacency among a small set of vertices, indexed locally.
class LocalAdjacency {
 public:
  LocalAdjacency(const StaticGraph& g, std::span<const Vertex> members)
      : size_(members.size()), cells_(size_ * size_, 0) {
    for (std::size_t i = 0; i < size_; ++i) {
      for (std::size_t j = i + 1; j < size_; ++j) {
        if (g.has_edge(members[i], members[j])) cells_[i * size_ + j] = cells_[j * size_ + i] = 1;
      }
    }
  }
  bool operator()(std::size_t i, std::size_t j) const { return cells_[i * size_ + j] != 0; }

 private:
  std::size_t size_;
  std::vector<char> cells_;
};

class CliqueSearch {
 public:
  CliqueSearch(const LocalAdjacency& adj, std::size_t min_size) : adj_(adj), min_size_(min_size) {}

  void run(std::vector<std::size_t>& r, std::vector<std::size_t> p, std::vector<std::size_t> x) {
    if (p.empty()) {
      if (x.empty() && r.size() >= min_size_) found.push_back(r);
      return;
    }
    if (r.size() + p.size() < min_size_) return;

    std::size_t pivot = p.front();
    std::size_t best = 0;
    for (const auto* pool : {&p, &x}) {
      for (std::size_t u : *pool) {
        std::size_t hits = 0;
        for (std::size_t v : p) hits += adj_(u, v) ? 1 : 0;
        if (hits > best) {
          best = hits;
          pivot = u;
        }
      }
    }

    std::vector<std::size_t> branch;
    for (std::size_t v : p) {
      if (!adj_(pivot, v)) branch.push_back(v);
    }
    for (std::size_t v : branch) {
      std::vector<std::size_t> np, nx;
      for (std::size_t u : p) {
        if (adj_(v, u)) np.push_back(u);
      }
      for (std::size_t u : x) {
        if (adj_(v, u)) nx.push_back(u);
      }
      r.push_back(v);
      run(r, std::move(np), std::move(nx));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  }

  std::vector<std::vector<std::size_t>> found;

 private:
  const LocalAdjacency& adj_;
  std::size_t min_size_;
};

}  // namespace

std::vector<Vertex> degree_order(const StaticGraph& g) {
  std::vector<Vertex> order;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 0) order.push_back(v);
  }
  std::stable_sort(order.begin(), order.end(), [&](Vertex l, Vertex r) { return g.degree(l) < g.degree(r); });
  return order;
}

std::vector<std::size_t> order_positions(const StaticGraph& g, std::span<const Vertex> order) {
  std::vector<std::size_t> position(g.vertex_count(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  return position;
}

CandidateSet candidate_set(const StaticGraph& g, std::span<const std::size_t> position, Vertex pivot,
                           const Rational& c) {
  CandidateSet out{pivot, {}, min_clique_size(g, pivot, c)};
  VertexSet members{pivot};
  for (Vertex u : g.neighbors(pivot)) {
    if (position[u] > position[pivot]) members.push_back(u);
  }
  std::sort(members.begin(), members.end());

  const std::size_t need = out.min_size - 1;
  while (members.size() >= out.min_size) {
    VertexSet kept;
    kept.reserve(members.size());
    bool pivot_ok = true;
    for (Vertex v : members) {
      std::size_t inside = 0;
      for (Vertex u : members) inside += (u != v && g.has_edge(u, v)) ? 1 : 0;
      if (inside >= need) {
        kept.push_back(v);
      } else if (v == pivot) {
        pivot_ok = false;
      }
    }
    if (!pivot_ok) return out;
    if (kept.size() == members.size()) {
      out.members = std::move(members);
      return out;
    }
    members = std::move(kept);
  }
  return out;
}

CandidateSet untrimmed_candidate_set(const StaticGraph& g, Vertex pivot, const Rational& c) {
  CandidateSet out{pivot, {pivot}, min_clique_size(g, pivot, c)};
  for (Vertex u : g.neighbors(pivot)) out.members.push_back(u);
  std::sort(out.members.begin(), out.members.end());
  return out;
}

std::vector<VertexSet> maximal_cliques_min_size(const StaticGraph& g, std::span<const Vertex> members,
                                                std::size_t min_size) {
  LocalAdjacency adj(g, members);
  CliqueSearch search(adj, std::max<std::size_t>(min_size, 1));
  std::vector<std::size_t> r, p(members.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  search.run(r, std::move(p), {});

  std::vector<VertexSet> out;
  out.reserve(search.found.size());
  for (const auto& local : search.found) {
    VertexSet clique;
    for (std::size_t i : local) clique.push_back(members[i]);
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace itc
