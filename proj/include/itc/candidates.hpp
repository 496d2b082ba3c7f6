#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "itc/rational.hpp"
#include "itc/temporal_graph.hpp"

namespace itc {

/// Pivot v, its trimmed closed neighbourhood and the minimum admissible
/// clique size k = max(2, floor(deg(v) - c + 2)).
struct CandidateSet {
  Vertex pivot = 0;
  VertexSet members;
  std::size_t min_size = 2;

  bool empty() const { return members.empty(); }
};

/// Non-isolated vertices sorted by ascending degree, ties by id.
std::vector<Vertex> degree_order(const StaticGraph& g);
/// Inverse of degree_order; vertices of degree zero map to SIZE_MAX.
std::vector<std::size_t> order_positions(const StaticGraph& g, std::span<const Vertex> order);

/// Candidate set for `pivot`: its later neighbours in the degree order,
/// peeled so every member keeps at least k-1 neighbours inside the set.
/// Any avg-c-isolated clique whose first vertex in the order is `pivot` is
/// contained in the result. Empty if no clique of size k can survive.
CandidateSet candidate_set(const StaticGraph& g, std::span<const std::size_t> position, Vertex pivot,
                           const Rational& c);

/// {pivot} together with its whole neighbourhood, without any pruning.
CandidateSet untrimmed_candidate_set(const StaticGraph& g, Vertex pivot, const Rational& c);

/// All maximal cliques of the subgraph induced by `members` with at least
/// `min_size` vertices (Bron-Kerbosch with Tomita pivoting).
std::vector<VertexSet> maximal_cliques_min_size(const StaticGraph& g, std::span<const Vertex> members,
                                                std::size_t min_size);

}  // namespace itc
