#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "itc/isolation.hpp"
#include "itc/result_set.hpp"
#include "itc/temporal_graph.hpp"

namespace itc::testing {

/// V = {1,2,3,4} (ids 0..3), E_1 = {12, 13, 23, 14}, E_2 = {12, 13, 23}.
/// The clique {1,2,3} has a single outgoing time edge, from 1 in layer 1.
TemporalGraph graph_x();

/// 1-based labels to 0-based ids.
VertexSet ids(std::initializer_list<Vertex> labels);

TemporalGraph from_layers(std::size_t n, const std::vector<std::vector<std::pair<Vertex, Vertex>>>& layers);

IsolationSpec spec(IsolationKind kind, const std::string& c);

std::string describe(const ResultSet& rs);
std::string describe(const std::vector<VertexSet>& sets);

/// Random clique (|C| >= 2) of the intersection over a random window, or
/// nothing if the sampled window has no edges.
struct CliqueSample {
  VertexSet clique;
  TimeWindow window;
};
bool sample_temporal_clique(const TemporalGraph& tg, std::mt19937_64& rng, CliqueSample& out);

}  // namespace itc::testing
