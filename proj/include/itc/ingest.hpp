#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "itc/temporal_graph.hpp"

namespace itc {

struct ContactRecord {
  std::int64_t timestamp;
  Vertex u;
  Vertex v;
};

/// Parsed contact list. Vertex ids are dense; labels[id] is the original label.
/// Ids follow label order (numeric when every label is an integer).
struct ContactList {
  std::vector<ContactRecord> records;
  std::vector<std::string> labels;
};

/// Reads "timestamp u v [extra...]" rows separated by spaces or tabs. Blank
/// lines and lines starting with '#' are skipped. Throws InputError with the
/// line number on malformed rows or self-loops, and on empty input.
ContactList parse_contact_list(std::istream& in);

struct IngestConfig {
  /// Seconds per layer.
  std::int64_t resolution = 20;
  /// Shift timestamps so the earliest contact falls into layer 1.
  bool normalize_origin = true;
};

struct Dataset {
  TemporalGraph graph;
  std::vector<std::string> labels;
  /// t_max - t_min over all contacts, in seconds.
  std::int64_t lifetime_seconds = 0;
  std::int64_t resolution = 1;
};

/// Layer of a contact at t is floor((t - t_min) / r) + 1 (or floor(t / r) + 1
/// without normalisation). Repeated contacts inside a layer collapse.
Dataset bin_to_layers(const ContactList& contacts, const IngestConfig& config);

/// floor(delta_base * L / (5 |TE|) / r), the protocol's delta in whole layers.
std::size_t scale_delta(std::int64_t delta_base, std::int64_t lifetime_seconds, std::size_t time_edges,
                        std::int64_t resolution);

/// One row "start-second u v" per time edge, start-second = (t - 1) * r.
/// Without labels, vertex ids are written 1-based.
void write_contact_list(std::ostream& out, const TemporalGraph& tg, std::int64_t resolution,
                        std::span<const std::string> labels = {});

/// Independent G(n, p) layers. Deterministic for a given seed.
TemporalGraph generate_random_temporal_graph(std::size_t vertex_count, std::size_t lifetime, double edge_probability,
                                             std::uint64_t seed);

/// Makes `clique` complete in every layer of `w` and drops edges leaving it
/// until each such layer has at most `max_outgoing` of them (kept in
/// lexicographic edge order).
TemporalGraph plant_isolated_clique(const TemporalGraph& tg, std::span<const Vertex> clique, const TimeWindow& w,
                                    std::size_t max_outgoing);

}  // namespace itc
