#include "itc/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "itc/errors.hpp"

namespace itc {

namespace {

bool parse_integer(const std::string& s, std::int64_t& value) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

struct RawRecord {
  std::int64_t timestamp;
  std::string u;
  std::string v;
};

}  // namespace

ContactList parse_contact_list(std::istream& in) {
  std::vector<RawRecord> raw;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string t, u, v;
    std::int64_t timestamp = 0;
    if (!(fields >> t >> u >> v)) {
      throw InputError("line " + std::to_string(line_number) + ": expected 'timestamp u v'");
    }
    if (!parse_integer(t, timestamp)) {
      throw InputError("line " + std::to_string(line_number) + ": bad timestamp '" + t + "'");
    }
    if (u == v) throw InputError("line " + std::to_string(line_number) + ": self-loop at '" + u + "'");
    raw.push_back({timestamp, std::move(u), std::move(v)});
  }
  if (raw.empty()) throw InputError("contact list is empty");

  std::vector<std::string> labels;
  for (const auto& r : raw) {
    labels.push_back(r.u);
    labels.push_back(r.v);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  const bool numeric = std::all_of(labels.begin(), labels.end(), [](const std::string& s) {
    std::int64_t x = 0;
    return parse_integer(s, x);
  });
  if (numeric) {
    std::sort(labels.begin(), labels.end(), [](const std::string& l, const std::string& r) {
      std::int64_t a = 0, b = 0;
      parse_integer(l, a);
      parse_integer(r, b);
      return a < b;
    });
  }
  std::map<std::string, Vertex> ids;
  for (std::size_t i = 0; i < labels.size(); ++i) ids.emplace(labels[i], static_cast<Vertex>(i));

  ContactList out;
  out.labels = std::move(labels);
  out.records.reserve(raw.size());
  for (const auto& r : raw) out.records.push_back({r.timestamp, ids.at(r.u), ids.at(r.v)});
  return out;
}

Dataset bin_to_layers(const ContactList& contacts, const IngestConfig& config) {
  if (config.resolution <= 0) throw DomainError("resolution must be positive");
  if (contacts.records.empty()) throw InputError("contact list is empty");
  auto [lo, hi] = std::minmax_element(contacts.records.begin(), contacts.records.end(),
                                      [](const auto& l, const auto& r) { return l.timestamp < r.timestamp; });
  const std::int64_t t_min = lo->timestamp;
  const std::int64_t t_max = hi->timestamp;
  const std::int64_t origin = config.normalize_origin ? t_min : 0;
  if (t_min - origin < 0) throw InputError("negative timestamp without origin normalisation");

  std::vector<std::vector<Edge>> layers;
  for (const auto& r : contacts.records) {
    const auto layer = static_cast<std::size_t>((r.timestamp - origin) / config.resolution);
    if (layer >= layers.size()) layers.resize(layer + 1);
    layers[layer].push_back({std::min(r.u, r.v), std::max(r.u, r.v)});
  }
  for (auto& edges : layers) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }
  return Dataset{TemporalGraph(contacts.labels.size(), layers), contacts.labels, t_max - t_min, config.resolution};
}

std::size_t scale_delta(std::int64_t delta_base, std::int64_t lifetime_seconds, std::size_t time_edges,
                        std::int64_t resolution) {
  if (time_edges == 0) throw DomainError("delta scaling needs at least one time edge");
  if (resolution <= 0) throw DomainError("resolution must be positive");
  const __int128 num = static_cast<__int128>(delta_base) * lifetime_seconds;
  const __int128 den = static_cast<__int128>(5) * static_cast<__int128>(time_edges) * resolution;
  return num <= 0 ? 0 : static_cast<std::size_t>(num / den);
}

void write_contact_list(std::ostream& out, const TemporalGraph& tg, std::int64_t resolution,
                        std::span<const std::string> labels) {
  auto name = [&](Vertex v) { return labels.empty() ? std::to_string(v + 1) : labels[v]; };
  for (std::size_t t = 1; t <= tg.lifetime(); ++t) {
    const auto start = static_cast<std::int64_t>(t - 1) * resolution;
    for (const Edge& e : tg.layer(t).edges()) out << start << ' ' << name(e.u) << ' ' << name(e.v) << '\n';
  }
}

TemporalGraph generate_random_temporal_graph(std::size_t vertex_count, std::size_t lifetime, double edge_probability,
                                             std::uint64_t seed) {
  if (vertex_count < 2 || lifetime < 1 || !(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw DomainError("random graph needs n >= 2, tau >= 1 and 0 <= p <= 1");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Edge>> layers(lifetime);
  for (auto& edges : layers) {
    for (Vertex u = 0; u < vertex_count; ++u) {
      for (Vertex v = u + 1; v < vertex_count; ++v) {
        // 53 random bits mapped to [0, 1); avoids library-specific distributions.
        const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (x < edge_probability) edges.push_back({u, v});
      }
    }
  }
  return TemporalGraph(vertex_count, layers);
}

TemporalGraph plant_isolated_clique(const TemporalGraph& tg, std::span<const Vertex> clique, const TimeWindow& w,
                                    std::size_t max_outgoing) {
  if (!tg.valid(w)) throw DomainError("invalid time window");
  VertexSet members(clique.begin(), clique.end());
  std::sort(members.begin(), members.end());
  auto inside = [&](Vertex v) { return std::binary_search(members.begin(), members.end(), v); };

  std::vector<std::vector<Edge>> layers;
  for (std::size_t t = 1; t <= tg.lifetime(); ++t) {
    std::vector<Edge> edges = tg.layer(t).edges();
    if (w.a <= t && t <= w.b) {
      std::vector<Edge> kept;
      std::size_t outgoing = 0;
      for (const Edge& e : edges) {
        const bool cu = inside(e.u), cv = inside(e.v);
        if (cu && cv) continue;
        if (cu != cv && outgoing++ >= max_outgoing) continue;
        kept.push_back(e);
      }
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) kept.push_back({members[i], members[j]});
      }
      std::sort(kept.begin(), kept.end());
      edges = std::move(kept);
    }
    layers.push_back(std::move(edges));
  }
  return TemporalGraph(tg.vertex_count(), layers);
}

}  // namespace itc
