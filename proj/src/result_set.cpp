#include "itc/result_set.hpp"

#include <algorithm>

namespace itc {

bool ResultSet::insert(VertexSet vertices, const TimeWindow& w) {
  const bool added = by_window_[w].insert(std::move(vertices)).second;
  if (added) ++size_;
  return added;
}

void ResultSet::merge(const ResultSet& other) {
  for (const auto& [w, sets] : other.by_window_) {
    for (const auto& s : sets) insert(s, w);
  }
}

bool ResultSet::contains(std::span<const Vertex> vertices, const TimeWindow& w) const {
  const auto* sets = at_window(w);
  return sets && sets->contains(VertexSet(vertices.begin(), vertices.end()));
}

bool ResultSet::has_strict_superset(std::span<const Vertex> vertices, const TimeWindow& w) const {
  const auto* sets = at_window(w);
  if (!sets) return false;
  for (const auto& s : *sets) {
    if (s.size() > vertices.size() && std::includes(s.begin(), s.end(), vertices.begin(), vertices.end())) {
      return true;
    }
  }
  return false;
}

std::vector<TemporalClique> ResultSet::entries() const {
  std::vector<TemporalClique> out;
  out.reserve(size_);
  for (const auto& [w, sets] : by_window_) {
    for (const auto& s : sets) out.push_back({s, w});
  }
  return out;
}

const std::set<VertexSet>* ResultSet::at_window(const TimeWindow& w) const {
  auto it = by_window_.find(w);
  return it == by_window_.end() ? nullptr : &it->second;
}

}  // namespace itc
