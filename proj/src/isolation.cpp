#include "itc/isolation.hpp"

#include <algorithm>

#include "itc/errors.hpp"

namespace itc {

namespace {

constexpr std::array<std::string_view, 6> kNames = {"alltime-avg", "alltime-max", "avg-alltime",
                                                    "max-usually", "usually-avg", "usually-max"};

}  // namespace

std::string_view to_string(IsolationKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

std::optional<IsolationKind> parse_kind(std::string_view token) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == token) return static_cast<IsolationKind>(i);
  }
  return std::nullopt;
}

OutdegProfile::OutdegProfile(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

void OutdegProfile::finalize() {
  row_sum_.assign(rows_, 0);
  row_max_.assign(rows_, 0);
  col_sum_.assign(cols_, 0);
  col_max_.assign(cols_, 0);
  total_ = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const std::int64_t x = entry(r, c);
      row_sum_[r] += x;
      row_max_[r] = std::max(row_max_[r], x);
      col_sum_[c] += x;
      col_max_[c] = std::max(col_max_[c], x);
      total_ += x;
    }
  }
}

OutdegProfile outdeg_profile(const TemporalGraph& tg, std::span<const Vertex> set, const TimeWindow& w) {
  if (!is_temporal_clique(tg, set, w)) throw DomainError("not a clique in window");
  OutdegProfile profile(set.size(), w.length());
  const auto inside = static_cast<std::int64_t>(set.size()) - 1;
  for (std::size_t col = 0; col < w.length(); ++col) {
    const StaticGraph& g = tg.layer(w.a + col);
    for (std::size_t row = 0; row < set.size(); ++row) {
      profile.set(row, col, static_cast<std::int64_t>(g.degree(set[row])) - inside);
    }
  }
  profile.finalize();
  return profile;
}

bool is_isolated(const OutdegProfile& p, const IsolationSpec& spec) {
  const Rational& c = spec.c;
  const auto size = static_cast<std::int64_t>(p.vertex_count());
  const auto len = static_cast<std::int64_t>(p.layer_count());
  std::int64_t lhs = 0;
  switch (spec.kind) {
    case IsolationKind::AlltimeAvg:
      for (std::size_t i = 0; i < p.layer_count(); ++i) lhs = std::max(lhs, p.col_sum(i));
      return c.scaled_exceeds(lhs, size);
    case IsolationKind::AlltimeMax:
      for (std::size_t v = 0; v < p.vertex_count(); ++v) lhs = std::max(lhs, p.row_max(v));
      return c.scaled_exceeds(lhs, 1);
    case IsolationKind::AvgAlltime:
      for (std::size_t v = 0; v < p.vertex_count(); ++v) lhs += p.row_max(v);
      return c.scaled_exceeds(lhs, size);
    case IsolationKind::MaxUsually:
      for (std::size_t v = 0; v < p.vertex_count(); ++v) lhs = std::max(lhs, p.row_sum(v));
      return c.scaled_exceeds(lhs, len);
    case IsolationKind::UsuallyAvg:
      return c.scaled_exceeds(p.total(), size * len);
    case IsolationKind::UsuallyMax:
      for (std::size_t i = 0; i < p.layer_count(); ++i) lhs += p.col_max(i);
      return c.scaled_exceeds(lhs, len);
  }
  return false;
}

bool is_isolated(const TemporalGraph& tg, const IsolationSpec& spec, std::span<const Vertex> set,
                 const TimeWindow& w) {
  return is_isolated(outdeg_profile(tg, set, w), spec);
}

bool is_avg_isolated(const StaticGraph& g, std::span<const Vertex> set, const Rational& c) {
  return c.scaled_exceeds(static_cast<std::int64_t>(outdeg(g, set)), static_cast<std::int64_t>(set.size()));
}

bool is_max_isolated(const StaticGraph& g, std::span<const Vertex> set, const Rational& c) {
  std::int64_t worst = 0;
  for (Vertex v : set) worst = std::max(worst, static_cast<std::int64_t>(outdeg(g, v, set)));
  return c.scaled_exceeds(worst, 1);
}

}  // namespace itc
