#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "itc/rational.hpp"
#include "itc/temporal_graph.hpp"

namespace itc {

/// The six temporal isolation types. "alltime" aggregates over time with max,
/// "usually" with the average; the name order is the aggregation order.
enum class IsolationKind {
  AlltimeAvg,
  AlltimeMax,
  AvgAlltime,
  MaxUsually,
  UsuallyAvg,
  UsuallyMax,
};

inline constexpr std::array<IsolationKind, 6> kAllKinds = {
    IsolationKind::AlltimeAvg, IsolationKind::AlltimeMax, IsolationKind::AvgAlltime,
    IsolationKind::MaxUsually, IsolationKind::UsuallyAvg, IsolationKind::UsuallyMax};

/// Kinds handled by the fast enumerator (everything except usually-max).
inline constexpr std::array<IsolationKind, 5> kEnumerableKinds = {
    IsolationKind::AlltimeAvg, IsolationKind::AlltimeMax, IsolationKind::AvgAlltime,
    IsolationKind::MaxUsually, IsolationKind::UsuallyAvg};

std::string_view to_string(IsolationKind kind);
std::optional<IsolationKind> parse_kind(std::string_view token);

/// Kinds that take the maximum over time (isolation survives shrinking the window).
constexpr bool is_alltime_family(IsolationKind k) {
  return k == IsolationKind::AlltimeAvg || k == IsolationKind::AlltimeMax || k == IsolationKind::AvgAlltime;
}

struct IsolationSpec {
  IsolationKind kind;
  Rational c;
};

/// Outdegrees of the members of a temporal clique, one row per vertex of C
/// and one column per layer of the window, with row/column folds cached.
class OutdegProfile {
 public:
  OutdegProfile(std::size_t rows, std::size_t cols);

  std::size_t vertex_count() const { return rows_; }
  std::size_t layer_count() const { return cols_; }

  std::int64_t entry(std::size_t row, std::size_t col) const { return cells_[row * cols_ + col]; }
  std::int64_t row_sum(std::size_t row) const { return row_sum_[row]; }
  std::int64_t row_max(std::size_t row) const { return row_max_[row]; }
  std::int64_t col_sum(std::size_t col) const { return col_sum_[col]; }
  std::int64_t col_max(std::size_t col) const { return col_max_[col]; }
  std::int64_t total() const { return total_; }

  void set(std::size_t row, std::size_t col, std::int64_t value) { cells_[row * cols_ + col] = value; }
  void finalize();

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::int64_t> cells_;
  std::vector<std::int64_t> row_sum_, row_max_, col_sum_, col_max_;
  std::int64_t total_ = 0;
};

/// Throws DomainError("not a clique in window") unless (C, w) is a temporal clique.
OutdegProfile outdeg_profile(const TemporalGraph& tg, std::span<const Vertex> set, const TimeWindow& w);

/// Evaluates the isolation inequality for `spec.kind` on a profile.
bool is_isolated(const OutdegProfile& profile, const IsolationSpec& spec);
bool is_isolated(const TemporalGraph& tg, const IsolationSpec& spec, std::span<const Vertex> set,
                 const TimeWindow& w);

/// Static isolation: outdeg(C) < c|C| and max_v outdeg(v, C) < c.
bool is_avg_isolated(const StaticGraph& g, std::span<const Vertex> set, const Rational& c);
bool is_max_isolated(const StaticGraph& g, std::span<const Vertex> set, const Rational& c);

}  // namespace itc
