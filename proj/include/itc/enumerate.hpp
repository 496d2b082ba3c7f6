#pragma once

#include <chrono>
#include <optional>

#include "itc/isolation.hpp"
#include "itc/result_set.hpp"
#include "itc/temporal_graph.hpp"

namespace itc {

struct EnumerateOptions {
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 1;
  /// Enumeration throws TimeoutError once this point has passed.
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Use the untrimmed closed neighbourhood as candidate set (differential testing).
  bool untrimmed = false;
};

/// Phase one: every isolated subset found below a (window, pivot, maximal
/// clique) triple. Contains all maximal isolated temporal cliques plus
/// dominated ones.
ResultSet collect_isolated_cliques(const TemporalGraph& tg, const IsolationSpec& spec,
                                   const EnumerateOptions& options = {});

/// All maximal isolated temporal cliques (|C| >= 2) for the five kinds other
/// than usually-max, for which it throws UnsupportedError.
ResultSet enumerate_maximal_isolated(const TemporalGraph& tg, const IsolationSpec& spec,
                                     const EnumerateOptions& options = {});

}  // namespace itc
