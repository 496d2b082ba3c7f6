#include "itc/enumerate.hpp"

#include <atomic>
#include <cassert>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "itc/candidates.hpp"
#include "itc/errors.hpp"
#include "itc/isolated_subsets.hpp"
#include "itc/maximality.hpp"

namespace itc {

namespace {

class Deadline {
 public:
  explicit Deadline(const std::optional<std::chrono::steady_clock::time_point>& at) : at_(at) {}
  void check() const {
    if (at_ && std::chrono::steady_clock::now() > *at_) throw TimeoutError("time limit exceeded");
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested ? requested : std::max(1U, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

// Runs job(i) for i in [0, jobs) on `threads` workers and rethrows the first failure.
template <typename Job>
void parallel_for(std::size_t jobs, unsigned threads, Job job) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&](unsigned id) {
    try {
      for (std::size_t i = next++; i < jobs; i = next++) job(id, i);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = jobs;
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  }
  if (failure) std::rethrow_exception(failure);
}

// All windows starting at `start`, stopping once the intersection has no edges.
void scan_windows_from(const TemporalGraph& tg, const IsolationSpec& spec, std::size_t start,
                       const EnumerateOptions& options, const Deadline& deadline, ResultSet& out) {
  IntersectionView view(tg, start);
  WindowDegrees degrees(tg, {start, start});
  while (true) {
    deadline.check();
    const StaticGraph& g = view.graph();
    if (g.edge_count() == 0) break;
    const TimeWindow w = view.window();

    const auto order = degree_order(g);
    const auto position = order_positions(g, order);
    for (Vertex pivot : order) {
      const CandidateSet candidates =
          options.untrimmed ? untrimmed_candidate_set(g, pivot, spec.c) : candidate_set(g, position, pivot, spec.c);
      if (candidates.empty()) continue;
      for (const VertexSet& clique : maximal_cliques_min_size(g, candidates.members, candidates.min_size)) {
        const std::size_t delta = min_degree(g, clique);
        for (VertexSet& subset : isolated_subsets(degrees, clique, delta, spec)) {
          assert(is_temporal_clique(tg, subset, w) && is_isolated(tg, spec, subset, w));
          out.insert(std::move(subset), w);
        }
      }
    }

    if (view.at_end()) break;
    view.extend();
    degrees.extend();
  }
}

}  // namespace

ResultSet collect_isolated_cliques(const TemporalGraph& tg, const IsolationSpec& spec,
                                   const EnumerateOptions& options) {
  if (spec.kind == IsolationKind::UsuallyMax) {
    throw UnsupportedError("usually-max is unsupported by fast enumerator; use oracle");
  }
  const Deadline deadline(options.deadline);
  const std::size_t tau = tg.lifetime();
  std::vector<ResultSet> per_start(tau);
  parallel_for(tau, worker_count(options.threads, tau), [&](unsigned, std::size_t i) {
    scan_windows_from(tg, spec, i + 1, options, deadline, per_start[i]);
  });
  ResultSet merged;
  for (const auto& part : per_start) merged.merge(part);
  return merged;
}

ResultSet enumerate_maximal_isolated(const TemporalGraph& tg, const IsolationSpec& spec,
                                     const EnumerateOptions& options) {
  const ResultSet candidates = collect_isolated_cliques(tg, spec, options);
  const std::vector<TemporalClique> entries = candidates.entries();
  const Deadline deadline(options.deadline);

  std::vector<char> keep(entries.size(), 0);
  parallel_for(entries.size(), worker_count(options.threads, entries.size()), [&](unsigned, std::size_t i) {
    if (i % 64 == 0) deadline.check();
    keep[i] = is_maximal(tg, entries[i], spec, candidates) ? 1 : 0;
  });

  ResultSet out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (keep[i]) out.insert(entries[i]);
  }
  return out;
}

}  // namespace itc
