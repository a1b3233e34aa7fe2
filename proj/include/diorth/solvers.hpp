#pragma once

#include <chrono>
#include <cstdint>

#include "diorth/digraph.hpp"

namespace diorth {

// Caps for an exact solver call. max_n bounds the instance size; time_budget
// is wall-clock seconds, 0 meaning unlimited. Exceeding the budget raises
// BudgetError; exceeding max_n raises PreconditionError.
struct SolverLimit {
  int max_n = 24;
  double time_budget = 0.0;
};

// Cooperative wall-clock guard. tick() is cheap enough for inner loops.
class Deadline {
 public:
  explicit Deadline(const SolverLimit& lim)
      : enabled_(lim.time_budget > 0.0),
        end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(lim.time_budget))) {}

  void tick() {
    if (enabled_ && (++count_ & 0xFF) == 0 && std::chrono::steady_clock::now() > end_)
      throw BudgetError("solver time budget exceeded");
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point end_;
  std::uint32_t count_ = 0;
};

// Hard caps beyond which a solver refuses to run regardless of SolverLimit.
// Branch-and-bound scales furthest; the subset-DP solvers hold 2^n tables.
inline constexpr int kBranchBoundCap = 24;
inline constexpr int kLongestPathCap = 20;
inline constexpr int kSubsetDpCap = 18;

// All solvers return lexicographically smallest witnesses (witness order:
// sorted vertex sequences for sets and paths, fixed block enumeration for
// partitions), so reruns are reproducible bit for bit.

// Maximum induced acyclic set of D[region]; branch-and-bound over subsets
// with acyclicity pruning.
VertexSet max_induced_acyclic(const Digraph& d, VertexSet region, const SolverLimit& lim = {});
inline VertexSet max_induced_acyclic(const Digraph& d, const SolverLimit& lim = {}) {
  return max_induced_acyclic(d, d.vertices(), lim);
}

// Maximum stable set of the underlying graph of D[region].
VertexSet max_stable_set(const Digraph& d, VertexSet region, const SolverLimit& lim = {});
inline VertexSet max_stable_set(const Digraph& d, const SolverLimit& lim = {}) {
  return max_stable_set(d, d.vertices(), lim);
}

// Minimum dicoloring (chi'(D) classes) by set-cover DP over subsets with
// acyclic blocks. Classes come out ordered by smallest contained vertex.
Dicoloring min_dicoloring(const Digraph& d, const SolverLimit& lim = {});

// Minimum coloring of the underlying graph, same DP with stable blocks.
Dicoloring min_coloring(const Digraph& d, const SolverLimit& lim = {});

// Maximum-order directed path of a general digraph via DP over
// (vertex, visited-subset) states.
Path longest_path(const Digraph& d, const SolverLimit& lim = {});

// Minimum path partition (pi(D) paths) by cover DP over path-inducing
// subsets. Paths come out sorted by initial vertex.
PathPartition min_path_partition(const Digraph& d, const SolverLimit& lim = {});

}  // namespace diorth
