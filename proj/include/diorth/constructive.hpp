#pragma once

#include <variant>
#include <vector>

#include "diorth/certificates.hpp"
#include "diorth/digraph.hpp"
#include "diorth/solvers.hpp"

namespace diorth {

// A matching in the bipartite digraph D[side1, side2] restricted to the arcs
// directed from side1 to side2.
struct DirectedMatching {
  std::vector<Arc> arcs;  // pairwise vertex-disjoint, tail in side1, head in side2
  VertexSet side1, side2;

  bool covers_side2() const;
};

// Constructive refutation when no matching covers side2: a set S of side-2
// vertices with fewer neighbors than members, and the strictly larger
// acyclic set S u (side1 \ N(S)) it yields.
struct HallViolator {
  VertexSet witness;       // S, within side2
  VertexSet neighborhood;  // N(S), within side1
  VertexSet improved;      // S u (side1 \ N(S))
};

using MatchingOutcome = std::variant<DirectedMatching, HallViolator>;

// Maximum matching on the side1 -> side2 arcs by augmenting paths. Returns
// the matching if it covers side2, otherwise the Hall violator reachable by
// alternating paths from the uncovered side-2 vertices. When side1 is a
// maximum induced acyclic set of D, a covering matching always exists.
// Throws PreconditionError if the sides overlap or either induces a cycle.
MatchingOutcome directed_matching_cover(const Digraph& d, VertexSet side1, VertexSet side2);

// Classes chosen as successive maximum induced acyclic sets of the
// remainder, so sizes are non-increasing.
struct GreedyDicoloring {
  std::vector<VertexSet> classes;

  int size() const { return static_cast<int>(classes.size()); }
};

GreedyDicoloring greedy_dicoloring(const Digraph& d, const SolverLimit& lim = {});

// Same, but the (caller-chosen) first class must be a maximum induced
// acyclic set of D; lets tests quantify over all maximum sets.
GreedyDicoloring greedy_dicoloring_seeded(const Digraph& d, VertexSet first_class,
                                          const SolverLimit& lim = {});

// A path partition where the i-th vertex of every path lies in the i-th
// greedy class.
struct GoodPathPartition {
  GreedyDicoloring dicoloring;
  PathPartition partition;
};

// Builds the good path partition bottom-up: trivial paths on the last class,
// then for each earlier class a directed matching covering the current
// initial vertices extends every path by one arc; unmatched vertices join as
// trivial paths. Runs iteratively from S_t back to S_1 so each stage's
// matching is observable, which matches the inductive construction exactly.
GoodPathPartition good_path_partition(const Digraph& d, const GreedyDicoloring& g);

// A maximum induced acyclic set together with a path partition orthogonal to
// it (each path holds exactly one vertex of the set: its initial vertex).
struct OrthogonalPair {
  VertexSet acyclic_set;
  PathPartition partition;
};

OrthogonalPair orthogonal_partition_to_mas(const Digraph& d, const SolverLimit& lim = {});
OrthogonalPair orthogonal_partition_to_mas_seeded(const Digraph& d, VertexSet mas,
                                                  const SolverLimit& lim = {});

// Raised by orthogonal_path when the given dicoloring turns out not to be
// minimum; carries the strictly smaller dicoloring extracted from the
// forward-arc subdigraph as the diagnostic.
class NonMinimumDicoloringError : public Error {
 public:
  explicit NonMinimumDicoloringError(Dicoloring smaller)
      : Error("dicoloring is not minimum: a dicoloring with " +
              std::to_string(smaller.classes.size()) + " classes exists"),
        smaller_(std::move(smaller)) {}

  const Dicoloring& smaller() const { return smaller_; }

 private:
  Dicoloring smaller_;
};

// For a minimum dicoloring S_1..S_t, returns a path orthogonal to it: the
// longest path of the (always acyclic) subdigraph of arcs that go from a
// lower-indexed to a higher-indexed class. Its order is exactly t, one
// vertex per class in increasing class order.
Path orthogonal_path(const Digraph& d, const Dicoloring& s, const SolverLimit& lim = {});

// Certified chains for the two relaxed Linial inequalities:
//   pi_k(D)  <=  |P|_k  =  |S_1 u ... u S_k|  <=  alpha'_k(D)
//   chi'_k(D) <= |S|_k  =  |V(P')|            <=  lambda_k(D)
// built from the greedy dicoloring and its good path partition, with both
// ends recomputed by the k-norm oracles and every accounting identity from
// the proofs asserted along the way.
Certificate linial_primal_certificate(const Digraph& d, int k, const SolverLimit& lim = {});
Certificate linial_dual_certificate(const Digraph& d, int k, const SolverLimit& lim = {});

}  // namespace diorth
