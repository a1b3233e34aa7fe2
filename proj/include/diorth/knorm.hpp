#pragma once

#include <span>

#include "diorth/certificates.hpp"
#include "diorth/digraph.hpp"
#include "diorth/solvers.hpp"

namespace diorth {

// k-norm of a path partition: sum over paths of min(order, k).
int k_norm_of_partition(const PathPartition& p, int k);

// k-norm of a coloring or dicoloring: sum over classes of min(size, k).
int k_norm_of_classes(std::span<const VertexSet> classes, int k);

// An exact k-parameter value together with a witness attaining it. The value
// is always recomputable from the witness: the k-norm formula for the
// minimization parameters, total coverage for the maximization ones.
struct KNormReport {
  int k = 0;
  int value = 0;
  Certificate witness;
};

// Minimum k-norm over all path partitions / colorings / dicolorings.
KNormReport pi_k(const Digraph& d, int k, const SolverLimit& lim = {});
KNormReport chi_k(const Digraph& d, int k, const SolverLimit& lim = {});
KNormReport chi_prime_k(const Digraph& d, int k, const SolverLimit& lim = {});

// Maximum vertices covered by at most k disjoint stable sets / induced
// acyclic sets / paths. Witness families carry at most k members, so k above
// what the digraph supports is well-defined.
KNormReport alpha_k(const Digraph& d, int k, const SolverLimit& lim = {});
KNormReport alpha_prime_k(const Digraph& d, int k, const SolverLimit& lim = {});
KNormReport lambda_k(const Digraph& d, int k, const SolverLimit& lim = {});

}  // namespace diorth
