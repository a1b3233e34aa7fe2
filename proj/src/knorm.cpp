#include "diorth/knorm.hpp"

#include <algorithm>

#include "diorth/subset_tables.hpp"

namespace diorth {

namespace {

void require_k(int k) {
  if (k < 1) throw PreconditionError("k must be a positive integer");
}

int popcount32(std::uint32_t m) { return std::popcount(m); }

// Minimization side: partition DP with block cost min(|block|, k).
template <typename Usable>
std::pair<int, std::vector<std::uint32_t>> min_knorm_blocks(const Digraph& d, int k,
                                                            const SolverLimit& lim,
                                                            Usable&& usable) {
  Deadline deadline(lim);
  const std::uint32_t full = static_cast<std::uint32_t>(d.vertices().bits());
  const auto cost = [&](std::uint32_t s) { return std::min(popcount32(s), k); };
  const auto counts = block_cover_dp(full, usable, cost, deadline);
  auto blocks = replay_blocks(full, counts, usable, cost);
  return {counts[full], std::move(blocks)};
}

// Maximization side: largest mask whose cover number is at most k, scanning
// masks in ascending numeric order so the witness is pinned.
std::uint32_t best_covered_mask(const Digraph& d, int k, const std::vector<std::uint8_t>& cover) {
  const std::uint32_t full = static_cast<std::uint32_t>(d.vertices().bits());
  std::uint32_t best = 0;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (cover[mask] <= k && popcount32(mask) > popcount32(best)) best = mask;
    if (mask == full) break;
  }
  return best;
}

std::vector<VertexSet> classes_of_blocks(const std::vector<std::uint32_t>& blocks) {
  std::vector<VertexSet> out;
  out.reserve(blocks.size());
  for (std::uint32_t s : blocks) out.emplace_back(s);
  return out;
}

PathPartition paths_of_blocks(const Digraph& d, const SubsetTables& t,
                              const std::vector<std::uint32_t>& blocks) {
  PathPartition out;
  out.reserve(blocks.size());
  for (std::uint32_t s : blocks) out.push_back(trace_block_path(d, t, s));
  std::sort(out.begin(), out.end(), [](const Path& a, const Path& b) { return a.ini() < b.ini(); });
  return out;
}

}  // namespace

int k_norm_of_partition(const PathPartition& p, int k) {
  require_k(k);
  int sum = 0;
  for (const Path& path : p) sum += std::min(path.order(), k);
  return sum;
}

int k_norm_of_classes(std::span<const VertexSet> classes, int k) {
  require_k(k);
  int sum = 0;
  for (VertexSet s : classes) sum += std::min(s.size(), k);
  return sum;
}

KNormReport pi_k(const Digraph& d, int k, const SolverLimit& lim) {
  require_k(k);
  const SubsetTables t = build_subset_tables(d, TableSet::kPaths, lim);
  auto [value, blocks] =
      min_knorm_blocks(d, k, lim, [&](std::uint32_t s) { return t.pathable(s); });
  const PathPartition witness = paths_of_blocks(d, t, blocks);
  return {k, value, make_path_partition_certificate(d, witness)};
}

KNormReport chi_k(const Digraph& d, int k, const SolverLimit& lim) {
  require_k(k);
  const SubsetTables t = build_subset_tables(d, TableSet::kColoring, lim);
  auto [value, blocks] =
      min_knorm_blocks(d, k, lim, [&](std::uint32_t s) { return t.stable[s] != 0; });
  const auto classes = classes_of_blocks(blocks);
  return {k, value, make_coloring_certificate(d, classes)};
}

KNormReport chi_prime_k(const Digraph& d, int k, const SolverLimit& lim) {
  require_k(k);
  const SubsetTables t = build_subset_tables(d, TableSet::kDicoloring, lim);
  auto [value, blocks] =
      min_knorm_blocks(d, k, lim, [&](std::uint32_t s) { return t.acyclic[s] != 0; });
  const auto classes = classes_of_blocks(blocks);
  return {k, value, make_dicoloring_certificate(d, classes)};
}

KNormReport alpha_k(const Digraph& d, int k, const SolverLimit& lim) {
  require_k(k);
  const SubsetTables t = build_subset_tables(d, TableSet::kColoring, lim);
  const std::uint32_t best = best_covered_mask(d, k, t.chi);
  const auto blocks = replay_blocks(
      best, t.chi, [&](std::uint32_t s) { return t.stable[s] != 0; }, [](std::uint32_t) { return 1; });
  const auto sets = classes_of_blocks(blocks);
  return {k, popcount32(best), make_partial_k_dicoloring_certificate(d, sets, k, /*stable=*/true)};
}

KNormReport alpha_prime_k(const Digraph& d, int k, const SolverLimit& lim) {
  require_k(k);
  const SubsetTables t = build_subset_tables(d, TableSet::kDicoloring, lim);
  const std::uint32_t best = best_covered_mask(d, k, t.chi_prime);
  const auto blocks = replay_blocks(
      best, t.chi_prime, [&](std::uint32_t s) { return t.acyclic[s] != 0; },
      [](std::uint32_t) { return 1; });
  const auto sets = classes_of_blocks(blocks);
  return {k, popcount32(best), make_partial_k_dicoloring_certificate(d, sets, k)};
}

KNormReport lambda_k(const Digraph& d, int k, const SolverLimit& lim) {
  require_k(k);
  const SubsetTables t = build_subset_tables(d, TableSet::kPaths, lim);
  const std::uint32_t best = best_covered_mask(d, k, t.pi);
  const auto blocks = replay_blocks(
      best, t.pi, [&](std::uint32_t s) { return t.pathable(s); }, [](std::uint32_t) { return 1; });
  const PathPartition pack = paths_of_blocks(d, t, blocks);
  return {k, popcount32(best), make_k_pack_certificate(d, pack, k)};
}

}  // namespace diorth
