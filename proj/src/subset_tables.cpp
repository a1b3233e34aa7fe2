#include "diorth/subset_tables.hpp"

#include <string>

namespace diorth {

namespace {

void require_cap(const Digraph& d, const SolverLimit& lim) {
  if (d.order() > lim.max_n)
    throw PreconditionError("instance has " + std::to_string(d.order()) +
                            " vertices, above the configured cap of " + std::to_string(lim.max_n));
  if (d.order() > kSubsetDpCap)
    throw PreconditionError("subset-DP solvers support at most " + std::to_string(kSubsetDpCap) +
                            " vertices");
}

// Minimum number of blocks from `usable` needed to cover each mask, where
// usable(s) says whether s may be a block. Every mask is covered by singleton
// blocks, so usable must accept all singletons.
std::vector<std::uint8_t> cover_counts(std::uint32_t full, const std::vector<std::uint8_t>& usable,
                                       Deadline& deadline) {
  std::vector<std::uint8_t> count(full + 1, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    std::uint8_t best = 0xFF;
    for (std::uint32_t s = mask; s != 0; s = (s - 1) & mask) {
      deadline.tick();
      if (!(s & low) || !usable[s]) continue;
      const std::uint8_t rest = count[mask ^ s];
      if (rest + 1 < best) best = static_cast<std::uint8_t>(rest + 1);
      if (best == 1) break;
    }
    count[mask] = best;
  }
  return count;
}

}  // namespace

SubsetTables build_subset_tables(const Digraph& d, TableSet which, const SolverLimit& lim) {
  require_cap(d, lim);
  Deadline deadline(lim);

  SubsetTables t;
  t.n = d.order();
  const std::uint32_t full = t.n == 0 ? 0 : (std::uint32_t{1} << t.n) - 1;

  t.acyclic.assign(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    deadline.tick();
    t.acyclic[mask] = is_acyclic(d, VertexSet(mask)) ? 1 : 0;
    if (mask == full) break;
  }

  if (has(which, TableSet::kColoring)) {
    t.stable.assign(static_cast<std::size_t>(full) + 1, 0);
    t.stable[0] = 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      const int low = std::countr_zero(mask);
      const std::uint32_t rest = mask & (mask - 1);
      t.stable[mask] =
          t.stable[rest] &&
          (static_cast<std::uint32_t>(d.undirected_neighbors(low).bits()) & mask) == 0;
      if (mask == full) break;
    }
    t.chi = cover_counts(full, t.stable, deadline);
  }

  if (has(which, TableSet::kDicoloring)) t.chi_prime = cover_counts(full, t.acyclic, deadline);

  if (has(which, TableSet::kPaths)) {
    t.path_end.assign(static_cast<std::size_t>(full) + 1, 0);
    t.path_start.assign(static_cast<std::size_t>(full) + 1, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      deadline.tick();
      VertexSet(mask).for_each([&](int v) {
        const std::uint32_t rest = mask ^ (std::uint32_t{1} << v);
        if (rest == 0) {
          t.path_end[mask] |= std::uint32_t{1} << v;
          t.path_start[mask] |= std::uint32_t{1} << v;
          return;
        }
        if (t.path_end[rest] & static_cast<std::uint32_t>(d.in_neighbors(v).bits()))
          t.path_end[mask] |= std::uint32_t{1} << v;
        if (t.path_start[rest] & static_cast<std::uint32_t>(d.out_neighbors(v).bits()))
          t.path_start[mask] |= std::uint32_t{1} << v;
      });
      if (mask == full) break;
    }
    std::vector<std::uint8_t> pathable(static_cast<std::size_t>(full) + 1, 0);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      pathable[mask] = t.path_end[mask] != 0;
      if (mask == full) break;
    }
    t.pi = cover_counts(full, pathable, deadline);
  }

  return t;
}

Path trace_block_path(const Digraph& d, const SubsetTables& t, std::uint32_t mask) {
  std::vector<int> seq;
  std::uint32_t rest = mask;
  int cur = -1;
  while (rest != 0) {
    const std::uint32_t candidates =
        cur < 0 ? t.path_start[rest]
                : t.path_start[rest] & static_cast<std::uint32_t>(d.out_neighbors(cur).bits());
    if (candidates == 0) throw InternalError("path reconstruction stuck");
    cur = std::countr_zero(candidates);
    seq.push_back(cur);
    rest ^= std::uint32_t{1} << cur;
  }
  return Path(std::move(seq));
}

}  // namespace diorth
