#include "diorth/solvers.hpp"

#include <algorithm>
#include <string>

#include "diorth/subset_tables.hpp"

namespace diorth {

namespace {

void require_n(const Digraph& d, const SolverLimit& lim, int hard_cap, const char* what) {
  const int cap = std::min(lim.max_n, hard_cap);
  if (d.order() > cap)
    throw PreconditionError(std::string(what) + ": instance has " + std::to_string(d.order()) +
                            " vertices, cap is " + std::to_string(cap));
}

// Include-first branch and bound over the region's vertices in ascending
// order. Enumeration order makes the first maximum found the
// lexicographically smallest one, and the <= prune never discards a strictly
// larger set, so that tie-break survives pruning.
template <typename CanInclude>
VertexSet best_subset(VertexSet region, Deadline& deadline, CanInclude&& can_include) {
  const std::vector<int> verts = region.to_vector();
  const int cnt = static_cast<int>(verts.size());
  VertexSet best;
  auto rec = [&](auto&& self, int idx, VertexSet current) -> void {
    deadline.tick();
    if (current.size() + (cnt - idx) <= best.size()) return;
    if (idx == cnt) {
      best = current;
      return;
    }
    const int v = verts[static_cast<std::size_t>(idx)];
    if (can_include(current, v)) self(self, idx + 1, current.with(v));
    self(self, idx + 1, current);
  };
  rec(rec, 0, VertexSet{});
  return best;
}

Dicoloring cover_into_classes(const Digraph& d, const SolverLimit& lim, TableSet tables) {
  const SubsetTables t = build_subset_tables(d, tables, lim);
  const std::uint32_t full = static_cast<std::uint32_t>(d.vertices().bits());
  const auto& count = tables == TableSet::kColoring ? t.chi : t.chi_prime;
  const auto& usable = tables == TableSet::kColoring ? t.stable : t.acyclic;
  Dicoloring out;
  const auto blocks = replay_blocks(
      full, count, [&](std::uint32_t m) { return usable[m] != 0; }, [](std::uint32_t) { return 1; });
  for (std::uint32_t s : blocks) out.classes.emplace_back(s);
  return out;
}

}  // namespace

VertexSet max_induced_acyclic(const Digraph& d, VertexSet region, const SolverLimit& lim) {
  require_n(d, lim, kBranchBoundCap, "max_induced_acyclic");
  if (!region.subset_of(d.vertices()))
    throw PreconditionError("max_induced_acyclic: region outside digraph");
  Deadline deadline(lim);
  return best_subset(region, deadline,
                     [&](VertexSet current, int v) { return is_acyclic(d, current.with(v)); });
}

VertexSet max_stable_set(const Digraph& d, VertexSet region, const SolverLimit& lim) {
  require_n(d, lim, kBranchBoundCap, "max_stable_set");
  if (!region.subset_of(d.vertices()))
    throw PreconditionError("max_stable_set: region outside digraph");
  Deadline deadline(lim);
  return best_subset(region, deadline, [&](VertexSet current, int v) {
    return (d.undirected_neighbors(v) & current).empty();
  });
}

Dicoloring min_dicoloring(const Digraph& d, const SolverLimit& lim) {
  return cover_into_classes(d, lim, TableSet::kDicoloring);
}

Dicoloring min_coloring(const Digraph& d, const SolverLimit& lim) {
  return cover_into_classes(d, lim, TableSet::kColoring);
}

Path longest_path(const Digraph& d, const SolverLimit& lim) {
  require_n(d, lim, kLongestPathCap, "longest_path");
  const int n = d.order();
  if (n == 0) throw PreconditionError("longest_path: empty digraph has no path");
  Deadline deadline(lim);

  // reach[mask * n + v] = order of the longest path starting at v inside mask.
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint8_t> reach(static_cast<std::size_t>(full + 1) * static_cast<std::size_t>(n),
                                  0);
  auto at = [&](std::uint32_t mask, int v) -> std::uint8_t& {
    return reach[static_cast<std::size_t>(mask) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(v)];
  };
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    deadline.tick();
    VertexSet(mask).for_each([&](int v) {
      const std::uint32_t rest = mask ^ (std::uint32_t{1} << v);
      std::uint8_t best = 0;
      (d.out_neighbors(v) & VertexSet(rest)).for_each([&](int w) {
        best = std::max(best, at(rest, w));
      });
      at(mask, v) = static_cast<std::uint8_t>(best + 1);
    });
    if (mask == full) break;
  }

  int start = 0;
  for (int v = 1; v < n; ++v)
    if (at(full, v) > at(full, start)) start = v;

  std::vector<int> seq{start};
  std::uint32_t rest = full ^ (std::uint32_t{1} << start);
  int cur = start;
  while (at(rest | (std::uint32_t{1} << cur), cur) > 1) {
    const std::uint8_t want = static_cast<std::uint8_t>(at(rest | (std::uint32_t{1} << cur), cur) - 1);
    int next = -1;
    (d.out_neighbors(cur) & VertexSet(rest)).for_each([&](int w) {
      if (next == -1 && at(rest, w) == want) next = w;
    });
    if (next == -1) throw InternalError("longest_path reconstruction stuck");
    seq.push_back(next);
    cur = next;
    rest ^= std::uint32_t{1} << next;
  }
  return Path(std::move(seq));
}

PathPartition min_path_partition(const Digraph& d, const SolverLimit& lim) {
  const SubsetTables t = build_subset_tables(d, TableSet::kPaths, lim);
  const std::uint32_t full = static_cast<std::uint32_t>(d.vertices().bits());
  PathPartition parts;
  const auto blocks = replay_blocks(
      full, t.pi, [&](std::uint32_t m) { return t.pathable(m); }, [](std::uint32_t) { return 1; });
  for (std::uint32_t s : blocks) parts.push_back(trace_block_path(d, t, s));
  std::sort(parts.begin(), parts.end(),
            [](const Path& a, const Path& b) { return a.ini() < b.ini(); });
  return parts;
}

}  // namespace diorth
