#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "diorth/digraph.hpp"
#include "diorth/solvers.hpp"

namespace diorth {

// Per-subset tables shared by the cover-DP solvers and the k-norm oracles.
// All tables are indexed by a subset mask of 0..n-1; n is capped at
// kSubsetDpCap so every table fits comfortably in memory.
//
// cover counts use the standard trick of only trying blocks that contain the
// lowest set bit of the remaining mask, enumerated in descending submask
// order; the witness reconstruction in solvers.cpp/knorm.cpp replays the
// same enumeration, which pins the tie-breaking.
struct SubsetTables {
  int n = 0;
  std::vector<std::uint8_t> acyclic;     // D[mask] has no directed cycle
  std::vector<std::uint8_t> stable;      // mask is a stable set of U(D)
  std::vector<std::uint32_t> path_end;   // ends of Hamiltonian paths of D[mask]
  std::vector<std::uint32_t> path_start; // starts of Hamiltonian paths of D[mask]
  std::vector<std::uint8_t> chi;         // chromatic number of U(D[mask])
  std::vector<std::uint8_t> chi_prime;   // dichromatic number of D[mask]
  std::vector<std::uint8_t> pi;          // minimum path-partition size of D[mask]

  bool pathable(std::uint32_t mask) const { return mask == 0 || path_end[mask] != 0; }
};

enum class TableSet : unsigned {
  kNone = 0,
  kPaths = 1,       // path_end / path_start / pi
  kColoring = 2,    // stable / chi
  kDicoloring = 4,  // chi_prime
  kAll = 7,
};

inline TableSet operator|(TableSet a, TableSet b) {
  return static_cast<TableSet>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
inline bool has(TableSet set, TableSet bit) {
  return (static_cast<unsigned>(set) & static_cast<unsigned>(bit)) != 0;
}

// Builds the requested tables (acyclic is always built). Throws
// PreconditionError when d.order() exceeds kSubsetDpCap or lim.max_n.
SubsetTables build_subset_tables(const Digraph& d, TableSet which, const SolverLimit& lim = {});

// Generic partition DP: best[mask] = min over admissible blocks s (containing
// the lowest bit of mask) of cost(s) + best[mask ^ s].
template <typename Usable, typename Cost>
std::vector<int> block_cover_dp(std::uint32_t full, Usable&& usable, Cost&& cost,
                                Deadline& deadline) {
  std::vector<int> best(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t low = mask & (~mask + 1);
    int b = INT32_MAX;
    for (std::uint32_t s = mask; s != 0; s = (s - 1) & mask) {
      deadline.tick();
      if (!(s & low) || !usable(s)) continue;
      b = std::min(b, cost(s) + best[mask ^ s]);
    }
    best[mask] = b;
    if (mask == full) break;
  }
  return best;
}

// Splits `full` into optimal blocks by replaying the DP enumeration; the
// first optimal block in descending submask order wins, which pins the
// witness deterministically.
template <typename Count, typename Usable, typename Cost>
std::vector<std::uint32_t> replay_blocks(std::uint32_t full, const std::vector<Count>& count,
                                         Usable&& usable, Cost&& cost) {
  std::vector<std::uint32_t> blocks;
  std::uint32_t mask = full;
  while (mask != 0) {
    const std::uint32_t low = mask & (~mask + 1);
    bool found = false;
    for (std::uint32_t s = mask; s != 0; s = (s - 1) & mask) {
      if (!(s & low) || !usable(s)) continue;
      if (cost(s) + static_cast<int>(count[mask ^ s]) == static_cast<int>(count[mask])) {
        blocks.push_back(s);
        mask ^= s;
        found = true;
        break;
      }
    }
    if (!found) throw InternalError("block reconstruction found no optimal block");
  }
  return blocks;
}

// Lexicographically smallest Hamiltonian path of D[mask]; one must exist.
Path trace_block_path(const Digraph& d, const SubsetTables& t, std::uint32_t mask);

}  // namespace diorth
