#pragma once

// Test-only brute-force oracles. Each takes a deliberately different route
// from the library: reachability closure instead of in-degree elimination,
// explicit path enumeration instead of bit DP, partition enumeration instead
// of cover DP. Everything here is exponential and meant for n <= 7 or so.

#include <algorithm>
#include <map>
#include <vector>

#include "diorth/digraph.hpp"

namespace oracles {

using diorth::Digraph;
using diorth::VertexSet;

// Cycle detection via transitive closure: a cycle exists iff some vertex
// reaches itself through at least one arc.
inline bool is_acyclic(const Digraph& d, VertexSet s) {
  const int n = d.order();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& a : d.arcs())
    if (s.contains(a.tail) && s.contains(a.head)) reach[a.tail][a.head] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  for (int v = 0; v < n; ++v)
    if (reach[v][v]) return false;
  return true;
}

inline bool is_acyclic(const Digraph& d) { return oracles::is_acyclic(d, d.vertices()); }

inline bool is_stable(const Digraph& d, VertexSet s) {
  for (const auto& a : d.arcs())
    if (s.contains(a.tail) && s.contains(a.head)) return false;
  return true;
}

// Every simple path of D[region] as an explicit vertex sequence.
inline std::vector<std::vector<int>> all_simple_paths(const Digraph& d, VertexSet region) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto extend = [&](auto&& self, int v) -> void {
    cur.push_back(v);
    out.push_back(cur);
    d.out_neighbors(v).for_each([&](int w) {
      if (region.contains(w) && std::find(cur.begin(), cur.end(), w) == cur.end()) self(self, w);
    });
    cur.pop_back();
  };
  region.for_each([&](int v) { extend(extend, v); });
  return out;
}

inline std::vector<std::vector<int>> all_simple_paths(const Digraph& d) {
  return all_simple_paths(d, d.vertices());
}

inline int longest_path_order(const Digraph& d, VertexSet region) {
  int best = 0;
  for (const auto& p : all_simple_paths(d, region)) best = std::max(best, (int)p.size());
  return best;
}

inline int longest_path_order(const Digraph& d) { return longest_path_order(d, d.vertices()); }

// Lexicographically smallest among the maximum-order paths.
inline std::vector<int> lex_smallest_longest_path(const Digraph& d) {
  std::vector<int> best;
  for (const auto& p : all_simple_paths(d, d.vertices()))
    if (p.size() > best.size() || (p.size() == best.size() && p < best)) best = p;
  return best;
}

inline int max_acyclic_size(const Digraph& d, VertexSet region) {
  int best = 0;
  const std::uint64_t r = region.bits();
  for (std::uint64_t s = r;; s = (s - 1) & r) {
    if (std::popcount(s) > best && oracles::is_acyclic(d, VertexSet(s))) best = std::popcount(s);
    if (s == 0) break;
  }
  return best;
}

inline int max_stable_size(const Digraph& d, VertexSet region) {
  int best = 0;
  const std::uint64_t r = region.bits();
  for (std::uint64_t s = r;; s = (s - 1) & r) {
    if (std::popcount(s) > best && oracles::is_stable(d, VertexSet(s))) best = std::popcount(s);
    if (s == 0) break;
  }
  return best;
}

// All partitions of region into admissible blocks, reported through `visit`
// as lists of vertex sets; blocks are built around the lowest missing vertex
// so each partition appears exactly once.
template <typename Admissible, typename Visit>
inline void enumerate_partitions(VertexSet region, Admissible&& admissible, Visit&& visit) {
  std::vector<VertexSet> blocks;
  auto rec = [&](auto&& self, std::uint64_t rest) -> void {
    if (rest == 0) {
      visit(blocks);
      return;
    }
    const std::uint64_t low = rest & (~rest + 1);
    for (std::uint64_t s = rest;; s = (s - 1) & rest) {
      if ((s & low) && admissible(VertexSet(s))) {
        blocks.push_back(VertexSet(s));
        self(self, rest ^ s);
        blocks.pop_back();
      }
      if (s == 0) break;
    }
  };
  rec(rec, region.bits());
}

// Is D[s] traceable (spanned by one path)? Checked by explicit enumeration.
inline bool traceable(const Digraph& d, VertexSet s) {
  for (const auto& p : all_simple_paths(d, s))
    if ((int)p.size() == s.size()) return true;
  return false;
}

inline int chi(const Digraph& d, VertexSet region) {
  int best = region.size() == 0 ? 0 : region.size();
  enumerate_partitions(region, [&](VertexSet s) { return oracles::is_stable(d, s); },
                       [&](const std::vector<VertexSet>& blocks) {
                         best = std::min(best, (int)blocks.size());
                       });
  return best;
}

inline int chi_prime(const Digraph& d, VertexSet region) {
  int best = region.size() == 0 ? 0 : region.size();
  enumerate_partitions(region, [&](VertexSet s) { return oracles::is_acyclic(d, s); },
                       [&](const std::vector<VertexSet>& blocks) {
                         best = std::min(best, (int)blocks.size());
                       });
  return best;
}

inline int pi(const Digraph& d, VertexSet region) {
  int best = region.size() == 0 ? 0 : region.size();
  enumerate_partitions(region, [&](VertexSet s) { return traceable(d, s); },
                       [&](const std::vector<VertexSet>& blocks) {
                         best = std::min(best, (int)blocks.size());
                       });
  return best;
}

inline int knorm_of(const std::vector<VertexSet>& blocks, int k) {
  int sum = 0;
  for (VertexSet b : blocks) sum += std::min(b.size(), k);
  return sum;
}

inline int pi_k(const Digraph& d, int k) {
  int best = d.order() == 0 ? 0 : d.order();
  enumerate_partitions(d.vertices(), [&](VertexSet s) { return traceable(d, s); },
                       [&](const std::vector<VertexSet>& blocks) {
                         best = std::min(best, knorm_of(blocks, k));
                       });
  return best;
}

inline int chi_k(const Digraph& d, int k) {
  int best = d.order() == 0 ? 0 : d.order();
  enumerate_partitions(d.vertices(), [&](VertexSet s) { return oracles::is_stable(d, s); },
                       [&](const std::vector<VertexSet>& blocks) {
                         best = std::min(best, knorm_of(blocks, k));
                       });
  return best;
}

inline int chi_prime_k(const Digraph& d, int k) {
  int best = d.order() == 0 ? 0 : d.order();
  enumerate_partitions(d.vertices(), [&](VertexSet s) { return oracles::is_acyclic(d, s); },
                       [&](const std::vector<VertexSet>& blocks) {
                         best = std::min(best, knorm_of(blocks, k));
                       });
  return best;
}

// Maximum coverage by at most k disjoint admissible sets: scan subsets X and
// ask whether X splits into <= k admissible blocks.
template <typename Admissible>
inline int max_coverage_k(const Digraph& d, int k, Admissible&& admissible) {
  int best = 0;
  const std::uint64_t full = d.vertices().bits();
  for (std::uint64_t x = full;; x = (x - 1) & full) {
    if (std::popcount(x) > best) {
      int blocks_needed = std::popcount(x) == 0 ? 0 : std::popcount(x);
      enumerate_partitions(VertexSet(x), admissible,
                           [&](const std::vector<VertexSet>& blocks) {
                             blocks_needed = std::min(blocks_needed, (int)blocks.size());
                           });
      if (blocks_needed <= k) best = std::popcount(x);
    }
    if (x == 0) break;
  }
  return best;
}

inline int alpha_k(const Digraph& d, int k) {
  return max_coverage_k(d, k, [&](VertexSet s) { return oracles::is_stable(d, s); });
}

inline int alpha_prime_k(const Digraph& d, int k) {
  return max_coverage_k(d, k, [&](VertexSet s) { return oracles::is_acyclic(d, s); });
}

inline int lambda_k(const Digraph& d, int k) {
  return max_coverage_k(d, k, [&](VertexSet s) { return traceable(d, s); });
}

}  // namespace oracles
