#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diorth/errors.hpp"

namespace diorth {

// Vertices are dense integers 0..n-1 and every vertex set is a 64-bit mask.
// That caps the structural size at 64; the exact solvers enforce far smaller
// practical limits (see solvers.hpp).
inline constexpr int kMaxVertices = 64;

// A subset of 0..n-1 as a bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet first_n(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet of(std::span<const int> vertices);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint_with(VertexSet other) const { return (bits_ & other.bits_) == 0; }

  // Smallest contained vertex; -1 when empty.
  constexpr int min_vertex() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  constexpr void add(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  std::vector<int> to_vector() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }

 private:
  std::uint64_t bits_ = 0;
};

struct Arc {
  int tail = 0;
  int head = 0;
  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

// A simple digraph: no self-loops, no duplicate arcs. Digons (both (u,v) and
// (v,u)) are allowed and each counts as a directed 2-cycle.
class Digraph {
 public:
  Digraph() = default;

  // Validates and canonicalizes (arcs sorted lexicographically).
  // Throws PreconditionError on self-loops, duplicates or range violations.
  static Digraph from_arcs(int n, std::vector<Arc> arcs);

  int order() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  std::span<const Arc> arcs() const { return arcs_; }
  VertexSet vertices() const { return VertexSet::first_n(n_); }

  bool has_arc(int u, int v) const { return out_[u].contains(v); }
  VertexSet out_neighbors(int v) const { return out_[v]; }
  VertexSet in_neighbors(int v) const { return in_[v]; }
  // Neighbors in the underlying graph.
  VertexSet undirected_neighbors(int v) const { return out_[v] | in_[v]; }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<VertexSet> out_, in_;
};

// A directed path: a nonempty sequence of distinct vertices. Whether
// consecutive vertices are joined by arcs depends on a digraph, so that part
// of the invariant is enforced by follows_arcs / the certificate checkers.
class Path {
 public:
  explicit Path(std::vector<int> vertices);

  int order() const { return static_cast<int>(seq_.size()); }
  int ini() const { return seq_.front(); }
  int terminal() const { return seq_.back(); }
  std::span<const int> vertices() const { return seq_; }
  std::vector<int> to_vector() const { return seq_; }
  VertexSet vertex_set() const { return VertexSet::of(seq_); }
  bool follows_arcs(const Digraph& d) const;

  // New path with `v` prepended; requires the arc (v, ini()) to exist.
  Path extended_front(const Digraph& d, int v) const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<int> seq_;
};

// Disjoint paths covering V(D); validated by certificates::check_path_partition.
using PathPartition = std::vector<Path>;

// Ordered partition of V(D) into classes, each inducing an acyclic
// subdigraph. Also reused for colorings (stable classes).
struct Dicoloring {
  std::vector<VertexSet> classes;

  int size() const { return static_cast<int>(classes.size()); }
  friend bool operator==(const Dicoloring&, const Dicoloring&) = default;
};

// --- edge-list format ------------------------------------------------------
//
// First non-comment line "n m", then m lines "u v". Lines whose first
// non-blank character is '#' are comments; blank lines are skipped.
// Rejects self-loops, duplicate arcs, out-of-range endpoints.

Digraph parse_edge_list(std::istream& in);
Digraph parse_edge_list(const std::string& text);

// Canonical form: "n m" followed by the arcs in lexicographic order.
std::string to_edge_list(const Digraph& d);

// DOT export, one line per arc "u -> v;". Isolated vertices get a bare line.
std::string to_dot(const Digraph& d);

// Edges {u,v}, u < v, of the underlying graph, sorted.
std::vector<std::pair<int, int>> underlying_edges(const Digraph& d);

// True iff D[s] has no directed cycle (a digon counts as a 2-cycle).
// Topological elimination of in-degree-0 vertices.
bool is_acyclic(const Digraph& d, VertexSet s);
inline bool is_acyclic(const Digraph& d) { return is_acyclic(d, d.vertices()); }

// Maximum-order path of an acyclic digraph by dynamic programming over a
// topological order. Ties break toward the lexicographically smallest vertex
// sequence. Throws PreconditionError on cyclic input.
Path longest_path_dag(const Digraph& d);

}  // namespace diorth
