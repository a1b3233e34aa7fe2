#pragma once

#include <cstdint>
#include <string>

#include "diorth/digraph.hpp"

namespace diorth {

// SplitMix64: the named, fixed pseudorandom stream behind every generator,
// so identical parameters give identical digraphs on every platform.
// Constants are the standard ones (Steele, Lea, Flood 2014).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 significant bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

struct GeneratorSpec {
  std::string model;  // gnp | tournament | cycle-orientation | all-digraphs
  int n = 0;
  double p = 0.0;           // gnp only
  std::uint64_t seed = 0;   // gnp / tournament
  std::uint64_t index = 0;  // cycle-orientation mask / all-digraphs index

  std::string describe() const;
};

// Each ordered pair (u, v), u != v, scanned in lexicographic order, is an arc
// independently with probability p.
Digraph gnp_digraph(int n, double p, std::uint64_t seed);

// Exactly one arc per unordered pair {u, v}, u < v; direction drawn from the
// stream.
Digraph random_tournament(int n, std::uint64_t seed);

// Orientation of the cycle v_0 v_1 ... v_{n-1} v_0: edge i runs v_i -> v_{i+1}
// when bit i of mask is 0, reversed when it is 1. Requires n >= 3, mask < 2^n.
Digraph cycle_orientation(int n, std::uint64_t mask);

// The bijection behind all_digraphs: ordered pairs (u, v), u != v, in
// lexicographic order; bit j of index switches pair j on.
Digraph digraph_from_arc_index(int n, std::uint64_t index);
std::uint64_t arc_index_count(int n);  // 2^(n(n-1)); requires n(n-1) <= 63

// Streams every labeled digraph on n vertices exactly once, in arc-set
// bitmask order. Capped at n <= 4 (already 4096 digraphs).
class AllDigraphs {
 public:
  explicit AllDigraphs(int n);

  bool done() const { return next_ >= count_; }
  std::uint64_t count() const { return count_; }
  Digraph next();

 private:
  int n_;
  std::uint64_t next_ = 0;
  std::uint64_t count_;
};

Digraph generate(const GeneratorSpec& spec);

}  // namespace diorth
