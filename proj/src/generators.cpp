#include "diorth/generators.hpp"

#include <sstream>

namespace diorth {

std::string GeneratorSpec::describe() const {
  std::ostringstream out;
  out << model << "(n=" << n;
  if (model == "gnp") out << ", p=" << p << ", seed=" << seed;
  if (model == "tournament") out << ", seed=" << seed;
  if (model == "cycle-orientation" || model == "all-digraphs") out << ", index=" << index;
  out << ")";
  return out.str();
}

Digraph gnp_digraph(int n, double p, std::uint64_t seed) {
  if (n < 1 || n > kMaxVertices) throw PreconditionError("gnp: n out of range");
  if (p < 0.0 || p > 1.0) throw PreconditionError("gnp: p must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (rng.next_unit() < p) arcs.push_back(Arc{u, v});
    }
  return Digraph::from_arcs(n, std::move(arcs));
}

Digraph random_tournament(int n, std::uint64_t seed) {
  if (n < 1 || n > kMaxVertices) throw PreconditionError("tournament: n out of range");
  SplitMix64 rng(seed);
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      arcs.push_back((rng.next() & 1) == 0 ? Arc{u, v} : Arc{v, u});
  return Digraph::from_arcs(n, std::move(arcs));
}

Digraph cycle_orientation(int n, std::uint64_t mask) {
  if (n < 3 || n > kMaxVertices) throw PreconditionError("cycle-orientation: n must be >= 3");
  if (mask >> n) throw PreconditionError("cycle-orientation: mask must be below 2^n");
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int a = i, b = (i + 1) % n;
    arcs.push_back(((mask >> i) & 1) == 0 ? Arc{a, b} : Arc{b, a});
  }
  return Digraph::from_arcs(n, std::move(arcs));
}

std::uint64_t arc_index_count(int n) {
  const int pairs = n * (n - 1);
  if (n < 1 || pairs > 63) throw PreconditionError("arc_index_count: n(n-1) must be <= 63");
  return std::uint64_t{1} << pairs;
}

Digraph digraph_from_arc_index(int n, std::uint64_t index) {
  if (index >= arc_index_count(n)) throw PreconditionError("arc index out of range");
  std::vector<Arc> arcs;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if ((index >> bit) & 1) arcs.push_back(Arc{u, v});
      ++bit;
    }
  return Digraph::from_arcs(n, std::move(arcs));
}

AllDigraphs::AllDigraphs(int n) : n_(n) {
  if (n < 1 || n > 4)
    throw PreconditionError("all-digraphs: n must be in 1..4 (2^(n(n-1)) instances)");
  count_ = arc_index_count(n);
}

Digraph AllDigraphs::next() {
  if (done()) throw PreconditionError("all-digraphs: stream exhausted");
  return digraph_from_arc_index(n_, next_++);
}

Digraph generate(const GeneratorSpec& spec) {
  if (spec.model == "gnp") return gnp_digraph(spec.n, spec.p, spec.seed);
  if (spec.model == "tournament") return random_tournament(spec.n, spec.seed);
  if (spec.model == "cycle-orientation") return cycle_orientation(spec.n, spec.index);
  if (spec.model == "all-digraphs") return digraph_from_arc_index(spec.n, spec.index);
  throw PreconditionError("unknown generator model '" + spec.model + "'");
}

}  // namespace diorth
