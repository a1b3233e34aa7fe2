#include "diorth/digraph.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <sstream>

namespace diorth {

VertexSet VertexSet::of(std::span<const int> vertices) {
  VertexSet s;
  for (int v : vertices) s.add(v);
  return s;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

Digraph Digraph::from_arcs(int n, std::vector<Arc> arcs) {
  if (n < 0 || n > kMaxVertices)
    throw PreconditionError("vertex count must be in 0.." + std::to_string(kMaxVertices));
  Digraph d;
  d.n_ = n;
  d.out_.assign(static_cast<std::size_t>(n), VertexSet{});
  d.in_.assign(static_cast<std::size_t>(n), VertexSet{});
  std::sort(arcs.begin(), arcs.end());
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      throw PreconditionError("arc endpoint out of range");
    if (a.tail == a.head) throw PreconditionError("self-loops are not allowed");
    if (d.out_[a.tail].contains(a.head)) throw PreconditionError("duplicate arc");
    d.out_[a.tail].add(a.head);
    d.in_[a.head].add(a.tail);
  }
  d.arcs_ = std::move(arcs);
  return d;
}

Path::Path(std::vector<int> vertices) : seq_(std::move(vertices)) {
  if (seq_.empty()) throw PreconditionError("a path must be nonempty");
  VertexSet seen;
  for (int v : seq_) {
    if (v < 0 || v >= kMaxVertices) throw PreconditionError("path vertex out of range");
    if (seen.contains(v)) throw PreconditionError("path repeats a vertex");
    seen.add(v);
  }
}

bool Path::follows_arcs(const Digraph& d) const {
  for (int v : seq_)
    if (v >= d.order()) return false;
  for (std::size_t i = 0; i + 1 < seq_.size(); ++i)
    if (!d.has_arc(seq_[i], seq_[i + 1])) return false;
  return true;
}

Path Path::extended_front(const Digraph& d, int v) const {
  if (!d.has_arc(v, ini()))
    throw PreconditionError("extended_front: missing arc " + std::to_string(v) + " -> " +
                            std::to_string(ini()));
  std::vector<int> seq;
  seq.reserve(seq_.size() + 1);
  seq.push_back(v);
  seq.insert(seq.end(), seq_.begin(), seq_.end());
  return Path(std::move(seq));
}

namespace {

// Strips comments; returns false for lines with no content.
bool content_of(const std::string& line, std::string& out) {
  std::size_t i = line.find_first_not_of(" \t\r");
  if (i == std::string::npos || line[i] == '#') return false;
  out = line;
  return true;
}

bool parse_two_ints(const std::string& s, long long& a, long long& b) {
  std::istringstream in(s);
  std::string extra;
  if (!(in >> a >> b)) return false;
  if (in >> extra) return false;
  return true;
}

}  // namespace

Digraph parse_edge_list(std::istream& in) {
  std::string line, content;
  int lineno = 0;
  long long n = -1, m = -1;

  while (std::getline(in, line)) {
    ++lineno;
    if (!content_of(line, content)) continue;
    if (!parse_two_ints(content, n, m)) throw ParseError(lineno, "expected header \"n m\"");
    break;
  }
  if (n < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing header \"n m\"");
  if (n == 0 || n > kMaxVertices)
    throw ParseError(lineno, "vertex count must be in 1.." + std::to_string(kMaxVertices));
  if (m < 0 || m > n * (n - 1)) throw ParseError(lineno, "implausible arc count");

  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(m));
  std::array<VertexSet, kMaxVertices> seen{};
  long long read = 0;
  while (read < m && std::getline(in, line)) {
    ++lineno;
    if (!content_of(line, content)) continue;
    long long u, v;
    if (!parse_two_ints(content, u, v)) throw ParseError(lineno, "expected arc line \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(lineno, "vertex out of range");
    if (u == v) throw ParseError(lineno, "self-loop");
    if (seen[static_cast<std::size_t>(u)].contains(static_cast<int>(v)))
      throw ParseError(lineno, "duplicate arc");
    seen[static_cast<std::size_t>(u)].add(static_cast<int>(v));
    arcs.push_back(Arc{static_cast<int>(u), static_cast<int>(v)});
    ++read;
  }
  if (read < m) throw ParseError(lineno + 1, "file ends before all arcs are listed");
  while (std::getline(in, line)) {
    ++lineno;
    if (content_of(line, content)) throw ParseError(lineno, "unexpected content after arc list");
  }
  return Digraph::from_arcs(static_cast<int>(n), std::move(arcs));
}

Digraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

std::string to_edge_list(const Digraph& d) {
  std::ostringstream out;
  out << d.order() << ' ' << d.arc_count() << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
  return out.str();
}

std::string to_dot(const Digraph& d) {
  std::ostringstream out;
  out << "digraph D {\n";
  for (int v = 0; v < d.order(); ++v)
    if (d.undirected_neighbors(v).empty()) out << "  " << v << ";\n";
  for (const Arc& a : d.arcs()) out << "  " << a.tail << " -> " << a.head << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<std::pair<int, int>> underlying_edges(const Digraph& d) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < d.order(); ++u) {
    VertexSet upper = d.undirected_neighbors(u) - VertexSet::first_n(u + 1);
    upper.for_each([&](int v) { edges.emplace_back(u, v); });
  }
  return edges;
}

bool is_acyclic(const Digraph& d, VertexSet s) {
  if (!s.subset_of(d.vertices())) throw PreconditionError("vertex set outside digraph range");
  std::array<std::uint8_t, kMaxVertices> indeg{};
  std::array<int, kMaxVertices> queue;
  int qn = 0;
  s.for_each([&](int v) {
    indeg[v] = static_cast<std::uint8_t>((d.in_neighbors(v) & s).size());
    if (indeg[v] == 0) queue[qn++] = v;
  });
  int removed = 0;
  while (qn > 0) {
    int v = queue[--qn];
    ++removed;
    (d.out_neighbors(v) & s).for_each([&](int w) {
      if (--indeg[w] == 0) queue[qn++] = w;
    });
  }
  return removed == s.size();
}

Path longest_path_dag(const Digraph& d) {
  const int n = d.order();
  if (n == 0) throw PreconditionError("longest_path_dag: empty digraph has no path");
  if (!is_acyclic(d)) throw PreconditionError("longest_path_dag: input has a directed cycle");

  // len[v] = order of the longest path starting at v; memoized DFS is a
  // topological DP (recursion depth is at most n <= 64).
  std::array<std::uint8_t, kMaxVertices> len{};
  auto dfs = [&](auto&& self, int v) -> int {
    if (len[v] != 0) return len[v];
    int best = 0;
    d.out_neighbors(v).for_each([&](int w) { best = std::max(best, self(self, w)); });
    len[v] = static_cast<std::uint8_t>(best + 1);
    return len[v];
  };
  for (int v = 0; v < n; ++v) dfs(dfs, v);

  int start = 0;
  for (int v = 1; v < n; ++v)
    if (len[v] > len[start]) start = v;

  std::vector<int> seq{start};
  int cur = start;
  while (len[cur] > 1) {
    int next = -1;
    d.out_neighbors(cur).for_each([&](int w) {
      if (next == -1 && len[w] == len[cur] - 1) next = w;
    });
    seq.push_back(next);
    cur = next;
  }
  return Path(std::move(seq));
}

}  // namespace diorth
