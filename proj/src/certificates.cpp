#include "diorth/certificates.hpp"

#include <algorithm>
#include <array>
#include <cinttypes>
#include <cstdio>
#include <unordered_map>

#include "diorth/knorm.hpp"

namespace diorth {

namespace {

bool fail_diag(std::string* diag, const std::string& msg) {
  if (diag != nullptr) *diag = msg;
  return false;
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace

std::string digraph_fingerprint(const Digraph& d) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, fnv1a64(to_edge_list(d)));
  return buf;
}

std::string serialize_certificate(const Certificate& c) {
  Json j;
  j["format"] = "diorth.cert/1";
  j["kind"] = c.kind;
  j["fingerprint"] = c.fingerprint;
  j["payload"] = c.payload;
  return j.dump(2) + "\n";
}

Certificate parse_certificate(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("invalid certificate JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string() ||
      !j.contains("fingerprint") || !j["fingerprint"].is_string() || !j.contains("payload"))
    throw ParseError(1, "certificate must carry kind, fingerprint and payload");
  return Certificate{j["kind"].get<std::string>(), j["fingerprint"].get<std::string>(),
                     j["payload"]};
}

// --- independent primitives --------------------------------------------------

bool acyclic_by_dfs(const Digraph& d, VertexSet s) {
  std::array<std::uint8_t, kMaxVertices> color{};
  auto visit = [&](auto&& self, int v) -> bool {  // true when a cycle is hit
    color[v] = 1;
    bool cyc = false;
    (d.out_neighbors(v) & s).for_each([&](int w) {
      if (cyc) return;
      if (color[w] == 1)
        cyc = true;
      else if (color[w] == 0)
        cyc = self(self, w);
    });
    color[v] = 2;
    return cyc;
  };
  bool cyc = false;
  s.for_each([&](int v) {
    if (!cyc && color[v] == 0) cyc = visit(visit, v);
  });
  return !cyc;
}

namespace {

template <typename Admissible>
int brute_best_subset_size(VertexSet region, Admissible&& admissible) {
  const std::uint64_t r = region.bits();
  int best = 0;
  for (std::uint64_t s = r;; s = (s - 1) & r) {
    if (std::popcount(s) > best && admissible(VertexSet(s))) best = std::popcount(s);
    if (s == 0) break;
  }
  return best;
}

// Branch and bound over vertex-to-class assignments; first-fit class opening
// keeps the search canonical.
template <typename ClassOk>
int brute_cover_number(const Digraph& d, Deadline& deadline, ClassOk&& class_ok) {
  const int n = d.order();
  if (n == 0) return 0;
  int best = n;
  std::vector<VertexSet> classes;
  auto rec = [&](auto&& self, int v) -> void {
    deadline.tick();
    if (static_cast<int>(classes.size()) >= best) return;
    if (v == n) {
      best = static_cast<int>(classes.size());
      return;
    }
    // Index-based: the recursion appends and pops classes, which may
    // reallocate the vector under a range-for.
    const std::size_t existing = classes.size();
    for (std::size_t ci = 0; ci < existing; ++ci) {
      if (class_ok(classes[ci], v)) {
        classes[ci].add(v);
        self(self, v + 1);
        classes[ci].remove(v);
      }
    }
    classes.push_back(VertexSet::single(v));
    self(self, v + 1);
    classes.pop_back();
  };
  rec(rec, 0);
  return best;
}

bool has_hamiltonian_path(const Digraph& d, VertexSet s, Deadline& deadline) {
  auto walk = [&](auto&& self, int v, VertexSet rest) -> bool {
    deadline.tick();
    if (rest.empty()) return true;
    bool found = false;
    (d.out_neighbors(v) & rest).for_each([&](int w) {
      if (!found) found = self(self, w, rest.without(w));
    });
    return found;
  };
  bool found = false;
  s.for_each([&](int v) {
    if (!found) found = walk(walk, v, s.without(v));
  });
  return found || s.empty();
}

}  // namespace

int brute_max_acyclic_size(const Digraph& d, VertexSet region) {
  return brute_best_subset_size(region, [&](VertexSet s) { return acyclic_by_dfs(d, s); });
}

int brute_max_stable_size(const Digraph& d, VertexSet region) {
  return brute_best_subset_size(region, [&](VertexSet s) {
    bool stable = true;
    s.for_each([&](int v) { stable = stable && (d.undirected_neighbors(v) & s).empty(); });
    return stable;
  });
}

int brute_dichromatic_number(const Digraph& d, Deadline& deadline) {
  return brute_cover_number(d, deadline, [&](VertexSet cls, int v) {
    return acyclic_by_dfs(d, cls.with(v));
  });
}

int brute_chromatic_number(const Digraph& d, Deadline& deadline) {
  return brute_cover_number(d, deadline, [&](VertexSet cls, int v) {
    return (d.undirected_neighbors(v) & cls).empty();
  });
}

int brute_min_path_partition_size(const Digraph& d, Deadline& deadline) {
  std::unordered_map<std::uint64_t, int> memo;
  auto solve = [&](auto&& self, std::uint64_t mask) -> int {
    if (mask == 0) return 0;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    deadline.tick();
    const std::uint64_t low = mask & (~mask + 1);
    int best = INT32_MAX;
    for (std::uint64_t s = mask;; s = (s - 1) & mask) {
      if ((s & low) && has_hamiltonian_path(d, VertexSet(s), deadline)) {
        const int rest = self(self, mask ^ s);
        best = std::min(best, 1 + rest);
      }
      if (s == 0) break;
    }
    memo.emplace(mask, best);
    return best;
  };
  return solve(solve, d.vertices().bits());
}

int brute_longest_path_order(const Digraph& d, Deadline& deadline) {
  int best = 0;
  auto walk = [&](auto&& self, int v, VertexSet rest, int len) -> void {
    deadline.tick();
    best = std::max(best, len);
    (d.out_neighbors(v) & rest).for_each([&](int w) { self(self, w, rest.without(w), len + 1); });
  };
  for (int v = 0; v < d.order(); ++v) walk(walk, v, d.vertices().without(v), 1);
  return best;
}

// --- structural checkers -------------------------------------------------------

bool check_orthogonal(std::span<const VertexSet> family, VertexSet q, std::string* diag) {
  VertexSet seen;
  for (const VertexSet& member : family) {
    if (!member.disjoint_with(seen)) throw PreconditionError("family members overlap");
    seen = seen | member;
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    const int hits = (family[i] & q).size();
    if (hits != 1)
      return fail_diag(diag, "family member " + std::to_string(i) + " meets Q in " +
                                 std::to_string(hits) + " vertices, want exactly 1");
  }
  return true;
}

bool check_orthogonal(std::span<const VertexSet> family, const Path& q, std::string* diag) {
  return check_orthogonal(family, q.vertex_set(), diag);
}

bool check_path_partition(const Digraph& d, const PathPartition& p, std::string* diag) {
  VertexSet covered;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].follows_arcs(d))
      return fail_diag(diag, "path " + std::to_string(i) + " does not follow arcs of D");
    if (!p[i].vertex_set().disjoint_with(covered))
      return fail_diag(diag, "path " + std::to_string(i) + " overlaps an earlier path");
    covered = covered | p[i].vertex_set();
  }
  if (covered != d.vertices()) return fail_diag(diag, "paths do not cover V(D)");
  return true;
}

namespace {

bool check_class_partition(const Digraph& d, std::span<const VertexSet> classes,
                           bool require_stable, std::string* diag) {
  VertexSet covered;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].empty())
      return fail_diag(diag, "class " + std::to_string(i) + " is empty");
    if (!classes[i].subset_of(d.vertices()))
      return fail_diag(diag, "class " + std::to_string(i) + " outside V(D)");
    if (!classes[i].disjoint_with(covered))
      return fail_diag(diag, "class " + std::to_string(i) + " overlaps an earlier class");
    covered = covered | classes[i];
    if (require_stable) {
      bool stable = true;
      classes[i].for_each(
          [&](int v) { stable = stable && (d.undirected_neighbors(v) & classes[i]).empty(); });
      if (!stable) return fail_diag(diag, "class " + std::to_string(i) + " is not stable");
    } else if (!acyclic_by_dfs(d, classes[i])) {
      return fail_diag(diag, "class " + std::to_string(i) + " induces a directed cycle");
    }
  }
  if (covered != d.vertices()) return fail_diag(diag, "classes do not cover V(D)");
  return true;
}

}  // namespace

bool check_dicoloring(const Digraph& d, std::span<const VertexSet> classes, std::string* diag) {
  return check_class_partition(d, classes, /*require_stable=*/false, diag);
}

bool check_coloring(const Digraph& d, std::span<const VertexSet> classes, std::string* diag) {
  return check_class_partition(d, classes, /*require_stable=*/true, diag);
}

bool check_k_pack(const Digraph& d, const PathPartition& paths, int k, std::string* diag) {
  if (k < 1) return fail_diag(diag, "k must be positive");
  if (static_cast<int>(paths.size()) > k)
    return fail_diag(diag, "pack has more than k paths");
  VertexSet covered;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (!paths[i].follows_arcs(d))
      return fail_diag(diag, "pack path " + std::to_string(i) + " does not follow arcs of D");
    if (!paths[i].vertex_set().disjoint_with(covered))
      return fail_diag(diag, "pack path " + std::to_string(i) + " overlaps an earlier path");
    covered = covered | paths[i].vertex_set();
  }
  return true;
}

bool check_partial_k_dicoloring(const Digraph& d, std::span<const VertexSet> sets, int k,
                                bool require_stable, std::string* diag) {
  if (k < 1) return fail_diag(diag, "k must be positive");
  if (static_cast<int>(sets.size()) > k)
    return fail_diag(diag, "partial family has more than k members");
  VertexSet covered;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!sets[i].subset_of(d.vertices()))
      return fail_diag(diag, "member " + std::to_string(i) + " outside V(D)");
    if (!sets[i].disjoint_with(covered))
      return fail_diag(diag, "member " + std::to_string(i) + " overlaps an earlier member");
    covered = covered | sets[i];
    if (!acyclic_by_dfs(d, sets[i]))
      return fail_diag(diag, "member " + std::to_string(i) + " induces a directed cycle");
    if (require_stable) {
      bool stable = true;
      sets[i].for_each(
          [&](int v) { stable = stable && (d.undirected_neighbors(v) & sets[i]).empty(); });
      if (!stable) return fail_diag(diag, "member " + std::to_string(i) + " is not stable");
    }
  }
  return true;
}

bool check_directed_matching(const Digraph& d, std::span<const Arc> matching, VertexSet side1,
                             VertexSet side2, bool require_cover_side2, std::string* diag) {
  if (!side1.subset_of(d.vertices()) || !side2.subset_of(d.vertices()))
    return fail_diag(diag, "side outside V(D)");
  if (!side1.disjoint_with(side2)) return fail_diag(diag, "sides overlap");
  VertexSet used, heads;
  for (const Arc& a : matching) {
    if (!side1.contains(a.tail)) return fail_diag(diag, "matching arc tail outside side 1");
    if (!side2.contains(a.head)) return fail_diag(diag, "matching arc head outside side 2");
    if (a.tail >= d.order() || a.head >= d.order() || !d.has_arc(a.tail, a.head))
      return fail_diag(diag, "matching arc missing from D");
    if (used.contains(a.tail) || used.contains(a.head))
      return fail_diag(diag, "matching arcs share a vertex");
    used.add(a.tail);
    used.add(a.head);
    heads.add(a.head);
  }
  if (require_cover_side2 && !side2.subset_of(heads))
    return fail_diag(diag, "matching does not cover side 2");
  return true;
}

bool check_good_path_partition(const Digraph& d, std::span<const VertexSet> classes,
                               const PathPartition& p, bool recheck_greedy, std::string* diag) {
  if (!check_dicoloring(d, classes, diag)) return false;
  for (std::size_t i = 1; i < classes.size(); ++i)
    if (classes[i].size() > classes[i - 1].size())
      return fail_diag(diag, "greedy class sizes increase at class " + std::to_string(i));
  if (recheck_greedy) {
    VertexSet remainder = d.vertices();
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (!classes[i].subset_of(remainder))
        return fail_diag(diag, "class " + std::to_string(i) + " outside its remainder");
      if (brute_max_acyclic_size(d, remainder) != classes[i].size())
        return fail_diag(diag, "class " + std::to_string(i) +
                                   " is not a maximum acyclic set of the remainder");
      remainder = remainder - classes[i];
    }
  }
  if (!check_path_partition(d, p, diag)) return false;
  for (std::size_t pi = 0; pi < p.size(); ++pi) {
    const auto verts = p[pi].vertices();
    if (verts.size() > classes.size())
      return fail_diag(diag, "path " + std::to_string(pi) + " is longer than the class count");
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (!classes[i].contains(verts[i]))
        return fail_diag(diag, "path " + std::to_string(pi) + " position " + std::to_string(i + 1) +
                                   " is not in class " + std::to_string(i + 1));
  }
  return true;
}

// --- json helpers ---------------------------------------------------------------

Json json_of(VertexSet s) {
  Json arr = Json::array();
  s.for_each([&](int v) { arr.push_back(v); });
  return arr;
}

Json json_of(const Path& p) {
  Json arr = Json::array();
  for (int v : p.vertices()) arr.push_back(v);
  return arr;
}

Json json_of(std::span<const VertexSet> sets) {
  Json arr = Json::array();
  for (const VertexSet& s : sets) arr.push_back(json_of(s));
  return arr;
}

Json json_of(const PathPartition& paths) {
  Json arr = Json::array();
  for (const Path& p : paths) arr.push_back(json_of(p));
  return arr;
}

namespace {

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw Error(std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

VertexSet vertex_set_from_json(const Json& j, int n) {
  if (!j.is_array()) throw Error("vertex set must be an array");
  VertexSet s;
  for (const Json& e : j) {
    if (!e.is_number_integer()) throw Error("vertex set entries must be integers");
    const int v = e.get<int>();
    if (v < 0 || v >= n) throw Error("vertex out of range");
    if (s.contains(v)) throw Error("vertex set repeats a vertex");
    s.add(v);
  }
  return s;
}

std::vector<VertexSet> classes_from_json(const Json& j, int n) {
  if (!j.is_array()) throw Error("class list must be an array");
  std::vector<VertexSet> out;
  for (const Json& e : j) out.push_back(vertex_set_from_json(e, n));
  return out;
}

Path path_from_json(const Json& j, int n) {
  if (!j.is_array()) throw Error("path must be an array");
  std::vector<int> seq;
  for (const Json& e : j) {
    if (!e.is_number_integer()) throw Error("path entries must be integers");
    const int v = e.get<int>();
    if (v < 0 || v >= n) throw Error("path vertex out of range");
    seq.push_back(v);
  }
  return Path(std::move(seq));
}

PathPartition paths_from_json(const Json& j, int n) {
  if (!j.is_array()) throw Error("path list must be an array");
  PathPartition out;
  for (const Json& e : j) out.push_back(path_from_json(e, n));
  return out;
}

}  // namespace

// --- builders ---------------------------------------------------------------------

Certificate make_path_partition_certificate(const Digraph& d, const PathPartition& p,
                                            bool minimum) {
  Json payload;
  payload["paths"] = json_of(p);
  if (minimum) payload["minimum"] = true;
  return {"path-partition", digraph_fingerprint(d), std::move(payload)};
}

Certificate make_dicoloring_certificate(const Digraph& d, std::span<const VertexSet> classes,
                                        bool minimum, bool greedy) {
  Json payload;
  payload["classes"] = json_of(classes);
  if (minimum) payload["minimum"] = true;
  if (greedy) payload["greedy"] = true;
  return {"dicoloring", digraph_fingerprint(d), std::move(payload)};
}

Certificate make_coloring_certificate(const Digraph& d, std::span<const VertexSet> classes,
                                      bool minimum) {
  Json payload;
  payload["classes"] = json_of(classes);
  if (minimum) payload["minimum"] = true;
  return {"coloring", digraph_fingerprint(d), std::move(payload)};
}

Certificate make_k_pack_certificate(const Digraph& d, const PathPartition& paths, int k) {
  Json payload;
  payload["k"] = k;
  payload["paths"] = json_of(paths);
  int covered = 0;
  for (const Path& p : paths) covered += p.order();
  payload["covered"] = covered;
  return {"k-pack", digraph_fingerprint(d), std::move(payload)};
}

Certificate make_partial_k_dicoloring_certificate(const Digraph& d,
                                                  std::span<const VertexSet> sets, int k,
                                                  bool stable, bool maximum) {
  Json payload;
  payload["k"] = k;
  payload["sets"] = json_of(sets);
  int covered = 0;
  for (const VertexSet& s : sets) covered += s.size();
  payload["covered"] = covered;
  if (stable) payload["stable"] = true;
  if (maximum) payload["maximum"] = true;
  return {"partial-k-dicoloring", digraph_fingerprint(d), std::move(payload)};
}

Certificate make_directed_matching_certificate(const Digraph& d, std::span<const Arc> matching,
                                               VertexSet side1, VertexSet side2) {
  Json payload;
  payload["side1"] = json_of(side1);
  payload["side2"] = json_of(side2);
  Json arcs = Json::array();
  for (const Arc& a : matching) arcs.push_back(Json::array({a.tail, a.head}));
  payload["arcs"] = std::move(arcs);
  VertexSet heads;
  for (const Arc& a : matching) heads.add(a.head);
  payload["covers_side2"] = side2.subset_of(heads);
  return {"directed-matching", digraph_fingerprint(d), std::move(payload)};
}

Certificate make_good_path_partition_certificate(const Digraph& d,
                                                 std::span<const VertexSet> classes,
                                                 const PathPartition& p) {
  Json payload;
  payload["classes"] = json_of(classes);
  payload["paths"] = json_of(p);
  return {"good-path-partition", digraph_fingerprint(d), std::move(payload)};
}

Certificate make_orthogonal_pair_certificate(const Digraph& d, VertexSet acyclic_set,
                                             const PathPartition& p) {
  Json payload;
  payload["mode"] = "mas-partition";
  payload["acyclic_set"] = json_of(acyclic_set);
  payload["paths"] = json_of(p);
  return {"orthogonal-pair", digraph_fingerprint(d), std::move(payload)};
}

Certificate make_orthogonal_path_certificate(const Digraph& d, std::span<const VertexSet> classes,
                                             const Path& p) {
  Json payload;
  payload["mode"] = "dicoloring-path";
  payload["classes"] = json_of(classes);
  payload["path"] = json_of(p);
  return {"orthogonal-pair", digraph_fingerprint(d), std::move(payload)};
}

// --- verification ---------------------------------------------------------------------

namespace {

Verdict verify_impl(const Digraph& d, const Certificate& c, const SolverLimit& lim) {
  const int n = d.order();
  const Json& pl = c.payload;
  std::string diag;
  Deadline deadline(lim);

  if (c.kind == "path-partition") {
    const PathPartition paths = paths_from_json(pl.at("paths"), n);
    if (!check_path_partition(d, paths, &diag)) return Verdict::fail(diag);
    if (pl.value("minimum", false) &&
        brute_min_path_partition_size(d, deadline) != static_cast<int>(paths.size()))
      return Verdict::fail("partition is not minimum");
    return Verdict::pass();
  }

  if (c.kind == "dicoloring" || c.kind == "coloring") {
    const auto classes = classes_from_json(pl.at("classes"), n);
    const bool coloring = c.kind == "coloring";
    if (coloring ? !check_coloring(d, classes, &diag) : !check_dicoloring(d, classes, &diag))
      return Verdict::fail(diag);
    if (pl.value("minimum", false)) {
      const int want = coloring ? brute_chromatic_number(d, deadline)
                                : brute_dichromatic_number(d, deadline);
      if (want != static_cast<int>(classes.size()))
        return Verdict::fail("partition into classes is not minimum");
    }
    if (pl.value("greedy", false)) {
      VertexSet remainder = d.vertices();
      for (std::size_t i = 0; i < classes.size(); ++i) {
        if (!classes[i].subset_of(remainder) ||
            brute_max_acyclic_size(d, remainder) != classes[i].size())
          return Verdict::fail("class " + std::to_string(i) +
                               " is not a maximum acyclic set of its remainder");
        remainder = remainder - classes[i];
      }
    }
    return Verdict::pass();
  }

  if (c.kind == "k-pack") {
    const int k = int_field(pl, "k");
    const PathPartition paths = paths_from_json(pl.at("paths"), n);
    if (!check_k_pack(d, paths, k, &diag)) return Verdict::fail(diag);
    int covered = 0;
    for (const Path& p : paths) covered += p.order();
    if (covered != int_field(pl, "covered")) return Verdict::fail("stored coverage is wrong");
    if (pl.value("maximum", false)) {
      if (k != 1) return Verdict::fail("maximum claim is only checkable for k = 1");
      if (covered != brute_longest_path_order(d, deadline))
        return Verdict::fail("pack is not maximum");
    }
    return Verdict::pass();
  }

  if (c.kind == "partial-k-dicoloring") {
    const int k = int_field(pl, "k");
    const auto sets = classes_from_json(pl.at("sets"), n);
    const bool stable = pl.value("stable", false);
    if (!check_partial_k_dicoloring(d, sets, k, stable, &diag)) return Verdict::fail(diag);
    int covered = 0;
    for (const VertexSet& s : sets) covered += s.size();
    if (covered != int_field(pl, "covered")) return Verdict::fail("stored coverage is wrong");
    if (pl.value("maximum", false)) {
      if (k != 1) return Verdict::fail("maximum claim is only checkable for k = 1");
      const int want = stable ? brute_max_stable_size(d, d.vertices())
                              : brute_max_acyclic_size(d, d.vertices());
      if (covered != want) return Verdict::fail("family is not maximum");
    }
    return Verdict::pass();
  }

  if (c.kind == "directed-matching") {
    const VertexSet side1 = vertex_set_from_json(pl.at("side1"), n);
    const VertexSet side2 = vertex_set_from_json(pl.at("side2"), n);
    if (!pl.at("arcs").is_array()) return Verdict::fail("arcs must be an array");
    std::vector<Arc> arcs;
    for (const Json& e : pl.at("arcs")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        return Verdict::fail("matching arcs must be [tail, head] pairs");
      const int tail = e[0].get<int>(), head = e[1].get<int>();
      if (tail < 0 || tail >= n || head < 0 || head >= n)
        return Verdict::fail("matching arc endpoint out of range");
      arcs.push_back(Arc{tail, head});
    }
    const bool cover = pl.value("covers_side2", false);
    if (!check_directed_matching(d, arcs, side1, side2, cover, &diag))
      return Verdict::fail(diag);
    return Verdict::pass();
  }

  if (c.kind == "good-path-partition") {
    const auto classes = classes_from_json(pl.at("classes"), n);
    const PathPartition paths = paths_from_json(pl.at("paths"), n);
    if (!check_good_path_partition(d, classes, paths, /*recheck_greedy=*/true, &diag))
      return Verdict::fail(diag);
    return Verdict::pass();
  }

  if (c.kind == "orthogonal-pair") {
    const std::string mode = pl.value("mode", "");
    if (mode == "mas-partition") {
      const VertexSet set = vertex_set_from_json(pl.at("acyclic_set"), n);
      const PathPartition paths = paths_from_json(pl.at("paths"), n);
      if (!acyclic_by_dfs(d, set)) return Verdict::fail("set induces a directed cycle");
      if (set.size() != brute_max_acyclic_size(d, d.vertices()))
        return Verdict::fail("set is not a maximum induced acyclic set");
      if (!check_path_partition(d, paths, &diag)) return Verdict::fail(diag);
      std::vector<VertexSet> family;
      family.reserve(paths.size());
      for (const Path& p : paths) family.push_back(p.vertex_set());
      if (!check_orthogonal(family, set, &diag)) return Verdict::fail(diag);
      return Verdict::pass();
    }
    if (mode == "dicoloring-path") {
      const auto classes = classes_from_json(pl.at("classes"), n);
      const Path path = path_from_json(pl.at("path"), n);
      if (!check_dicoloring(d, classes, &diag)) return Verdict::fail(diag);
      if (brute_dichromatic_number(d, deadline) != static_cast<int>(classes.size()))
        return Verdict::fail("dicoloring is not minimum");
      if (!path.follows_arcs(d)) return Verdict::fail("path does not follow arcs of D");
      if (!check_orthogonal(classes, path, &diag)) return Verdict::fail(diag);
      return Verdict::pass();
    }
    return Verdict::fail("unknown orthogonal-pair mode '" + mode + "'");
  }

  if (c.kind == "linial-chain") {
    const std::string side = pl.value("side", "");
    const int k = int_field(pl, "k");
    if (k < 1) return Verdict::fail("k must be positive");
    const auto classes = classes_from_json(pl.at("greedy_classes"), n);
    const PathPartition paths = paths_from_json(pl.at("good_paths"), n);
    if (int_field(pl, "t") != static_cast<int>(classes.size()))
      return Verdict::fail("stored t disagrees with the greedy class count");
    const int t = static_cast<int>(classes.size());
    if (!check_good_path_partition(d, classes, paths, /*recheck_greedy=*/true, &diag))
      return Verdict::fail(diag);

    if (side == "primal") {
      const auto partial = classes_from_json(pl.at("partial_sets"), n);
      if (static_cast<int>(partial.size()) != std::min(t, k))
        return Verdict::fail("partial family must hold the first min(t, k) classes");
      for (std::size_t i = 0; i < partial.size(); ++i)
        if (partial[i] != classes[i])
          return Verdict::fail("partial family drifted from the greedy classes");
      if (!check_partial_k_dicoloring(d, partial, k, false, &diag)) return Verdict::fail(diag);

      const int pnorm = k_norm_of_partition(paths, k);
      if (pnorm != int_field(pl, "partition_k_norm"))
        return Verdict::fail("stored partition k-norm is wrong");
      VertexSet union_k;
      for (const VertexSet& s : partial) union_k = union_k | s;
      if (union_k.size() != int_field(pl, "union_first_k"))
        return Verdict::fail("stored union size is wrong");

      const KNormReport pi = pi_k(d, k, lim);
      const KNormReport ap = alpha_prime_k(d, k, lim);
      if (pi.value != int_field(pl, "pi_k")) return Verdict::fail("stored pi_k is wrong");
      if (ap.value != int_field(pl, "alpha_prime_k"))
        return Verdict::fail("stored alpha'_k is wrong");
      if (!(pi.value <= pnorm && pnorm == union_k.size() && union_k.size() <= ap.value))
        return Verdict::fail("primal chain inequalities do not hold");

      if (t > k) {
        int p2 = 0, p1_vertices = 0;
        for (const Path& p : paths) {
          if (p.order() >= k)
            ++p2;
          else
            p1_vertices += p.order();
        }
        if (p2 != int_field(pl, "p2_count") || p1_vertices != int_field(pl, "p1_vertices") ||
            classes[static_cast<std::size_t>(k) - 1].size() != int_field(pl, "sk_size"))
          return Verdict::fail("stored accounting fields are wrong");
        if (p2 != classes[static_cast<std::size_t>(k) - 1].size())
          return Verdict::fail("|P_2| != |S_k|");
        if (pnorm != p1_vertices + k * p2) return Verdict::fail("|P|_k != |V(P_1)| + k|P_2|");
      } else if (ap.value != n) {
        return Verdict::fail("t <= k but alpha'_k != |V|");
      }
      return Verdict::pass();
    }

    if (side == "dual") {
      const PathPartition pack = paths_from_json(pl.at("pack_paths"), n);
      if (!check_k_pack(d, pack, k, &diag)) return Verdict::fail(diag);
      const int snorm = k_norm_of_classes(classes, k);
      if (snorm != int_field(pl, "dicoloring_k_norm"))
        return Verdict::fail("stored dicoloring k-norm is wrong");
      int pack_vertices = 0;
      for (const Path& p : pack) pack_vertices += p.order();
      if (pack_vertices != int_field(pl, "pack_vertices"))
        return Verdict::fail("stored pack coverage is wrong");

      const KNormReport cp = chi_prime_k(d, k, lim);
      const KNormReport lam = lambda_k(d, k, lim);
      if (cp.value != int_field(pl, "chi_prime_k"))
        return Verdict::fail("stored chi'_k is wrong");
      if (lam.value != int_field(pl, "lambda_k")) return Verdict::fail("stored lambda_k is wrong");
      if (!(cp.value <= snorm && pack_vertices <= lam.value))
        return Verdict::fail("dual chain inequalities do not hold");

      if (static_cast<int>(paths.size()) > k) {
        if (static_cast<int>(pack.size()) != k)
          return Verdict::fail("pack must hold exactly k paths when |P| > k");
        int j = 0;
        for (int i = 0; i < t; ++i)
          if (classes[static_cast<std::size_t>(i)].size() > k) j = i + 1;
        if (j != int_field(pl, "j")) return Verdict::fail("stored j is wrong");
        int tail_union = 0;
        for (int i = j; i < t; ++i) tail_union += classes[static_cast<std::size_t>(i)].size();
        if (pack_vertices != k * j + tail_union)
          return Verdict::fail("|V(P')| != kj + |S_{j+1} u ... u S_t|");
        if (snorm != pack_vertices) return Verdict::fail("|S|_k != |V(P')|");
      } else if (lam.value != n) {
        return Verdict::fail("|P| <= k but lambda_k != |V|");
      }
      return Verdict::pass();
    }

    return Verdict::fail("unknown linial-chain side '" + side + "'");
  }

  return Verdict::fail("unknown certificate kind '" + c.kind + "'");
}

}  // namespace

Verdict verify_certificate(const Digraph& d, const Certificate& c, const SolverLimit& lim) {
  if (c.fingerprint != digraph_fingerprint(d))
    return Verdict::fail("fingerprint does not match the digraph");
  try {
    return verify_impl(d, c, lim);
  } catch (const BudgetError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    return Verdict::fail(std::string("malformed payload: ") + e.what());
  } catch (const Error& e) {
    return Verdict::fail(std::string("malformed payload: ") + e.what());
  }
}

}  // namespace diorth
