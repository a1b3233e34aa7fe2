#include "diorth/constructive.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "diorth/knorm.hpp"

namespace diorth {

bool DirectedMatching::covers_side2() const {
  VertexSet heads;
  for (const Arc& a : arcs) heads.add(a.head);
  return side2.subset_of(heads);
}

MatchingOutcome directed_matching_cover(const Digraph& d, VertexSet side1, VertexSet side2) {
  if (!side1.subset_of(d.vertices()) || !side2.subset_of(d.vertices()))
    throw PreconditionError("directed_matching_cover: side outside digraph");
  if (!side1.disjoint_with(side2))
    throw PreconditionError("directed_matching_cover: sides overlap");
  if (!is_acyclic(d, side1) || !is_acyclic(d, side2))
    throw PreconditionError("directed_matching_cover: sides must induce acyclic subdigraphs");

  // Kuhn's augmenting paths on the side1 -> side2 arcs only, trying side-2
  // vertices in ascending order.
  std::array<int, kMaxVertices> match1, match2;
  match1.fill(-1);
  match2.fill(-1);
  const auto preds = [&](int v) { return d.in_neighbors(v) & side1; };

  auto augment = [&](auto&& self, int v, VertexSet& visited) -> bool {
    bool done = false;
    preds(v).for_each([&](int u) {
      if (done || visited.contains(u)) return;
      visited.add(u);
      if (match1[u] < 0 || self(self, match1[u], visited)) {
        match1[u] = v;
        match2[v] = u;
        done = true;
      }
    });
    return done;
  };
  std::vector<int> side2_verts = side2.to_vector();
  for (int v : side2_verts) {
    VertexSet visited;
    augment(augment, v, visited);
  }

  VertexSet unmatched;
  for (int v : side2_verts)
    if (match2[v] < 0) unmatched.add(v);

  if (unmatched.empty()) {
    DirectedMatching m;
    m.side1 = side1;
    m.side2 = side2;
    for (int v : side2_verts)
      if (match2[v] >= 0) m.arcs.push_back(Arc{match2[v], v});
    std::sort(m.arcs.begin(), m.arcs.end());
    return m;
  }

  // Alternating reachability from the uncovered side-2 vertices. Every
  // reached side-1 vertex is matched (the matching is maximum), so
  // |S| exceeds |N(S)| by the number of uncovered starts.
  VertexSet s = unmatched, nbhd;
  for (bool grew = true; grew;) {
    grew = false;
    s.for_each([&](int v) {
      preds(v).for_each([&](int u) {
        if (nbhd.contains(u)) return;
        nbhd.add(u);
        grew = true;
        if (match1[u] >= 0) s.add(match1[u]);
      });
    });
  }
  HallViolator hv;
  hv.witness = s;
  hv.neighborhood = nbhd;
  hv.improved = s | (side1 - nbhd);
  if (s.size() <= nbhd.size()) throw InternalError("Hall violator has no deficiency");
  if (!is_acyclic(d, hv.improved))
    throw InternalError("Hall violator's improved set is not acyclic");
  return hv;
}

GreedyDicoloring greedy_dicoloring(const Digraph& d, const SolverLimit& lim) {
  GreedyDicoloring g;
  VertexSet remainder = d.vertices();
  while (!remainder.empty()) {
    const VertexSet cls = max_induced_acyclic(d, remainder, lim);
    if (!g.classes.empty() && cls.size() > g.classes.back().size())
      throw InternalError("greedy dicoloring produced an increasing class");
    g.classes.push_back(cls);
    remainder = remainder - cls;
  }
  return g;
}

GreedyDicoloring greedy_dicoloring_seeded(const Digraph& d, VertexSet first_class,
                                          const SolverLimit& lim) {
  if (!first_class.subset_of(d.vertices()))
    throw PreconditionError("seed class outside digraph");
  if (!is_acyclic(d, first_class))
    throw PreconditionError("seed class does not induce an acyclic subdigraph");
  if (first_class.size() != max_induced_acyclic(d, lim).size())
    throw PreconditionError("seed class is not a maximum induced acyclic set");
  GreedyDicoloring g;
  g.classes.push_back(first_class);
  VertexSet remainder = d.vertices() - first_class;
  while (!remainder.empty()) {
    const VertexSet cls = max_induced_acyclic(d, remainder, lim);
    if (cls.size() > g.classes.back().size())
      throw InternalError("greedy dicoloring produced an increasing class");
    g.classes.push_back(cls);
    remainder = remainder - cls;
  }
  return g;
}

GoodPathPartition good_path_partition(const Digraph& d, const GreedyDicoloring& g) {
  const int t = g.size();
  std::vector<std::vector<int>> paths;

  // Base: trivial paths on the last class; then extend backwards.
  if (t > 0) g.classes.back().for_each([&](int v) { paths.push_back({v}); });

  for (int i = t - 2; i >= 0; --i) {
    const VertexSet cls = g.classes[static_cast<std::size_t>(i)];
    const VertexSet next = g.classes[static_cast<std::size_t>(i) + 1];

    // Proof bookkeeping: the current initial vertices are exactly the next
    // class, one path each.
    std::array<int, kMaxVertices> path_of_ini;
    path_of_ini.fill(-1);
    int inis_in_next = 0;
    for (std::size_t pi = 0; pi < paths.size(); ++pi) {
      const int front = paths[pi].front();
      if (next.contains(front)) {
        path_of_ini[front] = static_cast<int>(pi);
        ++inis_in_next;
      }
    }
    if (inis_in_next != next.size() || static_cast<int>(paths.size()) != next.size())
      throw InternalError("good path partition: initial vertices drifted from the next class");

    const MatchingOutcome outcome = directed_matching_cover(d, cls, next);
    const DirectedMatching* m = std::get_if<DirectedMatching>(&outcome);
    if (m == nullptr || !m->covers_side2())
      throw InternalError("good path partition: no covering matching; greedy dicoloring invalid");

    VertexSet matched_tails;
    for (const Arc& a : m->arcs) {
      matched_tails.add(a.tail);
      auto& path = paths[static_cast<std::size_t>(path_of_ini[a.head])];
      path.insert(path.begin(), a.tail);
    }
    (cls - matched_tails).for_each([&](int v) { paths.push_back({v}); });
  }

  GoodPathPartition out{g, {}};
  for (auto& seq : paths) out.partition.emplace_back(std::move(seq));
  std::sort(out.partition.begin(), out.partition.end(),
            [](const Path& a, const Path& b) { return a.ini() < b.ini(); });

  std::string diag;
  if (!check_good_path_partition(d, g.classes, out.partition, /*recheck_greedy=*/false, &diag))
    throw InternalError("good path partition failed its own certificate check: " + diag);
  return out;
}

OrthogonalPair orthogonal_partition_to_mas(const Digraph& d, const SolverLimit& lim) {
  return orthogonal_partition_to_mas_seeded(d, max_induced_acyclic(d, lim), lim);
}

OrthogonalPair orthogonal_partition_to_mas_seeded(const Digraph& d, VertexSet mas,
                                                  const SolverLimit& lim) {
  const GreedyDicoloring g = greedy_dicoloring_seeded(d, mas, lim);
  GoodPathPartition gp = good_path_partition(d, g);

  std::vector<VertexSet> family;
  family.reserve(gp.partition.size());
  for (const Path& p : gp.partition) family.push_back(p.vertex_set());
  std::string diag;
  if (!check_orthogonal(family, mas, &diag))
    throw InternalError("constructed partition is not orthogonal to the seed set: " + diag);
  return {mas, std::move(gp.partition)};
}

namespace {

std::array<int, kMaxVertices> class_index_of(const Digraph& d, const Dicoloring& s) {
  std::array<int, kMaxVertices> idx;
  idx.fill(-1);
  VertexSet seen;
  for (std::size_t i = 0; i < s.classes.size(); ++i) {
    if (!s.classes[i].subset_of(d.vertices()) || !s.classes[i].disjoint_with(seen))
      throw PreconditionError("dicoloring classes must be disjoint vertex sets of D");
    if (s.classes[i].empty()) throw PreconditionError("dicoloring classes must be nonempty");
    seen = seen | s.classes[i];
    s.classes[i].for_each([&](int v) { idx[v] = static_cast<int>(i); });
  }
  if (seen != d.vertices()) throw PreconditionError("dicoloring does not cover V(D)");
  for (VertexSet cls : s.classes)
    if (!is_acyclic(d, cls))
      throw PreconditionError("dicoloring class induces a directed cycle");
  return idx;
}

}  // namespace

Path orthogonal_path(const Digraph& d, const Dicoloring& s, const SolverLimit& lim) {
  const auto idx = class_index_of(d, s);
  const int t = s.size();

  // Forward arcs strictly increase the class index, so D' is a DAG no matter
  // what; its longest path has order at most t.
  std::vector<Arc> forward;
  for (const Arc& a : d.arcs())
    if (idx[a.tail] < idx[a.head]) forward.push_back(a);
  const Digraph forward_digraph = Digraph::from_arcs(d.order(), std::move(forward));

  const Path p = longest_path_dag(forward_digraph);
  if (p.order() > t) throw InternalError("forward-arc path longer than the class count");
  if (p.order() == t) {
    for (int i = 0; i < t; ++i)
      if (idx[p.vertices()[static_cast<std::size_t>(i)]] != i)
        throw InternalError("orthogonal path does not advance one class per step");
    return p;
  }

  // No path of order t: mirror the proof's contradiction branch and hand
  // back the smaller dicoloring obtained from a minimum coloring of D'.
  const Dicoloring smaller = min_coloring(forward_digraph, lim);
  if (smaller.size() >= t)
    throw InternalError("contradiction branch failed to shrink the dicoloring");
  for (VertexSet cls : smaller.classes)
    if (!is_acyclic(d, cls))
      throw InternalError("contradiction branch produced a cyclic class");
  throw NonMinimumDicoloringError(smaller);
}

namespace {

void require_chain(bool cond, const char* what) {
  if (!cond) throw InternalError(std::string("linial chain check failed: ") + what);
}

std::pair<GreedyDicoloring, GoodPathPartition> greedy_and_good(const Digraph& d,
                                                               const SolverLimit& lim) {
  GreedyDicoloring g = greedy_dicoloring(d, lim);
  GoodPathPartition gp = good_path_partition(d, g);
  return {std::move(g), std::move(gp)};
}

}  // namespace

Certificate linial_primal_certificate(const Digraph& d, int k, const SolverLimit& lim) {
  if (k < 1) throw PreconditionError("k must be a positive integer");
  auto [g, gp] = greedy_and_good(d, lim);
  const int t = g.size();
  const int n = d.order();

  const int pnorm = k_norm_of_partition(gp.partition, k);
  VertexSet union_k;
  for (int i = 0; i < std::min(t, k); ++i) union_k = union_k | g.classes[static_cast<std::size_t>(i)];
  const std::vector<VertexSet> partial(g.classes.begin(),
                                       g.classes.begin() + std::min(t, k));

  const KNormReport pi = pi_k(d, k, lim);
  const KNormReport alpha_prime = alpha_prime_k(d, k, lim);

  require_chain(pi.value <= pnorm, "pi_k <= |P|_k");
  require_chain(pnorm == union_k.size(), "|P|_k == |S_1 u ... u S_k|");
  require_chain(union_k.size() <= alpha_prime.value, "|S_1 u ... u S_k| <= alpha'_k");

  Json payload;
  payload["side"] = "primal";
  payload["k"] = k;
  payload["t"] = t;
  payload["greedy_classes"] = json_of(g.classes);
  payload["good_paths"] = json_of(gp.partition);
  payload["partial_sets"] = json_of(partial);
  payload["partition_k_norm"] = pnorm;
  payload["union_first_k"] = union_k.size();
  payload["pi_k"] = pi.value;
  payload["alpha_prime_k"] = alpha_prime.value;

  if (t > k) {
    // Proof accounting: paths of order >= k are counted once per S_k vertex,
    // the short paths contribute their full order.
    int p2_count = 0, p1_vertices = 0;
    for (const Path& p : gp.partition) {
      if (p.order() >= k)
        ++p2_count;
      else
        p1_vertices += p.order();
    }
    require_chain(p2_count == g.classes[static_cast<std::size_t>(k) - 1].size(),
                  "|P_2| == |S_k|");
    require_chain(pnorm == p1_vertices + k * p2_count, "|P|_k == |V(P_1)| + k|P_2|");
    payload["p2_count"] = p2_count;
    payload["sk_size"] = g.classes[static_cast<std::size_t>(k) - 1].size();
    payload["p1_vertices"] = p1_vertices;
  } else {
    require_chain(alpha_prime.value == n, "t <= k forces alpha'_k == |V|");
  }

  return Certificate{"linial-chain", digraph_fingerprint(d), std::move(payload)};
}

Certificate linial_dual_certificate(const Digraph& d, int k, const SolverLimit& lim) {
  if (k < 1) throw PreconditionError("k must be a positive integer");
  auto [g, gp] = greedy_and_good(d, lim);
  const int t = g.size();
  const int n = d.order();

  const int snorm = k_norm_of_classes(g.classes, k);
  const KNormReport chi_prime = chi_prime_k(d, k, lim);
  const KNormReport lambda = lambda_k(d, k, lim);
  require_chain(chi_prime.value <= snorm, "chi'_k <= |S|_k");

  Json payload;
  payload["side"] = "dual";
  payload["k"] = k;
  payload["t"] = t;
  payload["greedy_classes"] = json_of(g.classes);
  payload["good_paths"] = json_of(gp.partition);

  PathPartition pack;
  if (static_cast<int>(gp.partition.size()) <= k) {
    pack = gp.partition;
    require_chain(lambda.value == n, "|P| <= k forces lambda_k == |V|");
    require_chain(snorm <= lambda.value, "|S|_k <= lambda_k");
  } else {
    pack = gp.partition;
    std::sort(pack.begin(), pack.end(), [](const Path& a, const Path& b) {
      return a.order() != b.order() ? a.order() > b.order() : a.ini() < b.ini();
    });
    pack.erase(pack.begin() + k, pack.end());

    int j = 0;
    for (int i = 0; i < t; ++i)
      if (g.classes[static_cast<std::size_t>(i)].size() > k) j = i + 1;
    require_chain(j >= 1, "|P| > k forces |S_1| > k");

    int tail_union = 0;
    for (int i = j; i < t; ++i) tail_union += g.classes[static_cast<std::size_t>(i)].size();
    int pack_vertices = 0;
    for (const Path& p : pack) pack_vertices += p.order();

    require_chain(pack_vertices == k * j + tail_union, "|V(P')| == kj + |S_{j+1} u ... u S_t|");
    require_chain(snorm == pack_vertices, "|S|_k == |V(P')|");
    require_chain(pack_vertices <= lambda.value, "|V(P')| <= lambda_k");
    payload["j"] = j;
  }

  int pack_vertices = 0;
  for (const Path& p : pack) pack_vertices += p.order();
  payload["pack_paths"] = json_of(pack);
  payload["dicoloring_k_norm"] = snorm;
  payload["pack_vertices"] = pack_vertices;
  payload["chi_prime_k"] = chi_prime.value;
  payload["lambda_k"] = lambda.value;

  return Certificate{"linial-chain", digraph_fingerprint(d), std::move(payload)};
}

}  // namespace diorth
