#include "diorth/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <ostream>
#include <thread>

#include "diorth/knorm.hpp"
#include "diorth/solvers.hpp"
#include "diorth/subset_tables.hpp"

namespace diorth {

namespace {

template <typename Admissible>
std::vector<VertexSet> all_maximum_subsets(const Digraph& d, Admissible&& admissible) {
  const std::uint64_t full = d.vertices().bits();
  int best = 0;
  for (std::uint64_t s = full;; s = (s - 1) & full) {
    if (std::popcount(s) > best && admissible(VertexSet(s))) best = std::popcount(s);
    if (s == 0) break;
  }
  std::vector<VertexSet> out;
  for (std::uint64_t s = full;; s = (s - 1) & full) {
    if (std::popcount(s) == best && admissible(VertexSet(s))) out.emplace_back(s);
    if (s == 0) break;
  }
  std::sort(out.begin(), out.end(),
            [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
  return out;
}

bool is_stable_set(const Digraph& d, VertexSet s) {
  bool stable = true;
  s.for_each([&](int v) { stable = stable && (d.undirected_neighbors(v) & s).empty(); });
  return stable;
}

// All partitions of V into exactly `t` classes admissible under class_ok,
// assigning vertices in order; a vertex may open a new class only while
// fewer than t exist, which yields each partition exactly once with classes
// in first-appearance order.
template <typename ClassOk>
void enumerate_partitions(const Digraph& d, int t, ClassOk&& class_ok,
                          std::vector<Dicoloring>& out) {
  const int n = d.order();
  std::vector<VertexSet> classes;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      if (static_cast<int>(classes.size()) == t) out.push_back(Dicoloring{classes});
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
    if (static_cast<int>(classes.size()) < t) {
      classes.push_back(VertexSet::single(v));
      self(self, v + 1);
      classes.pop_back();
    }
  };
  rec(rec, 0);
}

template <typename ClassOk>
std::vector<Dicoloring> all_minimum_partitions(const Digraph& d, ClassOk&& class_ok) {
  if (d.order() == 0) return {Dicoloring{}};
  for (int t = 1; t <= d.order(); ++t) {
    std::vector<Dicoloring> found;
    enumerate_partitions(d, t, class_ok, found);
    if (!found.empty()) return found;
  }
  throw InternalError("partition enumeration found nothing");
}

}  // namespace

std::vector<VertexSet> all_maximum_stable_sets(const Digraph& d) {
  return all_maximum_subsets(d, [&](VertexSet s) { return is_stable_set(d, s); });
}

std::vector<VertexSet> all_maximum_acyclic_sets(const Digraph& d) {
  return all_maximum_subsets(d, [&](VertexSet s) { return acyclic_by_dfs(d, s); });
}

std::vector<Dicoloring> all_minimum_colorings(const Digraph& d) {
  return all_minimum_partitions(
      d, [&](VertexSet cls, int v) { return (d.undirected_neighbors(v) & cls).empty(); });
}

std::vector<Dicoloring> all_minimum_dicolorings(const Digraph& d) {
  return all_minimum_partitions(
      d, [&](VertexSet cls, int v) { return acyclic_by_dfs(d, cls.with(v)); });
}

bool exists_orthogonal_partition(const Digraph& d, VertexSet t) {
  const SubsetTables tables = build_subset_tables(d, TableSet::kPaths);
  const std::uint32_t full = static_cast<std::uint32_t>(d.vertices().bits());
  const std::uint32_t tbits = static_cast<std::uint32_t>(t.bits());
  std::vector<std::int8_t> memo(static_cast<std::size_t>(full) + 1, -1);
  auto rec = [&](auto&& self, std::uint32_t mask) -> bool {
    if (mask == 0) return true;
    auto& m = memo[mask];
    if (m >= 0) return m != 0;
    m = 0;
    const std::uint32_t low = mask & (~mask + 1);
    for (std::uint32_t s = mask; s != 0; s = (s - 1) & mask) {
      if (!(s & low) || std::popcount(s & tbits) != 1 || !tables.pathable(s)) continue;
      if (self(self, mask ^ s)) {
        m = 1;
        break;
      }
    }
    return m != 0;
  };
  return rec(rec, full);
}

bool exists_orthogonal_path(const Digraph& d, std::span<const VertexSet> classes) {
  const int t = static_cast<int>(classes.size());
  if (t == 0) return d.order() == 0;
  if (t > 25) throw PreconditionError("exists_orthogonal_path: too many classes");
  std::array<int, kMaxVertices> idx;
  idx.fill(-1);
  for (int i = 0; i < t; ++i)
    classes[static_cast<std::size_t>(i)].for_each([&](int v) { idx[v] = i; });

  const std::uint32_t target = (std::uint32_t{1} << t) - 1;
  // Vertices on a candidate path lie in distinct classes, so (vertex, set of
  // classes used) is a faithful search state.
  std::vector<std::int8_t> memo(static_cast<std::size_t>(d.order()) << t, -1);
  auto at = [&](int v, std::uint32_t used) -> std::int8_t& {
    return memo[(static_cast<std::size_t>(v) << t) + used];
  };
  auto rec = [&](auto&& self, int v, std::uint32_t used) -> bool {
    if (used == target) return true;
    auto& m = at(v, used);
    if (m >= 0) return m != 0;
    m = 0;
    d.out_neighbors(v).for_each([&](int w) {
      if (m != 0 || idx[w] < 0) return;
      const std::uint32_t bit = std::uint32_t{1} << idx[w];
      if ((used & bit) == 0 && self(self, w, used | bit)) m = 1;
    });
    return m != 0;
  };
  for (int v = 0; v < d.order(); ++v) {
    if (idx[v] < 0) continue;
    if (rec(rec, v, std::uint32_t{1} << idx[v])) return true;
  }
  return false;
}

namespace {

void require_odd_cycle_order(int n) {
  if (n < 3 || n > 9 || n % 2 == 0)
    throw PreconditionError("question searches run on odd cycles with 3 <= n <= 9");
}

template <typename PerOrientation>
std::vector<SearchFailure> scan_orientations(int n, PerOrientation&& per) {
  require_odd_cycle_order(n);
  std::vector<SearchFailure> failures;
  const std::uint64_t masks = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < masks; ++mask)
    per(cycle_orientation(n, mask), mask, failures);
  return failures;
}

}  // namespace

std::vector<SearchFailure> search_question1(int n) {
  return scan_orientations(n, [](const Digraph& d, std::uint64_t mask, auto& failures) {
    for (VertexSet t : all_maximum_stable_sets(d))
      if (!exists_orthogonal_partition(d, t)) failures.push_back({mask, json_of(t)});
  });
}

std::vector<SearchFailure> search_question2(int n) {
  return scan_orientations(n, [](const Digraph& d, std::uint64_t mask, auto& failures) {
    for (const Dicoloring& c : all_minimum_colorings(d))
      if (!exists_orthogonal_path(d, c.classes)) failures.push_back({mask, json_of(c.classes)});
  });
}

std::vector<SearchFailure> search_question3(int n) {
  return scan_orientations(n, [](const Digraph& d, std::uint64_t mask, auto& failures) {
    for (VertexSet t : all_maximum_acyclic_sets(d))
      if (!exists_orthogonal_partition(d, t)) failures.push_back({mask, json_of(t)});
  });
}

std::vector<SearchFailure> search_question4(int n) {
  return scan_orientations(n, [](const Digraph& d, std::uint64_t mask, auto& failures) {
    for (const Dicoloring& s : all_minimum_dicolorings(d))
      if (!exists_orthogonal_path(d, s.classes)) failures.push_back({mask, json_of(s.classes)});
  });
}

std::vector<SearchFailure> search_question(int question, int n) {
  switch (question) {
    case 1: return search_question1(n);
    case 2: return search_question2(n);
    case 3: return search_question3(n);
    case 4: return search_question4(n);
    default: throw PreconditionError("question must be 1, 2, 3 or 4");
  }
}

namespace {

class SuiteRecorder {
 public:
  explicit SuiteRecorder(Json& record) : record_(record) {
    record_["checks"] = Json::object();
    record_["diagnostics"] = Json::array();
  }

  void check(const std::string& name, bool ok, const std::string& diag = "") {
    record_["checks"][name] = ok;
    if (!ok) {
      failures_ = true;
      record_["diagnostics"].push_back(name + (diag.empty() ? "" : ": " + diag));
    }
  }

  bool failed() const { return failures_; }

 private:
  Json& record_;
  bool failures_ = false;
};

}  // namespace

Json run_instance_suite(const Digraph& d, const std::string& instance_name,
                        const SuiteOptions& opts) {
  const SolverLimit& lim = opts.limit;
  Json record;
  record["instance"] = instance_name;
  record["n"] = d.order();
  record["arcs"] = d.arc_count();
  record["edge_list"] = to_edge_list(d);
  SuiteRecorder rec(record);

  Json timing = Json::object();
  const auto timed = [&](const char* name, auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    auto result = fn();
    timing[name] =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                              start)
            .count();
    return result;
  };

  // Exact quantities, each with a witness certificate that the independent
  // checker re-derives, optimality claims included.
  const VertexSet alpha_set = timed("alpha", [&] { return max_stable_set(d, lim); });
  const VertexSet mas = timed("alpha_prime", [&] { return max_induced_acyclic(d, lim); });
  const Dicoloring coloring = timed("chi", [&] { return min_coloring(d, lim); });
  const Dicoloring dicoloring = timed("chi_prime", [&] { return min_dicoloring(d, lim); });
  const PathPartition partition = timed("pi", [&] { return min_path_partition(d, lim); });
  const Path lambda_path = timed("lambda", [&] { return longest_path(d, lim); });

  record["quantities"] = {{"alpha", alpha_set.size()},
                          {"alpha_prime", mas.size()},
                          {"chi", coloring.size()},
                          {"chi_prime", dicoloring.size()},
                          {"pi", static_cast<int>(partition.size())},
                          {"lambda", lambda_path.order()}};

  {
    const std::vector<VertexSet> alpha_family{alpha_set};
    const std::vector<VertexSet> mas_family{mas};
    const PathPartition lambda_pack{lambda_path};
    const auto certs = {
        std::pair{"alpha_witness", make_partial_k_dicoloring_certificate(d, alpha_family, 1,
                                                                         /*stable=*/true,
                                                                         /*maximum=*/true)},
        std::pair{"alpha_prime_witness",
                  make_partial_k_dicoloring_certificate(d, mas_family, 1, false, true)},
        std::pair{"chi_witness", make_coloring_certificate(d, coloring.classes, true)},
        std::pair{"chi_prime_witness", make_dicoloring_certificate(d, dicoloring.classes, true)},
        std::pair{"pi_witness", make_path_partition_certificate(d, partition, true)},
        std::pair{"lambda_witness", [&] {
                    Certificate c = make_k_pack_certificate(d, lambda_pack, 1);
                    c.payload["maximum"] = true;
                    return c;
                  }()}};
    for (const auto& [name, cert] : certs) {
      const Verdict v = verify_certificate(d, cert, lim);
      rec.check(name, v.ok, v.diagnostic);
    }
  }

  // The two classical sanity inequalities.
  rec.check("gallai_milgram", static_cast<int>(partition.size()) <= alpha_set.size());
  rec.check("gallai_hasse_roy_vitaver", coloring.size() <= lambda_path.order());

  // Greedy dicoloring and its good path partition.
  const GreedyDicoloring greedy = greedy_dicoloring(d, lim);
  {
    bool monotone = true;
    for (std::size_t i = 1; i < greedy.classes.size(); ++i)
      monotone = monotone && greedy.classes[i - 1].size() >= greedy.classes[i].size();
    rec.check("greedy_sizes_non_increasing", monotone);
    const Verdict v =
        verify_certificate(d, make_dicoloring_certificate(d, greedy.classes, false, true), lim);
    rec.check("greedy_classes_maximum", v.ok, v.diagnostic);
  }
  const GoodPathPartition good = good_path_partition(d, greedy);
  {
    const Verdict v = verify_certificate(
        d, make_good_path_partition_certificate(d, greedy.classes, good.partition), lim);
    rec.check("good_path_partition", v.ok, v.diagnostic);
  }

  // Orthogonal partition for maximum acyclic sets: all of them at small
  // orders, the solver's lexicographic one otherwise.
  {
    bool ok = true;
    std::string diag;
    const std::vector<VertexSet> seeds = d.order() <= opts.full_quantifier_cap
                                             ? all_maximum_acyclic_sets(d)
                                             : std::vector<VertexSet>{mas};
    for (VertexSet seed : seeds) {
      try {
        const OrthogonalPair pair = orthogonal_partition_to_mas_seeded(d, seed, lim);
        const Verdict v = verify_certificate(
            d, make_orthogonal_pair_certificate(d, pair.acyclic_set, pair.partition), lim);
        if (!v.ok) {
          ok = false;
          diag = v.diagnostic;
        }
      } catch (const BudgetError&) {
        throw;
      } catch (const Error& e) {
        ok = false;
        diag = e.what();
      }
      if (!ok) break;
    }
    rec.check("orthogonal_partition_for_every_mas", ok, diag);
  }

  // Orthogonal path for minimum dicolorings, permuted class orders included
  // at tiny sizes.
  {
    bool ok = true;
    std::string diag;
    std::vector<Dicoloring> targets = d.order() <= opts.full_quantifier_cap
                                          ? all_minimum_dicolorings(d)
                                          : std::vector<Dicoloring>{dicoloring};
    const bool permute = d.order() <= opts.permutation_cap;
    for (const Dicoloring& base : targets) {
      std::vector<Dicoloring> orderings{base};
      if (permute) {
        Dicoloring perm = base;
        std::sort(perm.classes.begin(), perm.classes.end(),
                  [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
        orderings.clear();
        do {
          orderings.push_back(perm);
        } while (std::next_permutation(
            perm.classes.begin(), perm.classes.end(),
            [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); }));
      }
      for (const Dicoloring& s : orderings) {
        try {
          const Path p = orthogonal_path(d, s, lim);
          if (p.order() != s.size()) {
            ok = false;
            diag = "path order differs from the class count";
            break;
          }
          const Verdict v =
              verify_certificate(d, make_orthogonal_path_certificate(d, s.classes, p), lim);
          if (!v.ok) {
            ok = false;
            diag = v.diagnostic;
            break;
          }
        } catch (const BudgetError&) {
          throw;
        } catch (const Error& e) {
          ok = false;
          diag = e.what();
          break;
        }
      }
      if (!ok) break;
    }
    rec.check("orthogonal_path_for_every_min_dicoloring", ok, diag);
  }

  // Relaxed Linial chains for every k, verified end to end, plus the k = 1
  // collapses and monotonicity of all six k-parameters.
  {
    const int kmax = opts.kmax > 0 ? opts.kmax : std::max(1, d.order());
    bool chains_ok = true, collapse_ok = true, monotone_ok = true, dominance_ok = true;
    std::string diag;
    int prev[6] = {0, 0, 0, 0, 0, 0};
    for (int k = 1; k <= kmax && chains_ok; ++k) {
      try {
        const Certificate primal = linial_primal_certificate(d, k, lim);
        const Certificate dual = linial_dual_certificate(d, k, lim);
        const Verdict vp = verify_certificate(d, primal, lim);
        const Verdict vd = verify_certificate(d, dual, lim);
        if (!vp.ok || !vd.ok) {
          chains_ok = false;
          diag = vp.ok ? vd.diagnostic : vp.diagnostic;
        }
      } catch (const BudgetError&) {
        throw;
      } catch (const Error& e) {
        chains_ok = false;
        diag = e.what();
      }
      if (!chains_ok) break;

      const int cur[6] = {pi_k(d, k, lim).value,        chi_k(d, k, lim).value,
                          chi_prime_k(d, k, lim).value, alpha_k(d, k, lim).value,
                          alpha_prime_k(d, k, lim).value, lambda_k(d, k, lim).value};
      if (k == 1) {
        collapse_ok = cur[0] == static_cast<int>(partition.size()) &&
                      cur[1] == coloring.size() && cur[2] == dicoloring.size() &&
                      cur[3] == alpha_set.size() && cur[5] == lambda_path.order();
      } else {
        for (int i = 0; i < 6; ++i) monotone_ok = monotone_ok && cur[i] >= prev[i];
      }
      dominance_ok = dominance_ok && cur[4] >= cur[3] && cur[1] >= cur[2];
      std::copy(cur, cur + 6, prev);
    }
    rec.check("linial_chains_all_k", chains_ok, diag);
    rec.check("k1_collapse", collapse_ok);
    rec.check("k_monotonicity", monotone_ok);
    rec.check("k_dominance", dominance_ok);
  }

  record["timing_us"] = std::move(timing);
  record["ok"] = !rec.failed();
  return record;
}

SweepResult sweep_theorems(const std::vector<GeneratorSpec>& instances, const SuiteOptions& opts,
                           int jobs, std::ostream& out) {
  const std::size_t total = instances.size();
  std::vector<Json> records(total);
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= total) return;
      try {
        const Digraph d = generate(instances[i]);
        records[i] = run_instance_suite(d, instances[i].describe(), opts);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  const int threads = std::max(1, jobs);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);

  SweepResult result;
  for (const Json& r : records) {
    ++result.instances;
    if (!r.value("ok", false)) ++result.failures;
    out << r.dump() << '\n';
  }
  return result;
}

}  // namespace diorth
