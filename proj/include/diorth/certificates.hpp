#pragma once

#include <span>
#include <string>

#include "json.hpp"

#include "diorth/digraph.hpp"
#include "diorth/solvers.hpp"

namespace diorth {

using Json = nlohmann::ordered_json;

// A serialized witness: a kind tag, a fingerprint binding it to one digraph,
// and a kind-specific payload. Keys keep a fixed order so serialization is
// byte-stable; the JSON schema is documented in the README.
struct Certificate {
  std::string kind;
  std::string fingerprint;
  Json payload;
};

// FNV-1a over the canonical edge list, as 16 hex digits.
std::string digraph_fingerprint(const Digraph& d);

std::string serialize_certificate(const Certificate& c);
Certificate parse_certificate(const std::string& text);  // throws ParseError

struct Verdict {
  bool ok = false;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
  static Verdict pass() { return {true, ""}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
};

// --- structural checkers ----------------------------------------------------
//
// These re-derive every property from scratch (separate cycle detection,
// enumeration-based maximality) and share no code with the solvers or the
// constructive algorithms, so a constructor bug cannot self-certify.
// Each returns false with a first-failure diagnostic in *diag.

// Every family member contains exactly one vertex of q. Throws
// PreconditionError if the family members overlap.
bool check_orthogonal(std::span<const VertexSet> family, VertexSet q, std::string* diag = nullptr);
bool check_orthogonal(std::span<const VertexSet> family, const Path& q, std::string* diag = nullptr);

bool check_path_partition(const Digraph& d, const PathPartition& p, std::string* diag = nullptr);
bool check_dicoloring(const Digraph& d, std::span<const VertexSet> classes,
                      std::string* diag = nullptr);
bool check_coloring(const Digraph& d, std::span<const VertexSet> classes,
                    std::string* diag = nullptr);
bool check_k_pack(const Digraph& d, const PathPartition& paths, int k, std::string* diag = nullptr);
bool check_partial_k_dicoloring(const Digraph& d, std::span<const VertexSet> sets, int k,
                                bool require_stable = false, std::string* diag = nullptr);
bool check_directed_matching(const Digraph& d, std::span<const Arc> matching, VertexSet side1,
                             VertexSet side2, bool require_cover_side2,
                             std::string* diag = nullptr);
// Positional membership: the i-th vertex of every path lies in classes[i-1].
// With recheck_greedy, also re-derives that each class is a maximum induced
// acyclic set of the remaining digraph.
bool check_good_path_partition(const Digraph& d, std::span<const VertexSet> classes,
                               const PathPartition& p, bool recheck_greedy = true,
                               std::string* diag = nullptr);

// --- independent primitives (used by the checkers, exposed for tests) -------

// Cycle detection by three-color DFS; deliberately a different algorithm
// from is_acyclic's in-degree elimination.
bool acyclic_by_dfs(const Digraph& d, VertexSet s);

int brute_max_acyclic_size(const Digraph& d, VertexSet region);
int brute_max_stable_size(const Digraph& d, VertexSet region);
int brute_dichromatic_number(const Digraph& d, Deadline& deadline);
int brute_chromatic_number(const Digraph& d, Deadline& deadline);
int brute_min_path_partition_size(const Digraph& d, Deadline& deadline);
int brute_longest_path_order(const Digraph& d, Deadline& deadline);

// --- builders ----------------------------------------------------------------

Json json_of(VertexSet s);
Json json_of(const Path& p);
Json json_of(std::span<const VertexSet> sets);
Json json_of(const PathPartition& paths);

Certificate make_path_partition_certificate(const Digraph& d, const PathPartition& p,
                                            bool minimum = false);
Certificate make_dicoloring_certificate(const Digraph& d, std::span<const VertexSet> classes,
                                        bool minimum = false, bool greedy = false);
Certificate make_coloring_certificate(const Digraph& d, std::span<const VertexSet> classes,
                                      bool minimum = false);
Certificate make_k_pack_certificate(const Digraph& d, const PathPartition& paths, int k);
Certificate make_partial_k_dicoloring_certificate(const Digraph& d,
                                                  std::span<const VertexSet> sets, int k,
                                                  bool stable = false, bool maximum = false);
Certificate make_directed_matching_certificate(const Digraph& d, std::span<const Arc> matching,
                                               VertexSet side1, VertexSet side2);
Certificate make_good_path_partition_certificate(const Digraph& d,
                                                 std::span<const VertexSet> classes,
                                                 const PathPartition& p);
Certificate make_orthogonal_pair_certificate(const Digraph& d, VertexSet acyclic_set,
                                             const PathPartition& p);
Certificate make_orthogonal_path_certificate(const Digraph& d, std::span<const VertexSet> classes,
                                             const Path& p);

// --- verification -------------------------------------------------------------

// Dispatches on kind. Optimality claims ("minimum"/"maximum"/"greedy") are
// re-derived by enumeration; linial-chain certificates additionally have both
// inequality ends recomputed by the k-norm oracles. The limit bounds that
// oracle work (BudgetError on overrun).
Verdict verify_certificate(const Digraph& d, const Certificate& c, const SolverLimit& lim = {});

}  // namespace diorth
