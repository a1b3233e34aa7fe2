#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "diorth/certificates.hpp"
#include "diorth/constructive.hpp"
#include "diorth/generators.hpp"
#include "diorth/knorm.hpp"
#include "diorth/solvers.hpp"
#include "oracles.hpp"

using namespace diorth;

namespace {

Digraph triangle() { return parse_edge_list("3 3\n0 1\n1 2\n2 0\n"); }

VertexSet vs(std::initializer_list<int> verts) {
  VertexSet s;
  for (int v : verts) s.add(v);
  return s;
}

}  // namespace

TEST_CASE("fingerprints are stable and bind certificates to one digraph") {
  CHECK(digraph_fingerprint(triangle()) == "8ac0758730ed5889");
  CHECK(digraph_fingerprint(triangle()) != digraph_fingerprint(parse_edge_list("3 0\n")));

  Certificate c = make_path_partition_certificate(triangle(), min_path_partition(triangle()));
  CHECK(verify_certificate(triangle(), c).ok);
  const Verdict wrong = verify_certificate(parse_edge_list("3 0\n"), c);
  CHECK_FALSE(wrong.ok);
  CHECK(wrong.diagnostic.find("fingerprint") != std::string::npos);
}

TEST_CASE("serialization round-trips byte for byte") {
  const Certificate c = linial_primal_certificate(triangle(), 2);
  const std::string once = serialize_certificate(c);
  const Certificate back = parse_certificate(once);
  CHECK(serialize_certificate(back) == once);
  CHECK(back.kind == c.kind);
  CHECK_THROWS_AS(parse_certificate("not json"), ParseError);
  CHECK_THROWS_AS(parse_certificate("{\"kind\": \"x\"}"), ParseError);
}

TEST_CASE("check_orthogonal follows the exactly-one definition") {
  const std::vector<VertexSet> family{vs({0, 1}), vs({2})};
  CHECK(check_orthogonal(family, Path({1, 2})));
  const std::vector<VertexSet> one{vs({0, 1})};
  CHECK_FALSE(check_orthogonal(one, vs({0, 1})));
  const std::vector<VertexSet> two{vs({0}), vs({1})};
  CHECK_FALSE(check_orthogonal(two, vs({0})));
  const std::vector<VertexSet> overlapping{vs({0, 1}), vs({1})};
  CHECK_THROWS_AS(check_orthogonal(overlapping, vs({0})), PreconditionError);
}

TEST_CASE("structural checkers accept the valid and reject the invalid") {
  const Digraph tri = triangle();
  CHECK(check_path_partition(tri, {Path({0, 1, 2})}));
  CHECK_FALSE(check_path_partition(tri, {Path({0, 1})}));          // misses 2
  CHECK_FALSE(check_path_partition(tri, {Path({0, 2}), Path({1})}));  // no arc 0->2

  CHECK_FALSE(check_dicoloring(tri, std::vector<VertexSet>{vs({0, 1, 2})}));  // the cycle
  CHECK(check_dicoloring(tri, std::vector<VertexSet>{vs({0, 1}), vs({2})}));
  CHECK(check_partial_k_dicoloring(tri, std::vector<VertexSet>{vs({0}), vs({1})}, 2));
  CHECK_FALSE(check_partial_k_dicoloring(tri, std::vector<VertexSet>{vs({0}), vs({1})}, 1));

  CHECK(check_k_pack(tri, {Path({0, 1})}, 1));
  CHECK_FALSE(check_k_pack(tri, {Path({0, 1}), Path({2})}, 1));

  std::string diag;
  CHECK_FALSE(check_coloring(tri, std::vector<VertexSet>{vs({0, 1}), vs({2})}, &diag));
  CHECK(diag.find("stable") != std::string::npos);
}

TEST_CASE("check_good_path_partition enforces positional membership") {
  const Digraph tri = triangle();
  const std::vector<VertexSet> classes{vs({0, 1}), vs({2})};
  CHECK(check_good_path_partition(tri, classes, {Path({1, 2}), Path({0})}));
  // (0,1) puts vertex 1 at position 2, but S_2 = {2}.
  std::string diag;
  CHECK_FALSE(check_good_path_partition(tri, classes, {Path({0, 1}), Path({2})}, true, &diag));
  CHECK(diag.find("position") != std::string::npos);
  // t = 1: all trivial paths.
  const Digraph arcless = parse_edge_list("3 0\n");
  CHECK(check_good_path_partition(arcless, std::vector<VertexSet>{vs({0, 1, 2})},
                                  {Path({0}), Path({1}), Path({2})}));
}

TEST_CASE("acyclic_by_dfs is an independent route that agrees everywhere (n <= 4)") {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t total = arc_index_count(n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const Digraph d = digraph_from_arc_index(n, idx);
      REQUIRE(acyclic_by_dfs(d, d.vertices()) == oracles::is_acyclic(d));
      REQUIRE(acyclic_by_dfs(d, d.vertices()) == is_acyclic(d));
    }
  }
}

TEST_CASE("brute optimality primitives agree with the oracles on random instances") {
  SolverLimit lim;
  Deadline deadline(lim);
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Digraph d = gnp_digraph(6, 0.4, 8800 + seed);
    CHECK(brute_max_acyclic_size(d, d.vertices()) == oracles::max_acyclic_size(d, d.vertices()));
    CHECK(brute_max_stable_size(d, d.vertices()) == oracles::max_stable_size(d, d.vertices()));
    CHECK(brute_dichromatic_number(d, deadline) == oracles::chi_prime(d, d.vertices()));
    CHECK(brute_chromatic_number(d, deadline) == oracles::chi(d, d.vertices()));
    CHECK(brute_min_path_partition_size(d, deadline) == oracles::pi(d, d.vertices()));
    CHECK(brute_longest_path_order(d, deadline) == oracles::longest_path_order(d));
  }
}

TEST_CASE("every constructor output verifies (corpus round trip)") {
  auto exercise = [](const Digraph& d) {
    const VertexSet alpha_set = max_stable_set(d);
    const VertexSet mas = max_induced_acyclic(d);
    const Dicoloring coloring = min_coloring(d);
    const Dicoloring dicoloring = min_dicoloring(d);
    const PathPartition partition = min_path_partition(d);
    const GreedyDicoloring g = greedy_dicoloring(d);
    const GoodPathPartition gp = good_path_partition(d, g);
    const OrthogonalPair pair = orthogonal_partition_to_mas(d);
    const Path opath = orthogonal_path(d, dicoloring);

    const std::vector<VertexSet> alpha_family{alpha_set}, mas_family{mas};
    REQUIRE(verify_certificate(
        d, make_partial_k_dicoloring_certificate(d, alpha_family, 1, true, true)).ok);
    REQUIRE(verify_certificate(
        d, make_partial_k_dicoloring_certificate(d, mas_family, 1, false, true)).ok);
    REQUIRE(verify_certificate(d, make_coloring_certificate(d, coloring.classes, true)).ok);
    REQUIRE(verify_certificate(d, make_dicoloring_certificate(d, dicoloring.classes, true)).ok);
    REQUIRE(verify_certificate(d, make_path_partition_certificate(d, partition, true)).ok);
    REQUIRE(verify_certificate(d, make_dicoloring_certificate(d, g.classes, false, true)).ok);
    REQUIRE(verify_certificate(
        d, make_good_path_partition_certificate(d, g.classes, gp.partition)).ok);
    REQUIRE(verify_certificate(
        d, make_orthogonal_pair_certificate(d, pair.acyclic_set, pair.partition)).ok);
    REQUIRE(verify_certificate(
        d, make_orthogonal_path_certificate(d, dicoloring.classes, opath)).ok);
    for (int k = 1; k <= std::min(3, d.order()); ++k) {
      REQUIRE(verify_certificate(d, linial_primal_certificate(d, k)).ok);
      REQUIRE(verify_certificate(d, linial_dual_certificate(d, k)).ok);
    }
  };
  for (std::uint64_t idx = 0; idx < 64; ++idx) exercise(digraph_from_arc_index(3, idx));
  for (std::uint64_t seed = 0; seed < 8; ++seed) exercise(gnp_digraph(6, 0.45, 2200 + seed));
}

TEST_CASE("tampering with any certificate is detected") {
  const Digraph tri = triangle();

  // Non-minimum partition claiming minimality.
  Certificate pp = make_path_partition_certificate(tri, min_path_partition(tri), true);
  pp.payload["paths"] = Json::array({Json::array({0, 1}), Json::array({2})});
  CHECK_FALSE(verify_certificate(tri, pp).ok);

  // Dropped vertex breaks coverage.
  Certificate pp2 = make_path_partition_certificate(tri, min_path_partition(tri));
  pp2.payload["paths"][0].erase(2);
  CHECK_FALSE(verify_certificate(tri, pp2).ok);

  // Reversed path no longer follows arcs.
  Certificate pp3 = make_path_partition_certificate(tri, min_path_partition(tri));
  pp3.payload["paths"][0] = Json::array({2, 1, 0});
  CHECK_FALSE(verify_certificate(tri, pp3).ok);

  // Flipped fingerprint nibble.
  Certificate pp4 = make_path_partition_certificate(tri, min_path_partition(tri));
  pp4.fingerprint[0] = pp4.fingerprint[0] == '0' ? '1' : '0';
  CHECK_FALSE(verify_certificate(tri, pp4).ok);

  // Unknown kind.
  Certificate pp5 = make_path_partition_certificate(tri, min_path_partition(tri));
  pp5.kind = "mystery";
  const Verdict v = verify_certificate(tri, pp5);
  CHECK_FALSE(v.ok);
  CHECK(v.diagnostic.find("unknown") != std::string::npos);

  // Linial chain with a nudged oracle value.
  Certificate lc = linial_primal_certificate(tri, 1);
  lc.payload["pi_k"] = lc.payload["pi_k"].get<int>() + 1;
  CHECK_FALSE(verify_certificate(tri, lc).ok);

  // Malformed payload: duplicate vertex inside a path.
  Certificate pp6 = make_path_partition_certificate(tri, min_path_partition(tri));
  pp6.payload["paths"][0] = Json::array({0, 0, 1});
  const Verdict vm = verify_certificate(tri, pp6);
  CHECK_FALSE(vm.ok);
}
