#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "diorth/certificates.hpp"
#include "diorth/generators.hpp"
#include "oracles.hpp"

using namespace diorth;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(DIORTH_TEST_DIR) + "/golden/" + name);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("gnp boundary probabilities") {
  CHECK(gnp_digraph(5, 0.0, 1).arc_count() == 0);
  CHECK(gnp_digraph(5, 1.0, 1).arc_count() == 5 * 4);
  CHECK_THROWS_AS(gnp_digraph(5, 1.5, 1), PreconditionError);
  CHECK_THROWS_AS(gnp_digraph(0, 0.5, 1), PreconditionError);
}

TEST_CASE("generators are deterministic and the pinned instances still match") {
  CHECK(gnp_digraph(9, 0.37, 123) == gnp_digraph(9, 0.37, 123));
  CHECK(random_tournament(9, 5) == random_tournament(9, 5));
  CHECK(to_edge_list(gnp_digraph(5, 0.5, 42)) == golden("gnp_n5_p05_seed42.edges"));
  CHECK(to_edge_list(random_tournament(6, 7)) == golden("tournament_n6_seed7.edges"));
}

TEST_CASE("tournaments have exactly one arc per pair") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Digraph t = random_tournament(7, seed);
    CHECK(t.arc_count() == 21);
    for (int u = 0; u < 7; ++u)
      for (int v = u + 1; v < 7; ++v)
        CHECK((t.has_arc(u, v) != t.has_arc(v, u)));
  }
  // n = 3 is either transitive or a directed triangle.
  bool seen_cycle = false, seen_transitive = false;
  for (std::uint64_t seed = 0; seed < 32; ++seed) {
    const Digraph t = random_tournament(3, seed);
    (oracles::is_acyclic(t) ? seen_transitive : seen_cycle) = true;
  }
  CHECK(seen_cycle);
  CHECK(seen_transitive);
}

TEST_CASE("cycle orientations cover all masks with n arcs and a connected cycle underneath") {
  CHECK(to_edge_list(cycle_orientation(5, 0)) == "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  std::set<std::string> seen;
  for (std::uint64_t mask = 0; mask < 32; ++mask) {
    const Digraph d = cycle_orientation(5, mask);
    CHECK(d.arc_count() == 5);
    CHECK(underlying_edges(d).size() == 5);
    seen.insert(digraph_fingerprint(d));
  }
  // Reversing all five edges gives the same arc set only for... never: all
  // 32 orientations are distinct labeled digraphs.
  CHECK(seen.size() == 32);
  // Alternating mask on an even cycle alternates sources and sinks.
  const Digraph anti = cycle_orientation(4, 0b0101);
  for (int v = 0; v < 4; ++v)
    CHECK((anti.out_neighbors(v).empty() || anti.in_neighbors(v).empty()));
  CHECK_THROWS_AS(cycle_orientation(2, 0), PreconditionError);
  CHECK_THROWS_AS(cycle_orientation(4, 16), PreconditionError);
}

TEST_CASE("all_digraphs enumerates every labeled digraph exactly once") {
  CHECK(AllDigraphs(1).count() == 1);
  AllDigraphs two(2);
  CHECK(two.count() == 4);
  std::vector<int> arc_counts;
  std::set<std::string> fingerprints;
  while (!two.done()) {
    const Digraph d = two.next();
    arc_counts.push_back(d.arc_count());
    fingerprints.insert(digraph_fingerprint(d));
  }
  CHECK(arc_counts == std::vector<int>{0, 1, 1, 2});
  CHECK(fingerprints.size() == 4);

  AllDigraphs three(3);
  CHECK(three.count() == 64);
  std::set<std::string> fp3;
  while (!three.done()) fp3.insert(digraph_fingerprint(three.next()));
  CHECK(fp3.size() == 64);

  CHECK_THROWS_AS(AllDigraphs(5), PreconditionError);
  CHECK_THROWS_AS(digraph_from_arc_index(2, 4), PreconditionError);
}

TEST_CASE("generate dispatches on the model name") {
  CHECK(generate({"gnp", 5, 0.5, 42, 0}) == gnp_digraph(5, 0.5, 42));
  CHECK(generate({"tournament", 6, 0.0, 7, 0}) == random_tournament(6, 7));
  CHECK(generate({"cycle-orientation", 5, 0.0, 0, 3}) == cycle_orientation(5, 3));
  CHECK(generate({"all-digraphs", 3, 0.0, 0, 17}) == digraph_from_arc_index(3, 17));
  CHECK_THROWS_AS(generate({"erdos", 3, 0.0, 0, 0}), PreconditionError);
  CHECK(GeneratorSpec{"gnp", 5, 0.5, 42, 0}.describe() == "gnp(n=5, p=0.5, seed=42)");
}
