#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "diorth/harness.hpp"
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

Json golden_json(const std::string& name) {
  std::ifstream in(std::string(DIORTH_TEST_DIR) + "/golden/" + name);
  REQUIRE(in.good());
  return Json::parse(in);
}

}  // namespace

TEST_CASE("enumerators list every optimal object") {
  const Digraph c5 = cycle_orientation(5, 0);
  CHECK(all_maximum_stable_sets(c5).size() == 5);  // five stable pairs on C5
  for (VertexSet s : all_maximum_stable_sets(c5)) CHECK(s.size() == 2);

  // The directed C5's maximum acyclic sets are the five 4-subsets.
  const auto mas_list = all_maximum_acyclic_sets(c5);
  CHECK(mas_list.size() == 5);
  for (VertexSet s : mas_list) CHECK(s.size() == 4);

  // Odd cycle: 3-colorings as partitions.
  const auto colorings = all_minimum_colorings(c5);
  CHECK(!colorings.empty());
  for (const Dicoloring& c : colorings) {
    CHECK(c.size() == 3);
    for (VertexSet cls : c.classes) CHECK(oracles::is_stable(c5, cls));
  }

  const auto dicolorings = all_minimum_dicolorings(triangle());
  CHECK(dicolorings.size() == 3);  // {01|2}, {02|1}, {0|12}
  for (const Dicoloring& s : dicolorings) CHECK(s.size() == 2);
}

TEST_CASE("orthogonal-partition existence oracle") {
  const Digraph tri = triangle();
  CHECK(exists_orthogonal_partition(tri, vs({0, 1})));
  CHECK(exists_orthogonal_partition(tri, vs({2})));      // one Hamiltonian path
  CHECK(exists_orthogonal_partition(tri, tri.vertices()));  // trivial paths
  // Arcless: only the all-trivial partition exists, so T must be everything.
  const Digraph arcless = parse_edge_list("3 0\n");
  CHECK(exists_orthogonal_partition(arcless, arcless.vertices()));
  CHECK_FALSE(exists_orthogonal_partition(arcless, vs({0})));
}

TEST_CASE("orthogonal-path existence oracle") {
  const Digraph tri = triangle();
  CHECK(exists_orthogonal_path(tri, std::vector<VertexSet>{vs({0, 1}), vs({2})}));
  CHECK(exists_orthogonal_path(tri, std::vector<VertexSet>{vs({0, 2}), vs({1})}));
  const Digraph arcless = parse_edge_list("2 0\n");
  CHECK_FALSE(exists_orthogonal_path(arcless, std::vector<VertexSet>{vs({0}), vs({1})}));
  CHECK(exists_orthogonal_path(arcless, std::vector<VertexSet>{vs({0, 1})}));
}

TEST_CASE("question searches reproduce the pinned C5 results") {
  const auto q1 = search_question1(5);
  const auto q2 = search_question2(5);
  const auto q3 = search_question3(5);
  const auto q4 = search_question4(5);
  CHECK_FALSE(q1.empty());
  CHECK_FALSE(q2.empty());
  CHECK(q3.empty());
  CHECK(q4.empty());

  // Failure families for Question 1 are maximum stable sets of size alpha(C5) = 2.
  for (const SearchFailure& f : q1) CHECK(f.family.size() == 2);

  const Json golden1 = golden_json("berge_q1_n5.json");
  std::set<std::uint64_t> masks, golden_masks;
  for (const SearchFailure& f : q1) masks.insert(f.mask);
  for (const Json& f : golden1.at("failures")) golden_masks.insert(f.at("mask").get<std::uint64_t>());
  CHECK(masks == golden_masks);
  CHECK(q2.size() == golden_json("berge_q2_n5.json").at("failures").size());
}

TEST_CASE("question searches are empty on the oriented triangle (golden n = 3)") {
  CHECK(search_question1(3).empty());
  CHECK(search_question2(3).empty());
  CHECK(search_question3(3).empty());
  CHECK(search_question4(3).empty());
}

TEST_CASE("question searches validate their input") {
  CHECK_THROWS_AS(search_question1(4), PreconditionError);   // even
  CHECK_THROWS_AS(search_question2(11), PreconditionError);  // too big
  CHECK_THROWS_AS(search_question(5, 5), PreconditionError);
}

TEST_CASE("run_instance_suite produces a clean record on known instances") {
  const Json record = run_instance_suite(triangle(), "triangle");
  CHECK(record.at("ok") == true);
  CHECK(record.at("quantities").at("alpha") == 1);
  CHECK(record.at("quantities").at("lambda") == 3);
  CHECK(record.at("checks").at("gallai_milgram") == true);
  CHECK(record.at("checks").at("linial_chains_all_k") == true);
  CHECK(record.at("diagnostics").empty());

  const Json digon = run_instance_suite(parse_edge_list("2 2\n0 1\n1 0\n"), "digon");
  CHECK(digon.at("ok") == true);
  CHECK(digon.at("quantities").at("pi") == 1);
  CHECK(digon.at("quantities").at("lambda") == 2);
}

TEST_CASE("sweep runs instance-parallel and deterministically") {
  std::vector<GeneratorSpec> instances;
  for (std::uint64_t mask = 0; mask < 32; ++mask)
    instances.push_back({"cycle-orientation", 5, 0.0, 0, mask});

  std::ostringstream first, second;
  const SweepResult r1 = sweep_theorems(instances, {}, 2, first);
  const SweepResult r2 = sweep_theorems(instances, {}, 1, second);
  CHECK(r1.instances == 32);
  CHECK(r1.failures == 0);
  CHECK(r2.failures == 0);

  // Records are deterministic apart from the wall-clock timing field.
  auto strip_timing = [](const std::string& ldjson) {
    std::istringstream lines(ldjson);
    std::string line;
    std::vector<Json> records;
    while (std::getline(lines, line)) {
      Json record = Json::parse(line);
      CHECK(record.at("ok") == true);
      CHECK(record.contains("timing_us"));
      record.erase("timing_us");
      records.push_back(std::move(record));
    }
    return records;
  };
  const auto a = strip_timing(first.str());
  const auto b = strip_timing(second.str());
  CHECK(a.size() == 32);
  CHECK(a == b);
}
