#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "diorth/certificates.hpp"
#include "diorth/constructive.hpp"
#include "diorth/generators.hpp"

namespace diorth {

// Enumeration-based oracles. These deliberately avoid the exact solvers so
// the sweep can play them against the constructive algorithms.
std::vector<VertexSet> all_maximum_stable_sets(const Digraph& d);
std::vector<VertexSet> all_maximum_acyclic_sets(const Digraph& d);
// Every partition of V into chi / chi' stable / acyclic classes, classes in
// first-appearance order (so each partition shows up exactly once).
std::vector<Dicoloring> all_minimum_colorings(const Digraph& d);
std::vector<Dicoloring> all_minimum_dicolorings(const Digraph& d);

// Brute-force existence of a path partition orthogonal to T (every path
// holds exactly one T vertex): recursive block enumeration with memoization.
bool exists_orthogonal_partition(const Digraph& d, VertexSet t);

// Brute-force existence of a path orthogonal to the given classes.
bool exists_orthogonal_path(const Digraph& d, std::span<const VertexSet> classes);

struct SearchFailure {
  std::uint64_t mask = 0;  // orientation mask of the odd cycle
  Json family;             // the optimal object admitting no orthogonal witness
};

// Berge's Questions over every orientation of the odd cycle C_n (n odd,
// 3 <= n <= 9). Question 1: maximum stable sets vs orthogonal path
// partitions; Question 2: minimum colorings vs orthogonal paths; Questions
// 3/4 are the induced-acyclic / dicoloring analogues, whose failure lists the
// theorems force to be empty.
std::vector<SearchFailure> search_question1(int n);
std::vector<SearchFailure> search_question2(int n);
std::vector<SearchFailure> search_question3(int n);
std::vector<SearchFailure> search_question4(int n);
std::vector<SearchFailure> search_question(int question, int n);

struct SuiteOptions {
  SolverLimit limit;
  // 0 means all k in 1..n for the Linial chains.
  int kmax = 0;
  // Up to this order, quantify over ALL maximum acyclic sets and ALL minimum
  // dicolorings when testing orthogonal witnesses; larger instances use the
  // solver's lexicographic witness only.
  int full_quantifier_cap = 6;
  // Up to this order, additionally try every class ordering of each minimum
  // dicoloring.
  int permutation_cap = 4;
};

// Runs the whole theorem suite on one instance and returns a JSON record:
// quantities, per-check booleans, diagnostics for anything that failed, and
// the canonical edge list for reproduction. record["ok"] is the verdict.
Json run_instance_suite(const Digraph& d, const std::string& instance_name,
                        const SuiteOptions& opts = {});

struct SweepResult {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
};

// Instance-parallel sweep: `jobs` workers pull instances off one queue and a
// single writer emits one JSON record per line, in input order.
SweepResult sweep_theorems(const std::vector<GeneratorSpec>& instances, const SuiteOptions& opts,
                           int jobs, std::ostream& out);

}  // namespace diorth
