// diorth: exact digraph orthogonality toolkit.
//
// Subcommands: analyze, greedy-dicolor, good-partition, orthogonal-path,
// linial, search, sweep, verify, gen, export-dot.
// Exit codes: 0 success, 1 usage/parse error, 2 budget exceeded,
// 3 verification failure (a failed verdict or a violated invariant).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "diorth/certificates.hpp"
#include "diorth/constructive.hpp"
#include "diorth/generators.hpp"
#include "diorth/harness.hpp"
#include "diorth/knorm.hpp"
#include "diorth/solvers.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerification = 3;

diorth::Digraph read_digraph(const std::string& path) {
  if (path == "-") return diorth::parse_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) throw diorth::PreconditionError("cannot open '" + path + "'");
  return diorth::parse_edge_list(in);
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw diorth::PreconditionError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

diorth::SolverLimit limit_from_env() {
  diorth::SolverLimit lim;
  if (const char* budget = std::getenv("DIORTH_TIME_BUDGET"); budget != nullptr)
    lim.time_budget = std::atof(budget);
  return lim;
}

void emit(const diorth::Json& j) { std::cout << j.dump(2) << '\n'; }

int run_analyze(const std::string& input, const diorth::SolverLimit& lim) {
  using namespace diorth;
  const Digraph d = read_digraph(input);

  const VertexSet alpha_set = max_stable_set(d, lim);
  const VertexSet mas = max_induced_acyclic(d, lim);
  const Dicoloring coloring = min_coloring(d, lim);
  const Dicoloring dicoloring = min_dicoloring(d, lim);
  const PathPartition partition = min_path_partition(d, lim);
  const Path lp = longest_path(d, lim);

  const std::vector<VertexSet> alpha_family{alpha_set};
  const std::vector<VertexSet> mas_family{mas};
  Certificate lambda_cert = make_k_pack_certificate(d, PathPartition{lp}, 1);
  lambda_cert.payload["maximum"] = true;

  Json out;
  out["fingerprint"] = digraph_fingerprint(d);
  out["n"] = d.order();
  out["arcs"] = d.arc_count();
  out["quantities"] = {{"alpha", alpha_set.size()},       {"alpha_prime", mas.size()},
                       {"chi", coloring.size()},          {"chi_prime", dicoloring.size()},
                       {"pi", (int)partition.size()},     {"lambda", lp.order()}};
  Json witnesses;
  witnesses["alpha"] = Json::parse(serialize_certificate(
      make_partial_k_dicoloring_certificate(d, alpha_family, 1, true, true)));
  witnesses["alpha_prime"] = Json::parse(
      serialize_certificate(make_partial_k_dicoloring_certificate(d, mas_family, 1, false, true)));
  witnesses["chi"] =
      Json::parse(serialize_certificate(make_coloring_certificate(d, coloring.classes, true)));
  witnesses["chi_prime"] =
      Json::parse(serialize_certificate(make_dicoloring_certificate(d, dicoloring.classes, true)));
  witnesses["pi"] =
      Json::parse(serialize_certificate(make_path_partition_certificate(d, partition, true)));
  witnesses["lambda"] = Json::parse(serialize_certificate(lambda_cert));
  out["witnesses"] = std::move(witnesses);
  emit(out);
  return kExitOk;
}

int run_greedy_dicolor(const std::string& input, const diorth::SolverLimit& lim) {
  using namespace diorth;
  const Digraph d = read_digraph(input);
  const GreedyDicoloring g = greedy_dicoloring(d, lim);
  const Certificate cert = make_dicoloring_certificate(d, g.classes, false, true);
  const Verdict v = verify_certificate(d, cert, lim);
  std::cout << serialize_certificate(cert);
  if (!v.ok) {
    std::cerr << "verification failed: " << v.diagnostic << '\n';
    return kExitVerification;
  }
  return kExitOk;
}

int run_good_partition(const std::string& input, const diorth::SolverLimit& lim) {
  using namespace diorth;
  const Digraph d = read_digraph(input);
  const GoodPathPartition gp = good_path_partition(d, greedy_dicoloring(d, lim));
  const Certificate cert =
      make_good_path_partition_certificate(d, gp.dicoloring.classes, gp.partition);
  const Verdict v = verify_certificate(d, cert, lim);
  std::cout << serialize_certificate(cert);
  if (!v.ok) {
    std::cerr << "verification failed: " << v.diagnostic << '\n';
    return kExitVerification;
  }
  return kExitOk;
}

int run_orthogonal_path(const std::string& input, const diorth::SolverLimit& lim) {
  using namespace diorth;
  const Digraph d = read_digraph(input);
  const Dicoloring s = min_dicoloring(d, lim);
  const Path p = orthogonal_path(d, s, lim);
  const Certificate cert = make_orthogonal_path_certificate(d, s.classes, p);
  const Verdict v = verify_certificate(d, cert, lim);
  std::cout << serialize_certificate(cert);
  if (!v.ok) {
    std::cerr << "verification failed: " << v.diagnostic << '\n';
    return kExitVerification;
  }
  return kExitOk;
}

int run_linial(const std::string& input, int k, const diorth::SolverLimit& lim) {
  using namespace diorth;
  const Digraph d = read_digraph(input);
  const Certificate primal = linial_primal_certificate(d, k, lim);
  const Certificate dual = linial_dual_certificate(d, k, lim);
  const Verdict vp = verify_certificate(d, primal, lim);
  const Verdict vd = verify_certificate(d, dual, lim);
  Json out;
  out["primal"] = Json::parse(serialize_certificate(primal));
  out["dual"] = Json::parse(serialize_certificate(dual));
  emit(out);
  if (!vp.ok || !vd.ok) {
    std::cerr << "verification failed: " << (vp.ok ? vd.diagnostic : vp.diagnostic) << '\n';
    return kExitVerification;
  }
  return kExitOk;
}

int run_search(int question, int n) {
  using namespace diorth;
  const auto failures = search_question(question, n);
  Json out;
  out["question"] = question;
  out["n"] = n;
  out["orientations"] = static_cast<std::uint64_t>(1) << n;
  Json list = Json::array();
  for (const SearchFailure& f : failures) {
    Json e;
    e["mask"] = f.mask;
    e["family"] = f.family;
    e["edge_list"] = to_edge_list(cycle_orientation(n, f.mask));
    list.push_back(std::move(e));
  }
  out["failures"] = std::move(list);
  emit(out);
  // Questions 3 and 4 are theorems here: a nonempty failure list means a bug.
  if ((question == 3 || question == 4) && !failures.empty()) return kExitVerification;
  return kExitOk;
}

int run_sweep(const std::string& model, int n, double p, std::uint64_t seed, std::uint64_t count,
              int kmax, int jobs, const diorth::SolverLimit& lim) {
  using namespace diorth;
  std::vector<GeneratorSpec> instances;
  if (model == "all-digraphs") {
    const std::uint64_t total = arc_index_count(n);
    for (std::uint64_t i = 0; i < total; ++i)
      instances.push_back({model, n, 0.0, 0, i});
  } else if (model == "cycle-orientation") {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
      instances.push_back({model, n, 0.0, 0, mask});
  } else if (model == "gnp" || model == "tournament") {
    if (count == 0) throw PreconditionError("sweep: --count must be positive for " + model);
    for (std::uint64_t i = 0; i < count; ++i)
      instances.push_back({model, n, p, seed + i, 0});
  } else {
    throw PreconditionError("unknown sweep model '" + model + "'");
  }

  SuiteOptions opts;
  opts.limit = lim;
  opts.kmax = kmax;
  const SweepResult result = sweep_theorems(instances, opts, jobs, std::cout);
  std::cerr << "swept " << result.instances << " instances, " << result.failures << " failures\n";
  return result.failures == 0 ? kExitOk : kExitVerification;
}

int run_verify(const std::string& cert_path, const std::string& graph_path,
               const diorth::SolverLimit& lim) {
  using namespace diorth;
  const Digraph d = read_digraph(graph_path);
  const Certificate cert = parse_certificate(read_file(cert_path));
  const Verdict v = verify_certificate(d, cert, lim);
  Json out;
  out["kind"] = cert.kind;
  out["ok"] = v.ok;
  if (!v.ok) out["diagnostic"] = v.diagnostic;
  emit(out);
  return v.ok ? kExitOk : kExitVerification;
}

int run_gen(const diorth::GeneratorSpec& spec) {
  std::cout << diorth::to_edge_list(diorth::generate(spec));
  return kExitOk;
}

int run_export_dot(const std::string& input) {
  std::cout << diorth::to_dot(read_digraph(input));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diorth: exact orthogonality, path partitions and dicolorings on small digraphs"};
  app.require_subcommand(1);

  diorth::SolverLimit lim = limit_from_env();
  app.add_option("--budget", lim.time_budget,
                 "solver wall-clock budget in seconds (0 = unlimited; env DIORTH_TIME_BUDGET)");
  app.add_option("--max-n", lim.max_n, "vertex-count cap handed to the exact solvers");

  std::string input = "-", cert_path, graph_path, model = "gnp";
  int k = 1, question = 1, n = 5, kmax = 0, jobs = 1;
  double p = 0.5;
  std::uint64_t seed = 0, count = 1, index = 0;

  auto* analyze = app.add_subcommand("analyze", "exact alpha, alpha', chi, chi', pi, lambda");
  analyze->add_option("input", input, "edge-list file, or - for stdin");

  auto* greedy = app.add_subcommand("greedy-dicolor", "greedy dicoloring certificate");
  greedy->add_option("input", input);

  auto* good = app.add_subcommand("good-partition", "good path partition certificate");
  good->add_option("input", input);

  auto* ortho = app.add_subcommand("orthogonal-path",
                                   "path orthogonal to a minimum dicoloring");
  ortho->add_option("input", input);

  auto* linial = app.add_subcommand("linial", "both relaxed Linial chain certificates");
  linial->add_option("input", input);
  linial->add_option("--k", k, "norm parameter (k >= 1)")->required();

  auto* search = app.add_subcommand("search", "odd-cycle counterexample searches");
  search->add_option("--question", question, "1 | 2 | 3 | 4")->required();
  search->add_option("--n", n, "odd cycle order (3..9)")->required();

  auto* sweep = app.add_subcommand("sweep", "batch theorem verification, one JSON line per instance");
  sweep->add_option("--model", model, "all-digraphs | cycle-orientation | gnp | tournament")
      ->required();
  sweep->add_option("--n", n, "vertex count")->required();
  sweep->add_option("--p", p, "arc probability (gnp)");
  sweep->add_option("--seed", seed, "base seed (gnp / tournament)");
  sweep->add_option("--count", count, "instance count (gnp / tournament)");
  sweep->add_option("--kmax", kmax, "largest k for the Linial chains (0 = up to n)");
  sweep->add_option("--jobs", jobs, "worker threads");

  auto* verify = app.add_subcommand("verify", "re-check a certificate against its digraph");
  verify->add_option("certificate", cert_path, "certificate JSON file")->required();
  verify->add_option("--graph", graph_path, "edge-list file the certificate refers to")
      ->required();

  auto* gen = app.add_subcommand("gen", "print one generated instance as an edge list");
  gen->add_option("--model", model, "gnp | tournament | cycle-orientation | all-digraphs")
      ->required();
  gen->add_option("--n", n, "vertex count")->required();
  gen->add_option("--p", p, "arc probability (gnp)");
  gen->add_option("--seed", seed, "seed (gnp / tournament)");
  gen->add_option("--index", index, "orientation mask / enumeration index");

  auto* dot = app.add_subcommand("export-dot", "DOT export, one line per arc");
  dot->add_option("input", input);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(input, lim);
    if (greedy->parsed()) return run_greedy_dicolor(input, lim);
    if (good->parsed()) return run_good_partition(input, lim);
    if (ortho->parsed()) return run_orthogonal_path(input, lim);
    if (linial->parsed()) return run_linial(input, k, lim);
    if (search->parsed()) return run_search(question, n);
    if (sweep->parsed()) return run_sweep(model, n, p, seed, count, kmax, jobs, lim);
    if (verify->parsed()) return run_verify(cert_path, graph_path, lim);
    if (gen->parsed())
      return run_gen(diorth::GeneratorSpec{model, n, p, seed, index});
    if (dot->parsed()) return run_export_dot(input);
  } catch (const diorth::BudgetError& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return kExitBudget;
  } catch (const diorth::ParseError& e) {
    std::cerr << "parse: " << e.what() << '\n';
    return kExitUsage;
  } catch (const diorth::PreconditionError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const diorth::InternalError& e) {
    std::cerr << "invariant violated (bug): " << e.what() << '\n';
    return kExitVerification;
  } catch (const diorth::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerification;
  }
  return kExitUsage;
}
