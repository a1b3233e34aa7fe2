// Python bindings for the main operations: digraph parsing, the exact
// solvers, k-norm oracles, the constructive algorithms and the certificate
// verifier. Containers cross the boundary as plain lists / dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "diorth/certificates.hpp"
#include "diorth/constructive.hpp"
#include "diorth/generators.hpp"
#include "diorth/harness.hpp"
#include "diorth/knorm.hpp"
#include "diorth/solvers.hpp"

namespace py = pybind11;
using namespace diorth;

namespace {

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const Json& e : j) out.append(json_to_py(e));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it)
        out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

Json py_to_json(const py::handle& obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
  if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::dict>(obj)) {
    Json out = Json::object();
    for (auto item : obj.cast<py::dict>())
      out[item.first.cast<std::string>()] = py_to_json(item.second);
    return out;
  }
  if (py::isinstance<py::sequence>(obj)) {
    Json out = Json::array();
    for (auto item : obj.cast<py::sequence>()) out.push_back(py_to_json(item));
    return out;
  }
  throw py::type_error("cannot convert object to certificate JSON");
}

VertexSet set_from_list(const std::vector<int>& verts) { return VertexSet::of(verts); }

std::vector<std::vector<int>> classes_to_lists(std::span<const VertexSet> classes) {
  std::vector<std::vector<int>> out;
  out.reserve(classes.size());
  for (const VertexSet& s : classes) out.push_back(s.to_vector());
  return out;
}

std::vector<VertexSet> classes_from_lists(const std::vector<std::vector<int>>& lists) {
  std::vector<VertexSet> out;
  out.reserve(lists.size());
  for (const auto& l : lists) out.push_back(VertexSet::of(l));
  return out;
}

std::vector<std::vector<int>> paths_to_lists(const PathPartition& paths) {
  std::vector<std::vector<int>> out;
  out.reserve(paths.size());
  for (const Path& p : paths) out.push_back(p.to_vector());
  return out;
}

py::dict report_to_dict(const KNormReport& r) {
  py::dict out;
  out["k"] = r.k;
  out["value"] = r.value;
  out["certificate"] = json_to_py(Json::parse(serialize_certificate(r.witness)));
  return out;
}

py::dict certificate_to_dict(const Certificate& c) {
  return json_to_py(Json::parse(serialize_certificate(c)));
}

Certificate certificate_from_py(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return parse_certificate(obj.cast<std::string>());
  return parse_certificate(py_to_json(obj).dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact orthogonality, path partitions and dicolorings on small digraphs";

  py::register_exception<ParseError>(m, "EdgeListError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetExceeded", PyExc_TimeoutError);

  py::class_<SolverLimit>(m, "SolverLimit")
      .def(py::init([](int max_n, double time_budget) {
             return SolverLimit{max_n, time_budget};
           }),
           py::arg("max_n") = 24, py::arg("time_budget") = 0.0)
      .def_readwrite("max_n", &SolverLimit::max_n)
      .def_readwrite("time_budget", &SolverLimit::time_budget);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& arcs) {
             std::vector<Arc> as;
             as.reserve(arcs.size());
             for (auto [u, v] : arcs) as.push_back(Arc{u, v});
             return Digraph::from_arcs(n, std::move(as));
           }),
           py::arg("n"), py::arg("arcs") = std::vector<std::pair<int, int>>{})
      .def_static("from_edge_list",
                  [](const std::string& text) { return parse_edge_list(text); })
      .def_property_readonly("n", &Digraph::order)
      .def_property_readonly("arcs",
                             [](const Digraph& d) {
                               std::vector<std::pair<int, int>> out;
                               for (const Arc& a : d.arcs()) out.emplace_back(a.tail, a.head);
                               return out;
                             })
      .def("has_arc", &Digraph::has_arc)
      .def("to_edge_list", [](const Digraph& d) { return to_edge_list(d); })
      .def("to_dot", [](const Digraph& d) { return to_dot(d); })
      .def("fingerprint", [](const Digraph& d) { return digraph_fingerprint(d); })
      .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
      .def("__repr__", [](const Digraph& d) {
        std::ostringstream out;
        out << "Digraph(n=" << d.order() << ", arcs=" << d.arc_count() << ")";
        return out.str();
      });

  m.def("underlying_edges", [](const Digraph& d) { return underlying_edges(d); });
  m.def(
      "is_acyclic",
      [](const Digraph& d, const std::optional<std::vector<int>>& verts) {
        return is_acyclic(d, verts ? set_from_list(*verts) : d.vertices());
      },
      py::arg("digraph"), py::arg("vertices") = std::nullopt);

  // exact solvers
  m.def(
      "max_induced_acyclic",
      [](const Digraph& d, const SolverLimit& lim) {
        return max_induced_acyclic(d, lim).to_vector();
      },
      py::arg("digraph"), py::arg("limit") = SolverLimit{});
  m.def(
      "max_stable_set",
      [](const Digraph& d, const SolverLimit& lim) { return max_stable_set(d, lim).to_vector(); },
      py::arg("digraph"), py::arg("limit") = SolverLimit{});
  m.def(
      "min_dicoloring",
      [](const Digraph& d, const SolverLimit& lim) {
        return classes_to_lists(min_dicoloring(d, lim).classes);
      },
      py::arg("digraph"), py::arg("limit") = SolverLimit{});
  m.def(
      "min_coloring",
      [](const Digraph& d, const SolverLimit& lim) {
        return classes_to_lists(min_coloring(d, lim).classes);
      },
      py::arg("digraph"), py::arg("limit") = SolverLimit{});
  m.def(
      "longest_path",
      [](const Digraph& d, const SolverLimit& lim) { return longest_path(d, lim).to_vector(); },
      py::arg("digraph"), py::arg("limit") = SolverLimit{});
  m.def(
      "min_path_partition",
      [](const Digraph& d, const SolverLimit& lim) {
        return paths_to_lists(min_path_partition(d, lim));
      },
      py::arg("digraph"), py::arg("limit") = SolverLimit{});
  m.def(
      "analyze",
      [](const Digraph& d, const SolverLimit& lim) {
        py::dict out;
        out["alpha"] = max_stable_set(d, lim).size();
        out["alpha_prime"] = max_induced_acyclic(d, lim).size();
        out["chi"] = min_coloring(d, lim).size();
        out["chi_prime"] = min_dicoloring(d, lim).size();
        out["pi"] = static_cast<int>(min_path_partition(d, lim).size());
        out["lambda"] = longest_path(d, lim).order();
        return out;
      },
      py::arg("digraph"), py::arg("limit") = SolverLimit{});

  // k-norm suite
  m.def("k_norm_of_partition", [](const std::vector<std::vector<int>>& paths, int k) {
    PathPartition p;
    for (const auto& seq : paths) p.emplace_back(seq);
    return k_norm_of_partition(p, k);
  });
  m.def("k_norm_of_classes", [](const std::vector<std::vector<int>>& classes, int k) {
    return k_norm_of_classes(classes_from_lists(classes), k);
  });
  const auto bind_report = [&m](const char* name, KNormReport (*fn)(const Digraph&, int,
                                                                    const SolverLimit&)) {
    m.def(
        name,
        [fn](const Digraph& d, int k, const SolverLimit& lim) {
          return report_to_dict(fn(d, k, lim));
        },
        py::arg("digraph"), py::arg("k"), py::arg("limit") = SolverLimit{});
  };
  bind_report("pi_k", &pi_k);
  bind_report("chi_k", &chi_k);
  bind_report("chi_prime_k", &chi_prime_k);
  bind_report("alpha_k", &alpha_k);
  bind_report("alpha_prime_k", &alpha_prime_k);
  bind_report("lambda_k", &lambda_k);

  // constructive algorithms
  m.def(
      "greedy_dicoloring",
      [](const Digraph& d, const SolverLimit& lim) {
        return classes_to_lists(greedy_dicoloring(d, lim).classes);
      },
      py::arg("digraph"), py::arg("limit") = SolverLimit{});
  m.def(
      "good_path_partition",
      [](const Digraph& d, const SolverLimit& lim) {
        const GoodPathPartition gp = good_path_partition(d, greedy_dicoloring(d, lim));
        py::dict out;
        out["classes"] = classes_to_lists(gp.dicoloring.classes);
        out["paths"] = paths_to_lists(gp.partition);
        return out;
      },
      py::arg("digraph"), py::arg("limit") = SolverLimit{});
  m.def(
      "orthogonal_partition_to_mas",
      [](const Digraph& d, const SolverLimit& lim) {
        const OrthogonalPair pair = orthogonal_partition_to_mas(d, lim);
        return py::make_tuple(pair.acyclic_set.to_vector(), paths_to_lists(pair.partition));
      },
      py::arg("digraph"), py::arg("limit") = SolverLimit{});
  m.def(
      "orthogonal_path",
      [](const Digraph& d, const std::vector<std::vector<int>>& classes, const SolverLimit& lim) {
        return orthogonal_path(d, Dicoloring{classes_from_lists(classes)}, lim).to_vector();
      },
      py::arg("digraph"), py::arg("dicoloring"), py::arg("limit") = SolverLimit{});
  m.def(
      "linial_primal",
      [](const Digraph& d, int k, const SolverLimit& lim) {
        return certificate_to_dict(linial_primal_certificate(d, k, lim));
      },
      py::arg("digraph"), py::arg("k"), py::arg("limit") = SolverLimit{});
  m.def(
      "linial_dual",
      [](const Digraph& d, int k, const SolverLimit& lim) {
        return certificate_to_dict(linial_dual_certificate(d, k, lim));
      },
      py::arg("digraph"), py::arg("k"), py::arg("limit") = SolverLimit{});

  // certificates
  m.def(
      "verify_certificate",
      [](const Digraph& d, const py::handle& cert, const SolverLimit& lim) {
        const Verdict v = verify_certificate(d, certificate_from_py(cert), lim);
        return py::make_tuple(v.ok, v.diagnostic);
      },
      py::arg("digraph"), py::arg("certificate"), py::arg("limit") = SolverLimit{});

  // generators
  m.def("gnp_digraph", &gnp_digraph, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("random_tournament", &random_tournament, py::arg("n"), py::arg("seed"));
  m.def("cycle_orientation", &cycle_orientation, py::arg("n"), py::arg("mask"));
  m.def("all_digraphs", [](int n) {
    AllDigraphs stream(n);
    std::vector<Digraph> out;
    out.reserve(static_cast<std::size_t>(stream.count()));
    while (!stream.done()) out.push_back(stream.next());
    return out;
  });

  // harness
  m.def("search_question", [](int question, int n) {
    py::list out;
    for (const SearchFailure& f : search_question(question, n)) {
      py::dict e;
      e["mask"] = f.mask;
      e["family"] = json_to_py(f.family);
      out.append(e);
    }
    return out;
  });
  m.def(
      "run_instance_suite",
      [](const Digraph& d, const std::string& name) {
        return json_to_py(run_instance_suite(d, name));
      },
      py::arg("digraph"), py::arg("name") = "instance");
}
