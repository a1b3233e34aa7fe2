"""Smoke tests for the python module against known small digraphs."""

import pytest

import diorth

TRIANGLE = "3 3\n0 1\n1 2\n2 0\n"
BIDIRECTED_K3 = "3 6\n0 1\n0 2\n1 0\n1 2\n2 0\n2 1\n"


def triangle():
    return diorth.Digraph.from_edge_list(TRIANGLE)


def test_parse_and_roundtrip():
    d = triangle()
    assert d.n == 3
    assert d.arcs == [(0, 1), (1, 2), (2, 0)]
    assert d.to_edge_list() == TRIANGLE
    assert diorth.Digraph(3, [(2, 0), (0, 1), (1, 2)]) == d
    assert "0 -> 1;" in d.to_dot()
    with pytest.raises(ValueError):
        diorth.Digraph.from_edge_list("2 1\n1 1\n")


def test_analyze_matches_known_values():
    assert diorth.analyze(triangle()) == {
        "alpha": 1,
        "alpha_prime": 2,
        "chi": 3,
        "chi_prime": 2,
        "pi": 1,
        "lambda": 3,
    }
    digon = diorth.Digraph(2, [(0, 1), (1, 0)])
    assert diorth.analyze(digon) == {
        "alpha": 1,
        "alpha_prime": 1,
        "chi": 2,
        "chi_prime": 2,
        "pi": 1,
        "lambda": 2,
    }


def test_solvers_and_acyclicity():
    d = triangle()
    assert not diorth.is_acyclic(d)
    assert diorth.is_acyclic(d, [0, 1])
    assert diorth.max_induced_acyclic(d) == [0, 1]
    assert diorth.min_path_partition(d) == [[0, 1, 2]]
    assert diorth.underlying_edges(d) == [(0, 1), (0, 2), (1, 2)]


def test_constructive_surface():
    d = triangle()
    assert diorth.greedy_dicoloring(d) == [[0, 1], [2]]
    gp = diorth.good_path_partition(d)
    assert gp["classes"] == [[0, 1], [2]]
    assert gp["paths"] == [[0], [1, 2]]

    mas, partition = diorth.orthogonal_partition_to_mas(d)
    assert mas == [0, 1]
    assert sorted(len(p) for p in partition) == [1, 2]

    bk3 = diorth.Digraph.from_edge_list(BIDIRECTED_K3)
    assert diorth.orthogonal_path(bk3, [[0], [1], [2]]) == [0, 1, 2]


def test_knorm_reports_and_verification():
    d = triangle()
    report = diorth.pi_k(d, 2)
    assert report["value"] == 2
    ok, diag = diorth.verify_certificate(d, report["certificate"])
    assert ok, diag

    chain = diorth.linial_primal(d, 1)
    assert chain["payload"]["pi_k"] == 1
    assert chain["payload"]["alpha_prime_k"] == 2
    ok, diag = diorth.verify_certificate(d, chain)
    assert ok, diag

    tampered = dict(chain)
    tampered["payload"] = dict(chain["payload"])
    tampered["payload"]["alpha_prime_k"] = 7
    ok, diag = diorth.verify_certificate(d, tampered)
    assert not ok and diag


def test_generators_are_deterministic():
    a = diorth.gnp_digraph(7, 0.5, 42)
    b = diorth.gnp_digraph(7, 0.5, 42)
    assert a == b and a.fingerprint() == b.fingerprint()
    assert diorth.gnp_digraph(5, 0.5, 42).to_edge_list().startswith("5 12\n")
    assert len(diorth.all_digraphs(2)) == 4
    assert diorth.cycle_orientation(5, 0).arcs == [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]


def test_searches_and_suite():
    assert diorth.search_question(3, 5) == []
    failures = diorth.search_question(1, 5)
    assert failures and all(len(f["family"]) == 2 for f in failures)
    record = diorth.run_instance_suite(triangle(), "triangle")
    assert record["ok"] is True


def test_budget_maps_to_timeout():
    big = diorth.gnp_digraph(16, 0.5, 9)
    with pytest.raises(TimeoutError):
        diorth.max_induced_acyclic(big, diorth.SolverLimit(time_budget=1e-8))
