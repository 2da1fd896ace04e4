"""Exact solvers: branch-and-bound vs the edge-subset oracle, kernel
backend parity, and budget handling."""

import random

import pytest

from ipfkit import Graph, rho_exact, rho_exhaustive, verify_ipf
from ipfkit.solver import longest_induced_path_order
from ipfkit import _kernel_py

from conftest import census_graphs, random_connected_subcubic


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_known_small_values():
    assert rho_exact(Graph(1)).rho == 1
    assert rho_exact(Graph(3, [(0, 1), (1, 2)])).rho == 1
    assert rho_exact(cycle(3)).rho == 2
    assert rho_exact(cycle(6)).rho == 2
    k4 = Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert rho_exact(k4).rho == 2
    assert rho_exact(Graph(4, [(0, 1), (0, 2), (0, 3)])).rho == 2
    assert rho_exact(Graph(5, [(0, i) for i in range(1, 5)])).rho == 3


def test_witness_is_valid_and_counts_match():
    rng = random.Random(11)
    for _ in range(40):
        g = random_connected_subcubic(rng, rng.randrange(2, 11))
        res = rho_exact(g)
        paths = verify_ipf(g, res.witness.edges)
        assert len(paths) == res.rho


def test_oracle_agreement_on_census():
    for n in (4, 6, 8):
        for g in census_graphs(n):
            assert rho_exact(g).rho == rho_exhaustive(g).rho


def test_oracle_agreement_on_random_subcubic():
    rng = random.Random(7)
    for _ in range(60):
        g = random_connected_subcubic(rng, rng.randrange(2, 10))
        a = rho_exact(g)
        b = rho_exhaustive(g)
        assert a.rho == b.rho
        assert a.optimal and b.optimal


def test_exhaustive_cap_enforced():
    with pytest.raises(ValueError):
        rho_exhaustive(cycle(13))


def test_longest_induced_path_order():
    assert longest_induced_path_order(cycle(6)) == 5
    assert longest_induced_path_order(Graph(5, [(i, i + 1)
                                                for i in range(4)])) == 5
    k4 = Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    assert longest_induced_path_order(k4) == 2


def test_budget_truncation_reports_upper_bound():
    g = census_graphs(12)[0]
    full = rho_exact(g)
    res = rho_exact(g, node_limit=3)
    assert not res.optimal
    assert res.rho >= full.rho
    verify_ipf(g, res.witness.edges)


def test_kernel_backends_bit_identical():
    """The compiled and pure-Python kernels must agree on the result, the
    witness edge set, and the explored node count (same branching order)."""
    try:
        from ipfkit import _kernel_c
    except ImportError:
        pytest.skip("compiled kernel not built")
    rng = random.Random(23)
    hosts = census_graphs(8) + census_graphs(10)[:6]
    hosts += [random_connected_subcubic(rng, rng.randrange(3, 12))
              for _ in range(25)]
    for g in hosts:
        L = longest_induced_path_order(g)
        got_c = _kernel_c.solve_min_ipf(g.n, g.adj_mask, max(L, 1), 10 ** 8, 0)
        got_py = _kernel_py.solve_min_ipf(g.n, g.adj_mask, max(L, 1), 10 ** 8, 0)
        assert got_c[0] == got_py[0]
        assert sorted(map(tuple, got_c[1])) == sorted(map(tuple, got_py[1]))
        assert got_c[2] == got_py[2]
        assert got_c[3] == got_py[3]


def test_kernel_backends_identical_under_budget():
    try:
        from ipfkit import _kernel_c
    except ImportError:
        pytest.skip("compiled kernel not built")
    g = census_graphs(12)[3]
    L = longest_induced_path_order(g)
    for limit in (1, 5, 50, 500):
        got_c = _kernel_c.solve_min_ipf(g.n, g.adj_mask, L, limit, 0)
        got_py = _kernel_py.solve_min_ipf(g.n, g.adj_mask, L, limit, 0)
        assert got_c[0] == got_py[0] and got_c[2] == got_py[2]
        assert sorted(map(tuple, got_c[1])) == sorted(map(tuple, got_py[1]))
        assert got_c[3] == got_py[3]
