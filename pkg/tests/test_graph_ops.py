"""Structural queries: connectivity, bridges, blocks, cuts, hamilton
cycles and 2-factors."""

import pytest

from ipfkit import Graph, GraphError
from ipfkit.graph import (
    block_decomposition, bridges, find_2_edge_cut, hamilton_cycle,
    is_hamiltonian, ladder_decomposition, two_factor_search,
)
from ipfkit.families import petersen, tietze, triangle_ring

from conftest import census_graphs


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_graph_invariants():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 3)])
    g = Graph(4, [(0, 1), (1, 0)])  # duplicates collapse
    assert len(g.edges) == 1
    assert g.adj[0] == (1,) and g.adj[1] == (0,)


def test_degree_queries():
    g = triangle_ring(9)
    assert sorted(g.degrees()) == [2, 2, 2, 3, 3, 3, 3, 3, 3]
    assert g.is_subcubic() and g.is_23_graph() and not g.is_cubic()
    assert petersen().is_cubic() and petersen().is_k_regular(3)


def test_components_and_connectivity():
    g = Graph(5, [(0, 1), (2, 3)])
    comps = sorted(map(sorted, g.components()))
    assert comps == [[0, 1], [2, 3], [4]]
    assert not g.is_connected()
    assert cycle(6).is_connected()
    assert not cycle(6).is_connected_without_edges([(0, 1), (3, 4)])


def test_bridges_path_and_cycle():
    p5 = Graph(5, [(i, i + 1) for i in range(4)])
    assert bridges(p5) == frozenset({(0, 1), (1, 2), (2, 3), (3, 4)})
    assert bridges(cycle(5)) == frozenset()


def test_block_decomposition_two_triangles_and_bridge():
    # triangle 0,1,2 - bridge 2-3 - triangle 3,4,5
    g = Graph(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
    dec = block_decomposition(g)
    assert dec.bridges == frozenset({(2, 3)})
    assert sorted(map(sorted, dec.blocks)) == [[0, 1, 2], [3, 4, 5]]
    # blocks of order 2 (plain bridges) are not listed
    assert all(len(b) >= 3 for b in dec.blocks)
    assert dec.block_of[0] == dec.block_of[1] == dec.block_of[2]
    assert dec.block_of[0] != dec.block_of[3]


def test_blocks_disjoint_in_subcubic_hosts():
    for g in census_graphs(10):
        dec = block_decomposition(g)
        seen = set()
        for block in dec.blocks:
            assert not (set(block) & seen)
            seen |= set(block)


def double_k4minus():
    # two K4-minus-an-edge blocks joined by two edges, a cubic 2-cut host
    return Graph(8, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3),
                     (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
                     (0, 4), (1, 5)])


def test_two_edge_cut_detection():
    assert find_2_edge_cut(petersen()) is None  # 3-edge-connected
    g = double_k4minus()
    cut = find_2_edge_cut(g)
    assert cut is not None
    assert not g.is_connected_without_edges(cut)


def test_ladder_decomposition_across_a_2_cut():
    g = double_k4minus()
    lad = ladder_decomposition(g)
    assert lad is not None
    assert lad.s >= 1
    # the u/v paths run in parallel and consist of real edges
    for path in (lad.u_path, lad.v_path):
        for a, b in zip(path, path[1:]):
            assert g.has_edge(a, b)


def test_hamilton_cycle_found_and_absent():
    cyc = hamilton_cycle(cycle(7))
    assert cyc is not None and len(cyc) == 7
    # the only bridgeless nonhamiltonian cubic graphs up to order 12
    assert not is_hamiltonian(petersen())
    assert not is_hamiltonian(tietze())
    tree = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert hamilton_cycle(tree) is None


def test_hamilton_cycle_is_a_cycle():
    for g in census_graphs(8):
        cyc = hamilton_cycle(g)
        if cyc is None:
            continue
        assert sorted(cyc) == list(range(g.n))
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            assert g.has_edge(a, b)


def test_two_factor_search_validates():
    for g in census_graphs(10):
        f = two_factor_search(g)
        assert f is not None  # bridgeless or not, all order-10 cubic have one
        f.validate(g)
        assert sum(len(c) for c in f.cycles) == g.n


def test_two_factor_min_cycle_len():
    f = two_factor_search(petersen(), min_cycle_len=5, minimize_cycles=True)
    assert f is not None
    assert all(len(c) >= 5 for c in f.cycles)


def test_two_factor_absent():
    # theta graph: three length-2 paths between 0 and 1; disjoint cycles
    # cannot cover all three middle vertices
    g = Graph(5, [(0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)])
    assert two_factor_search(g, min_cycle_len=3) is None
