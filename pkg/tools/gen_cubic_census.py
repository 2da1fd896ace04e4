"""Generate tests/data/cubic_nNN.g6: every connected cubic graph for
n = 4..14, deduplicated up to isomorphism.

Generation, level by level (n = 4, 6, ..., 14):

* expansion: subdivide two distinct edges of a level n-2 graph and join
  the two new vertices (complete for the 3-connected graphs);
* bridge composition: join two one-degree-2-vertex sides by a bridge
  (complete for graphs with a cut edge);
* 2-cut composition: join two two-degree-2-vertex sides by two edges
  (complete for bridgeless graphs with a 2-edge-cut).

Sides with one degree-2 vertex of odd order m are exactly the graphs
F - v + ab for a cubic F of order m+1, v a vertex and a, b nonadjacent
neighbours of v.  Sides with two degree-2 vertices of even order m are
the graphs D - e for cubic D of order m, plus the sides obtained by
subdividing an edge at the degree-2 vertex of an odd side of order m-1
(these have their two degree-2 vertices adjacent; they cover ladder-like
chains of rungs).  A 2-cut whose edges share an endpoint forces a
bridge, so those graphs come from the bridge composition instead.

The script asserts the known counts 1, 2, 5, 19, 85, 509 of connected
cubic graphs, so any incompleteness fails loudly.
"""

import itertools
import sys
from pathlib import Path

import networkx as nx
import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
from ipfkit.graph import Graph, write_graph6  # noqa: E402

EXPECTED = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def invariant(h: nx.Graph):
    a = nx.to_numpy_array(h)
    eig = np.sort(np.linalg.eigvalsh(a))
    return (h.number_of_nodes(), tuple(np.round(eig, 6)))


class Dedup:
    def __init__(self):
        self.buckets = {}
        self.kept = []

    def add(self, g: Graph) -> bool:
        h = to_nx(g)
        bucket = self.buckets.setdefault(invariant(h), [])
        if any(nx.is_isomorphic(h, other) for other in bucket):
            return False
        bucket.append(h)
        self.kept.append(g)
        return True


def expansions(g: Graph):
    for e1, e2 in itertools.combinations(g.sorted_edges(), 2):
        x, y = g.n, g.n + 1
        edges = set(g.edges) - {e1, e2}
        edges |= {(e1[0], x), (e1[1], x), (e2[0], y), (e2[1], y), (x, y)}
        yield Graph(g.n + 2, edges)


def odd_sides(census_next: list) -> list:
    """Connected graphs of odd order with one degree-2 vertex, from the
    cubic census one order up."""
    out = []
    for f in census_next:
        for v in range(f.n):
            nbrs = f.adj[v]
            for a, b in itertools.combinations(nbrs, 2):
                if f.has_edge(a, b):
                    continue
                keep = [w for w in range(f.n) if w != v]
                sub, o2n = f.induced_subgraph(keep)
                s = sub.with_edges([(o2n[a], o2n[b])])
                if s.is_connected():
                    out.append(s)
    return out


def even_sides(census_same: list, odd_prev: list) -> list:
    """Connected graphs of even order with two degree-2 vertices."""
    out = []
    for d in census_same:
        for e in d.sorted_edges():
            s = d.without_edges([e])
            if s.is_connected():
                out.append(s)
    for t in odd_prev:
        x = next(v for v in range(t.n) if t.degree(v) == 2)
        for z in t.adj[x]:
            y = t.n
            edges = (t.edges - {(min(x, z), max(x, z))}) | {(x, y), (y, z)}
            out.append(Graph(t.n + 1, edges))
    return out


def shift(g: Graph, off: int):
    return [(u + off, v + off) for u, v in g.edges]


def deg2_pair(s: Graph):
    # the single-edge side has two degree-1 vertices; all other sides
    # expose degree-2 vertices
    return [v for v in range(s.n) if s.degree(v) < 3]


def main():
    out_dir = Path(__file__).resolve().parents[1] / "tests" / "data"
    out_dir.mkdir(parents=True, exist_ok=True)
    k4 = Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
    census = {4: [k4]}
    odd = {}   # m -> odd sides of order m (needs census[m+1])
    even = {}

    for n in range(6, 15, 2):
        dd = Dedup()
        for parent in census[n - 2]:
            for cand in expansions(parent):
                dd.add(cand)
        # sides become available once the smaller censuses exist
        for m in range(5, n - 4, 2):
            if m not in odd and m + 1 in census:
                odd[m] = odd_sides(census[m + 1])
        for m in range(4, n - 1, 2):
            if m not in even and m in census:
                even[m] = even_sides(census[m], odd.get(m - 1, []))
        # bridge compositions
        for m1 in range(5, n // 2 + 1, 2):
            m2 = n - m1
            for s1 in odd.get(m1, []):
                x1 = deg2_pair(s1)[0]
                for s2 in odd.get(m2, []):
                    x2 = deg2_pair(s2)[0]
                    edges = list(s1.edges) + shift(s2, s1.n)
                    edges.append((x1, x2 + s1.n))
                    dd.add(Graph(n, edges))
        # 2-edge-cut compositions
        for m1 in range(4, n // 2 + 1, 2):
            m2 = n - m1
            for s1 in even.get(m1, []):
                x1, y1 = deg2_pair(s1)
                for s2 in even.get(m2, []):
                    x2, y2 = deg2_pair(s2)
                    base = list(s1.edges) + shift(s2, s1.n)
                    for a2, b2 in ((x2, y2), (y2, x2)):
                        dd.add(Graph(n, base + [(x1, a2 + s1.n),
                                                (y1, b2 + s1.n)]))
        census[n] = dd.kept
        assert len(dd.kept) == EXPECTED[n], (n, len(dd.kept), EXPECTED[n])

    for n, graphs in sorted(census.items()):
        path = out_dir / f"cubic_n{n:02d}.g6"
        with open(path, "w", encoding="ascii") as fh:
            for g in graphs:
                fh.write(write_graph6(g) + "\n")
        print(path, len(graphs))


if __name__ == "__main__":
    main()
