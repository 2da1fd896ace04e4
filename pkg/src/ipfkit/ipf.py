"""Induced path factors as edge subsets of a host graph.

An IPF is stored as the set of edges of its paths; vertices incident with no
chosen edge are trivial one-vertex paths.  The number of paths always equals
n minus the number of chosen edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .graph import Graph, block_decomposition


class IpfError(ValueError):
    """The edge set is not an induced path factor of the host."""

    def __init__(self, message: str, kind: str, detail=None):
        super().__init__(message)
        self.kind = kind  # 'degree' | 'cycle' | 'chord' | 'edges'
        self.detail = detail


def _norm_edges(edges: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    return frozenset((u, v) if u < v else (v, u) for u, v in edges)


def verify_ipf(g: Graph, edges: Iterable[tuple[int, int]]) -> list[list[int]]:
    """Check that `edges` forms an IPF of g and return its maximal paths.

    Paths are reported endpoint-to-endpoint with the smaller endpoint first,
    sorted by their first vertex; trivial paths are singletons.  Raises
    IpfError naming the violation (over-degree vertex, cycle, or the
    specific chord pair).
    """
    es = _norm_edges(edges)
    stray = es - g.edges
    if stray:
        raise IpfError(f"edges not in host: {sorted(stray)}", "edges", sorted(stray))
    deg = [0] * g.n
    nbr: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in es:
        deg[u] += 1
        deg[v] += 1
        nbr[u].append(v)
        nbr[v].append(u)
    for v in range(g.n):
        if deg[v] > 2:
            raise IpfError(f"vertex {v} has degree {deg[v]} in the edge subset",
                           "degree", v)
    seen = [False] * g.n
    paths: list[list[int]] = []
    for s in range(g.n):
        if seen[s] or deg[s] == 2:
            continue
        # s is an endpoint (degree <= 1): walk to the other end
        seen[s] = True
        path = [s]
        prev = -1
        v = s
        while True:
            nxt = [w for w in nbr[v] if w != prev]
            if not nxt:
                break
            w = nxt[0]
            seen[w] = True
            path.append(w)
            prev, v = v, w
        if path[-1] < path[0]:
            path.reverse()
        paths.append(path)
    if not all(seen):
        cyc = [v for v in range(g.n) if not seen[v]]
        raise IpfError(f"edge subset contains a cycle through {cyc}", "cycle", cyc)
    for path in paths:
        k = len(path)
        for i in range(k):
            for j in range(i + 2, k):
                if g.has_edge(path[i], path[j]):
                    pair = (path[i], path[j])
                    raise IpfError(
                        f"path {path} has chord {pair}: non-consecutive "
                        f"vertices adjacent in host", "chord", pair)
    paths.sort(key=lambda p: p[0])
    assert len(paths) == g.n - len(es)
    return paths


@dataclass(frozen=True)
class Ipf:
    """An IPF bound to its host graph."""

    host: Graph
    edges: frozenset[tuple[int, int]]

    @staticmethod
    def from_edges(host: Graph, edges: Iterable[tuple[int, int]],
                   check: bool = True) -> "Ipf":
        es = _norm_edges(edges)
        if check:
            verify_ipf(host, es)
        return Ipf(host, es)

    @staticmethod
    def from_paths(host: Graph, paths: Iterable[Sequence[int]],
                   check: bool = True) -> "Ipf":
        es = []
        for p in paths:
            es.extend(zip(p, p[1:]))
        return Ipf.from_edges(host, es, check=check)

    @property
    def path_count(self) -> int:
        return self.host.n - len(self.edges)

    def paths(self) -> list[list[int]]:
        return verify_ipf(self.host, self.edges)

    def rebind(self, host: Graph, check: bool = True) -> "Ipf":
        """Reinterpret the same edge set as an IPF of another host."""
        return Ipf.from_edges(host, self.edges, check=check)

    def endpoints(self) -> set[int]:
        """Vertices at which some path of the IPF ends (trivial paths count)."""
        ends = set()
        for p in self.paths():
            ends.add(p[0])
            ends.add(p[-1])
        return ends

    def to_json_fragment(self) -> dict:
        return {
            "edges": [list(e) for e in sorted(self.edges)],
            "path_count": self.path_count,
            "paths": self.paths(),
        }


# ---------------------------------------------------------------------------
# Well-behaved and standardised predicates
# ---------------------------------------------------------------------------

@dataclass
class WellBehavedReport:
    verdict: bool
    exceptions_allowed: frozenset[int]
    # one entry per failing path: (path, offending low-degree pair)
    witnesses: list[tuple[tuple[int, ...], tuple[int, int]]] = field(default_factory=list)


def is_well_behaved(g: Graph, ipf: Ipf, R: Iterable[int] = ()) -> WellBehavedReport:
    """Check every path's low-degree vertices lie in one block, or form the
    endpoints of a bridge-centred 4-vertex subpath; S excludes R."""
    if not g.is_subcubic():
        raise ValueError("well-behavedness is defined for subcubic hosts")
    Rset = frozenset(R)
    S = {v for v in range(g.n) if g.degree(v) <= 2} - Rset
    dec = block_decomposition(g)
    paths = verify_ipf(g, ipf.edges)
    witnesses: list[tuple[tuple[int, ...], tuple[int, int]]] = []
    for path in paths:
        vs = [v for v in path if v in S]
        if len(vs) <= 1:
            continue
        blocks_hit = {dec.block_of.get(v, -1 - v) for v in vs}
        if len(blocks_hit) == 1 and min(blocks_hit) >= 0:
            continue
        ok = False
        if len(vs) == 2:
            x, y = vs
            i, j = path.index(x), path.index(y)
            if i > j:
                i, j = j, i
                x, y = y, x
            if j - i == 3:
                mid = (min(path[i + 1], path[i + 2]), max(path[i + 1], path[i + 2]))
                if mid in dec.bridges:
                    ok = True
        if not ok:
            witnesses.append((tuple(path), (vs[0], vs[1])))
    return WellBehavedReport(not witnesses, Rset, witnesses)


def induced_k4minus_subgraphs(g: Graph) -> list[tuple[int, int, int, int]]:
    """All induced K4- subgraphs, reported as (a, b, c, d) with ab the
    missing edge and cd the edge joining the two degree-3-in-H vertices."""
    found = []
    for c, d in g.sorted_edges():
        common = [w for w in g.adj[c] if g.has_edge(w, d)]
        for i in range(len(common)):
            for j in range(i + 1, len(common)):
                a, b = common[i], common[j]
                if not g.has_edge(a, b):
                    found.append((a, b, c, d))
    return found


def is_standardised(g: Graph, ipf: Ipf) -> tuple[bool, list[tuple[int, int, int, int]]]:
    """True iff the IPF is standardised on every induced K4- subgraph.

    Returns (verdict, failing K4- tuples as produced by
    induced_k4minus_subgraphs)."""
    if not g.is_subcubic():
        raise ValueError("standardisation is defined for subcubic hosts")
    paths = verify_ipf(g, ipf.edges)
    path_of: dict[int, int] = {}
    end_edge: dict[int, Optional[tuple[int, int]]] = {}
    for idx, p in enumerate(paths):
        for v in p:
            path_of[v] = idx
        for e_v, nb in ((p[0], p[1] if len(p) > 1 else None),
                        (p[-1], p[-2] if len(p) > 1 else None)):
            if nb is not None:
                end_edge[e_v] = (min(e_v, nb), max(e_v, nb))

    def endpoint_to(v: int, target: int) -> bool:
        e = end_edge.get(v)
        return e == (min(v, target), max(v, target))

    failing = []
    for a, b, c, d in induced_k4minus_subgraphs(g):
        ok = False
        for x, y in ((a, b), (b, a)):
            if (endpoint_to(c, x) and endpoint_to(d, y)
                    and path_of[c] != path_of[d]):
                ok = True
                break
        # c and d may also swap roles with each other
        if not ok:
            for x, y in ((a, b), (b, a)):
                if (endpoint_to(d, x) and endpoint_to(c, y)
                        and path_of[c] != path_of[d]):
                    ok = True
                    break
        if not ok:
            failing.append((a, b, c, d))
    return not failing, failing
