"""Shared fixtures: census file loading, random graph generators and the
enumeration of hamiltonian {2,3}-graphs used by several suites."""

import random
from pathlib import Path

from ipfkit import Graph, parse_graph6

DATA = Path(__file__).parent / "data"

# connected cubic graph counts by order, used to guard the fixtures
CENSUS_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}


def census_path(n: int) -> Path:
    return DATA / f"cubic_n{n:02d}.g6"


def census_graphs(n: int) -> list:
    lines = census_path(n).read_text().splitlines()
    assert len(lines) == CENSUS_COUNTS[n]
    return [parse_graph6(line) for line in lines]


def random_connected_subcubic(rng: random.Random, n: int) -> Graph:
    """Random connected graph with maximum degree at most 3: a random
    degree-capped tree plus a few random chords."""
    deg = [0] * n
    edges = []
    for v in range(1, n):
        u = rng.choice([w for w in range(v) if deg[w] < 3])
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
    present = {tuple(sorted(e)) for e in edges}
    extras = rng.randrange(0, n)
    for _ in range(extras):
        free = [v for v in range(n) if deg[v] < 3]
        rng.shuffle(free)
        for i, u in enumerate(free):
            cands = [v for v in free[i + 1:]
                     if tuple(sorted((u, v))) not in present]
            if cands:
                v = rng.choice(cands)
                present.add(tuple(sorted((u, v))))
                deg[u] += 1
                deg[v] += 1
                break
    return Graph(n, present)


def random_connected_cubic(rng: random.Random, n: int,
                           tries: int = 2000) -> Graph:
    """Random connected cubic graph by repeated pairing of half-edges."""
    assert n % 2 == 0 and n >= 4
    for _ in range(tries):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        while stubs:
            u = stubs.pop()
            v = stubs.pop()
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if not ok:
            continue
        g = Graph(n, edges)
        if g.is_connected():
            return g
    raise RuntimeError("no connected cubic sample found")


def hamiltonian_23_graphs(n: int) -> list:
    """Every hamiltonian graph with all degrees 2 or 3 on n vertices, as
    a cycle 0..n-1 plus a matching of chords (labelled enumeration; every
    isomorphism type appears at least once)."""
    base = [(i, (i + 1) % n) for i in range(n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 2, n)
             if not (i == 0 and j == n - 1)]
    out = []

    def rec(start, used, chords):
        out.append(Graph(n, base + chords))
        for idx in range(start, len(pairs)):
            i, j = pairs[idx]
            if i in used or j in used:
                continue
            rec(idx + 1, used | {i, j}, chords + [(i, j)])

    rec(0, frozenset(), [])
    return out
