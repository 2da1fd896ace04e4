"""Constructive IPF pipeline with explicit path-count guarantees.

Every operation returns a runtime-verified IPF together with the bound it
promises.  The cubic pipeline (``ipf_cubic``) recursively reduces the input
through bridge splits, K4-minus reductions and 2-edge-cut reassembly until
it reaches a 3-connected graph, which is handled through a 2-factor and the
block-tree construction for {2,3}-graphs.  Each assembly step re-verifies
its output, so a faulty reduction fails loudly instead of producing an
invalid certificate.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graph import (
    Graph, GraphError, TwoFactor, block_decomposition, hamilton_cycle,
    is_hamiltonian, ladder_decomposition, two_factor_search, write_graph6,
)
from .ipf import Ipf, induced_k4minus_subgraphs, is_standardised, is_well_behaved
from .solver import rho_exhaustive
from .surgery import (
    SurgeryRecord, augment_triangle, paste_k4minus, subdivide_edge,
    suppress_vertex, surgery,
)


class ConstructionError(RuntimeError):
    """An assembly step produced an invalid or over-long IPF.

    This always indicates a bug in a reduction, never a property of the
    input graph."""


# ---------------------------------------------------------------------------
# Triangle rings and bad graphs
# ---------------------------------------------------------------------------

@dataclass
class BadnessReport:
    is_triangle_ring: bool
    is_bad: bool
    hub: frozenset[int] | None = None
    # (subdivided ring edge in host labels, subdivision vertex, order-5 block)
    attachments: list[tuple[tuple[int, int], int, frozenset[int]]] = field(
        default_factory=list)


def _triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for u, v in g.sorted_edges():
        for w in g.adj[u]:
            if w > v and g.has_edge(v, w):
                out.append((u, v, w))
    return out


def _triangle_of(g: Graph, v: int) -> tuple[int, int] | None:
    """The other two vertices of a triangle containing v, or None."""
    nbrs = g.adj[v]
    for i in range(len(nbrs)):
        for j in range(i + 1, len(nbrs)):
            if g.has_edge(nbrs[i], nbrs[j]):
                return nbrs[i], nbrs[j]
    return None


def is_triangle_ring(g: Graph) -> bool:
    """A cycle of t = n/3 triangles joined into a ring by t single edges
    (two parallel joining edges when t = 2)."""
    n = g.n
    if n < 6 or n % 3 or not g.is_23_graph() or not g.is_connected():
        return False
    if len(g.edges) != n + n // 3:
        return False
    tris = _triangles(g)
    if len(tris) != n // 3:
        return False
    tri_of = {}
    for i, t in enumerate(tris):
        for v in t:
            if v in tri_of:
                return False  # triangles must be disjoint
            tri_of[v] = i
    if len(tri_of) != n:
        return False
    tri_edges = {tuple(sorted(p)) for t in tris for p in itertools.combinations(t, 2)}
    external = [e for e in g.sorted_edges() if e not in tri_edges]
    # each triangle carries exactly two external edges, at distinct vertices,
    # and the external edges connect the triangles into a single ring
    deg = [0] * len(tris)
    ends: dict[int, int] = {}
    ring_edges = []
    for u, v in external:
        if tri_of[u] == tri_of[v]:
            return False
        if u in ends or v in ends:
            return False  # at most one external edge per vertex
        ends[u] = ends[v] = 1
        deg[tri_of[u]] += 1
        deg[tri_of[v]] += 1
        ring_edges.append((tri_of[u], tri_of[v]))
    if any(d != 2 for d in deg):
        return False
    # connectivity of the triangle ring (multigraph; t=2 gives a double edge)
    seen = {0}
    frontier = [0]
    adjr: dict[int, list[int]] = {i: [] for i in range(len(tris))}
    for a, b in ring_edges:
        adjr[a].append(b)
        adjr[b].append(a)
    while frontier:
        x = frontier.pop()
        for y in adjr[x]:
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return len(seen) == len(tris)


def recognize_bad(g: Graph) -> BadnessReport:
    """Structural recognition of bad graphs.

    A bad graph is a triangle ring in which some set of non-triangle edges
    was each subdivided by a vertex carrying a bridge to a hamiltonian
    {2,3}-graph of order 5."""
    if not g.is_connected() or not g.is_23_graph():
        raise GraphError("badness is defined for connected {2,3}-graphs")
    if is_triangle_ring(g):
        return BadnessReport(True, True, hub=frozenset(range(g.n)))
    if g.n % 3 or g.n < 12:
        return BadnessReport(False, False)
    dec = block_decomposition(g)
    big = [b for b in dec.blocks if len(b) >= 6]
    small = [b for b in dec.blocks if len(b) < 6]
    if len(big) != 1 or any(len(b) != 5 for b in small):
        return BadnessReport(False, False)
    hub = big[0]
    covered = set().union(hub, *small) if small else set(hub)
    if len(covered) != g.n or sum(len(b) for b in dec.blocks) != g.n:
        return BadnessReport(False, False)
    for b in small:
        sub, _ = g.induced_subgraph(b)
        if not is_hamiltonian(sub):
            return BadnessReport(False, False)
    # every bridge must join a degree-2 vertex of an order-5 block to a
    # subdivision vertex on the hub
    if len(dec.bridges) != len(small):
        return BadnessReport(False, False)
    hub_sub, hub_o2n = g.induced_subgraph(hub)
    hub_n2o = {i: v for v, i in hub_o2n.items()}
    attachments = []
    att_local = []
    leaf_of_bridge = {}
    for u, v in sorted(dec.bridges):
        if v in hub and u not in hub:
            u, v = v, u
        if u not in hub or v in hub:
            return BadnessReport(False, False)
        leaf = next((b for b in small if v in b), None)
        if leaf is None:
            return BadnessReport(False, False)
        x = hub_o2n[u]
        if len(hub_sub.adj[x]) != 2:
            return BadnessReport(False, False)
        a, b = hub_sub.adj[x]
        if hub_sub.has_edge(a, b):
            return BadnessReport(False, False)
        att_local.append(x)
        leaf_of_bridge[x] = ((hub_n2o[a], hub_n2o[b]), u, leaf)
    if len(set(att_local)) != len(att_local):
        return BadnessReport(False, False)
    # suppress every subdivision vertex; the result must be a triangle ring
    # and each restored edge must not lie in one of its triangles
    keep = [v for v in range(hub_sub.n) if v not in att_local]
    restored = []
    for x in att_local:
        a, b = hub_sub.adj[x]
        if a in att_local or b in att_local:
            return BadnessReport(False, False)
        restored.append((min(a, b), max(a, b)))
    if len(set(restored)) != len(restored):
        return BadnessReport(False, False)
    remap = {v: i for i, v in enumerate(keep)}
    ring_edges = [(remap[u], remap[v]) for u, v in hub_sub.edges
                  if u in remap and v in remap]
    ring_edges += [(remap[a], remap[b]) for a, b in restored]
    try:
        ring = Graph(len(keep), ring_edges)
    except GraphError:
        return BadnessReport(False, False)
    if not is_triangle_ring(ring):
        return BadnessReport(False, False)
    for a, b in restored:
        ra, rb = remap[a], remap[b]
        if any(ring.has_edge(ra, w) and ring.has_edge(rb, w)
               for w in ring.adj[ra]):
            return BadnessReport(False, False)  # subdivided edge in a triangle
    for x in sorted(att_local):
        edge, u, leaf = leaf_of_bridge[x]
        attachments.append(((min(edge), max(edge)), u, leaf))
    return BadnessReport(False, True, hub=hub, attachments=attachments)


# ---------------------------------------------------------------------------
# Standardisation and the lift surgeries
# ---------------------------------------------------------------------------

def standardise(g: Graph, ipf: Ipf) -> Ipf:
    """Rewrite the IPF until it is standardised on every induced K4-minus
    subgraph; the path count never increases."""
    if not g.is_subcubic():
        raise GraphError("standardisation is defined for subcubic hosts")
    limit = len(induced_k4minus_subgraphs(g)) + 1
    for _ in range(limit):
        ok, failing = is_standardised(g, ipf)
        if ok:
            return ipf
        a, b, c, d = failing[0]
        eh = {tuple(sorted(p)) for p in
              ((a, c), (a, d), (b, c), (b, d), (c, d))}
        paths = ipf.paths()
        path_of = {}
        for i, p in enumerate(paths):
            for v in p:
                path_of[v] = i
        same_ab = path_of[a] == path_of[b]
        ab_path = set(paths[path_of[a]])
        if not same_ab or c in ab_path or d in ab_path:
            new_edges = (ipf.edges - eh) | {tuple(sorted((a, c))),
                                            tuple(sorted((b, d)))}
        else:
            # a and b share a path avoiding c,d; the path must leave b
            # through its single neighbour outside the K4-minus
            outside = [w for w in g.adj[b] if w not in (c, d)]
            assert len(outside) == 1
            e = outside[0]
            new_edges = (ipf.edges - eh - {tuple(sorted((b, e)))}) \
                | {tuple(sorted((a, c))), tuple(sorted((b, d)))}
        nxt = Ipf.from_edges(g, new_edges)
        if nxt.path_count > ipf.path_count:
            raise ConstructionError("standardisation increased the path count")
        ipf = nxt
    raise ConstructionError("standardisation did not converge")


def _endpoints(ipf: Ipf) -> dict[int, int]:
    """Map endpoint vertex -> index of its path."""
    out = {}
    for i, p in enumerate(ipf.paths()):
        out[p[0]] = i
        out[p[-1]] = i
    return out


def lift(g: Graph, g_prime: Graph, record: SurgeryRecord,
         ipf_prime: Ipf) -> Ipf:
    """Pull an IPF back through an augment/paste/suppress surgery.

    Path count guarantees: unchanged for augment_triangle and
    paste_k4minus, at most one more for suppress_vertex.  Endpoint
    guarantees: a path ends at the triangle's degree-2 vertex (augment),
    two distinct paths end at the pasted edge's endpoints (paste), a path
    ends at the suppressed vertex (suppress)."""
    redone, rerec = surgery(g, record.kind, *record.args)
    if redone.n != g_prime.n or redone.edges != g_prime.edges:
        raise ConstructionError(
            f"surgery record {record.kind}{record.args} does not transform "
            "the first graph into the second")
    star = standardise(g_prime, ipf_prime)
    if record.kind == "augment_triangle":
        a, b, c = record.args
        d = g.n
        edges = {e for e in star.edges if d not in e}
        out = Ipf.from_edges(g, edges)
        if out.path_count > ipf_prime.path_count:
            raise ConstructionError("augment lift increased the path count")
        if c not in _endpoints(out):
            raise ConstructionError(f"augment lift: no path ends at {c}")
        return out
    if record.kind == "paste_k4minus":
        a, b = record.args
        edges = {e for e in star.edges if e[0] < g.n and e[1] < g.n}
        out = Ipf.from_edges(g, edges)
        if out.path_count > ipf_prime.path_count:
            raise ConstructionError("paste lift increased the path count")
        ends = _endpoints(out)
        if a not in ends or b not in ends or ends[a] == ends[b]:
            raise ConstructionError(
                f"paste lift: need distinct paths ending at {a} and {b}")
        return out
    if record.kind == "suppress_vertex":
        (c,) = record.args
        n2o = {i: v for v, i in record.old_to_new.items()}
        mapped = {tuple(sorted((n2o[u], n2o[v]))) for u, v in star.edges}
        a, b = g.adj[c]
        ab = (min(a, b), max(a, b))
        if ab in mapped:
            edges = (mapped - {ab}) | {tuple(sorted((c, a)))}
        else:
            edges = mapped
        out = Ipf.from_edges(g, edges)
        if out.path_count > ipf_prime.path_count + 1:
            raise ConstructionError("suppress lift exceeded count + 1")
        if c not in _endpoints(out):
            raise ConstructionError(f"suppress lift: no path ends at {c}")
        return out
    raise ConstructionError(f"lift does not support surgery {record.kind!r}")


# ---------------------------------------------------------------------------
# Small hamiltonian hosts
# ---------------------------------------------------------------------------

def _rotate_to(cycle: list[int], x: int) -> list[int]:
    i = cycle.index(x)
    return cycle[i:] + cycle[:i]


def ipf_small_ham(c: Graph, x: int | None = None) -> Ipf:
    """Two-path IPFs of hamiltonian {2,3}-graphs of order 5, 6 or 7, with
    a path ending at the degree-2 vertex x.

    Order-6 cubic hosts take x=None and get any 2-path IPF.  The single
    order-7 exception (a 6-vertex triangle ring with a non-triangle edge
    subdivided) yields 3 paths."""
    n = c.n
    if n not in (5, 6, 7):
        raise GraphError(f"host order must be 5, 6 or 7, got {n}")
    if not c.is_23_graph():
        raise GraphError("host must be a {2,3}-graph")
    if x is None:
        if not (n == 6 and c.is_cubic()):
            raise GraphError("x may be omitted only for order-6 cubic hosts")
        res = rho_exhaustive(c)
        if res.rho != 2:
            raise ConstructionError("order-6 cubic host has no 2-path IPF")
        return res.witness
    if c.degree(x) != 2:
        raise GraphError(f"vertex {x} must have degree 2")
    cyc = hamilton_cycle(c)
    if cyc is None:
        raise GraphError("host is not hamiltonian")
    cyc = _rotate_to(cyc, x)

    if n in (5, 6):
        # shortest prefix of the cycle whose complement arc is also induced;
        # prefer prefixes whose interior vertices all have degree 3
        candidates = []
        for length in range(0, n - 1):
            for order in (cyc, [cyc[0]] + cyc[:0:-1]):
                first = order[:length + 1]
                second = order[length + 1:]
                try:
                    ipf = Ipf.from_paths(c, [p for p in (first, second) if p])
                except Exception:
                    continue
                exempt = 1 if n == 5 else 2  # order 6 may break at x's neighbour
                if all(c.degree(v) == 3 for v in first[exempt:]):
                    return ipf
                candidates.append(ipf)
        if candidates:
            return candidates[0]
        raise ConstructionError("no cycle split found on a small host")

    # order 7: explicit cases on the chords x1x3, x4x6, x2x5
    lab = cyc
    if c.has_edge(lab[4], lab[6]) and not c.has_edge(lab[1], lab[3]):
        lab = [lab[0]] + lab[:0:-1]  # mirror so any single chord is x1x3
    x0, x1, x2, x3, x4, x5, x6 = lab
    e13 = c.has_edge(x1, x3)
    e46 = c.has_edge(x4, x6)
    e25 = c.has_edge(x2, x5)
    if e13 and e46 and e25:
        paths = [[x0, x1, x2, x5], [x3, x4, x6]]
    elif e13 and e46:
        paths = [[x0, x1], [x2, x3, x4], [x5, x6]]
    elif e13:
        paths = [[x0, x1, x2], [x3, x4, x5, x6]]
    else:
        paths = [[x0, x1, x2, x3], [x4, x5, x6]]
    return Ipf.from_paths(c, paths)


def _two_path_ipf_with_ends(g: Graph, x: int, y: int) -> Ipf:
    """Brute-force 2-path IPF with distinct paths ending at x and y
    (small hosts only)."""
    edges = g.sorted_edges()
    for combo in itertools.combinations(edges, g.n - 2):
        try:
            ipf = Ipf.from_edges(g, combo)
        except Exception:
            continue
        ends = _endpoints(ipf)
        if x in ends and y in ends and ends[x] != ends[y]:
            return ipf
    raise ConstructionError(
        f"no 2-path IPF with ends {x},{y} on a {g.n}-vertex host")


# ---------------------------------------------------------------------------
# Hamiltonian {2,3}-graphs: greedy construction with repair
# ---------------------------------------------------------------------------

def _cyclic_dist(i: int, j: int, n: int) -> int:
    d = abs(i - j) % n
    return min(d, n - d)


def _label_for_greedy(g: Graph, cyc: list[int]) -> list[int]:
    """Relabel the hamilton cycle as x_1..x_n so that x_n x_k is a shortest
    chord (k = cyclic chord length), with the extra orientation conditions
    needed for k = 2 and k = 3."""
    n = g.n
    pos = {v: i for i, v in enumerate(cyc)}
    chords = [e for e in g.sorted_edges()
              if _cyclic_dist(pos[e[0]], pos[e[1]], n) > 1]
    assert chords
    k = min(_cyclic_dist(pos[u], pos[v], n) for u, v in chords)
    u, v = min(e for e in chords if _cyclic_dist(pos[e[0]], pos[e[1]], n) == k)

    def labelled(start_v: int, step: int) -> list[int]:
        i = pos[start_v]
        return [cyc[(i + step * t) % n] for t in range(n)]

    # two labellings place the chord as x_n x_k with the short arc between
    options = []
    for a, b in ((u, v), (v, u)):
        # x_n = a, x_1..x_k runs along the short arc towards b
        step = 1 if (pos[a] + k) % n == pos[b] else -1
        if (pos[a] + step * k) % n == pos[b]:
            lab = labelled(a, step)
            options.append(lab[1:] + [lab[0]])  # shift so a is x_n (index n-1)
    assert options
    if k == 2:
        half = (n + 1) // 2
        for lab in options:
            x1 = lab[0]
            if not any(g.has_edge(x1, lab[i - 1]) for i in range(3, half + 1)):
                return lab
        raise ConstructionError("no orientation satisfies the k=2 condition")
    if k == 3:
        lab = options[0]
        for shift in range(3):
            cur = lab[shift:] + lab[:shift]
            # the chord x_n x_3 must still be present after the shift
            if not g.has_edge(cur[n - 1], cur[2]):
                continue
            if not g.has_edge(cur[0], cur[3]):
                return cur
        raise ConstructionError("no shift satisfies the k=3 condition")
    return options[0]


def _greedy_paths(g: Graph, lab: list[int]) -> list[list[int]]:
    """Maximal induced prefixes along the labelled order (no wrap-around)."""
    paths = []
    i = 0
    n = g.n
    while i < n:
        path = [lab[i]]
        j = i + 1
        while j < n:
            v = lab[j]
            if not g.has_edge(path[-1], v):
                break
            if any(g.has_edge(v, w) for w in path[:-1]):
                break
            path.append(v)
            j += 1
        paths.append(path)
        i = j
    return paths


def ipf_ham23(g: Graph) -> Ipf:
    """IPF of a hamiltonian {2,3}-graph of order >= 6 with at most n/3
    paths, and at most (n-1)/3 when n >= 7 and the graph is not bad
    (the only bad hamiltonian graphs are triangle rings)."""
    n = g.n
    if n < 6:
        raise GraphError("ipf_ham23 requires order >= 6")
    if not g.is_23_graph():
        raise GraphError("ipf_ham23 requires a {2,3}-graph")
    if n == 6:
        if g.is_cubic():
            out = ipf_small_ham(g)
        else:
            x = next(v for v in range(n) if g.degree(v) == 2)
            out = ipf_small_ham(g, x)
        return out
    cyc = hamilton_cycle(g)
    if cyc is None:
        raise GraphError("ipf_ham23 requires a hamiltonian host")
    if len(g.edges) == n:
        # pure cycle: drop one vertex's edges
        return Ipf.from_paths(g, [cyc[:-1], [cyc[-1]]])
    lab = _label_for_greedy(g, cyc)
    paths = _greedy_paths(g, lab)
    ipf = Ipf.from_paths(g, paths)
    ring = is_triangle_ring(g)
    if ipf.path_count * 3 <= n - 1 or ring:
        if ipf.path_count * 3 > n:
            raise ConstructionError("greedy construction exceeded n/3 paths")
        return ipf
    # greedy hit n/3 on a non-ring host: a triangle-ring skeleton is present
    # and some extra chord x_a x_b with a,b = 1 (mod 3) allows a repair
    assert n % 3 == 0 and ipf.path_count * 3 == n
    idx = {v: i + 1 for i, v in enumerate(lab)}  # 1-based labels

    def vert(i: int) -> int:
        return lab[(i - 1) % n]

    spots = [i for i in range(1, n - 1) if i % 3 == 1]
    pair = None
    for a in spots:
        for b in spots:
            if b > a and g.has_edge(vert(a), vert(b)):
                pair = (a, b)
                break
        if pair:
            break
    if pair is None:
        raise ConstructionError("no repair chord found on a non-ring host")
    a, b = pair
    if n == 9:
        # rotate in steps of 3 so the extra chord is x_1 x_4
        for shift in (0, 3, 6):
            sa = [((i - 1 + shift) % 9) + 1 for i in (1, 4)]
            if g.has_edge(vert(sa[0]), vert(sa[1])) \
                    and (sa[0] % 3, sa[1] % 3) == (1, 1) \
                    and (sa[1] - sa[0]) % 9 == 3:
                s = shift
                break
        else:
            raise ConstructionError("n=9 repair: no aligned chord")
        def sv(i: int) -> int:
            return vert(i + s)
        paths2 = [[sv(8), sv(9), sv(1), sv(4)],
                  [sv(2), sv(3), sv(5), sv(6), sv(7)]]
        out = Ipf.from_paths(g, paths2)
    else:
        assert n >= 12
        cyc_edges = {tuple(sorted((vert(i), vert(i + 1)))) for i in range(1, n + 1)}
        drop = {tuple(sorted((vert(i), vert(i + 1)))) for i in range(1, n - 1, 3)}
        base = cyc_edges - drop
        base -= {tuple(sorted((vert(a - 1), vert(a)))),
                 tuple(sorted((vert(b - 1), vert(b))))}
        base |= {tuple(sorted((vert(a - 1), vert(a + 1)))),
                 tuple(sorted((vert(b - 1), vert(b + 1)))),
                 tuple(sorted((vert(a), vert(b))))}
        out = Ipf.from_edges(g, base)
    if out.path_count * 3 > n - 3:
        raise ConstructionError("repair did not reduce the path count")
    return out


# ---------------------------------------------------------------------------
# Block trees of hamiltonian blocks
# ---------------------------------------------------------------------------

def _sub(g: Graph, verts):
    sub, o2n = g.induced_subgraph(verts)
    n2o = {i: v for v, i in o2n.items()}
    return sub, o2n, n2o


def _edges_up(edges, n2o):
    return {tuple(sorted((n2o[u], n2o[v]))) for u, v in edges}


def _blocktree_hypotheses(g: Graph):
    """Blocks of order >= 5, hamiltonian, vertex sets partitioning V;
    returns the decomposition or None."""
    if g.n < 6 or not g.is_23_graph() or not g.is_connected():
        return None
    dec = block_decomposition(g)
    if not dec.blocks:
        return None
    covered = 0
    for b in dec.blocks:
        if len(b) < 5:
            return None
        covered += len(b)
        sub, _ = g.induced_subgraph(b)
        if not is_hamiltonian(sub):
            return None
    if covered != g.n:
        return None
    return dec


def _allowed_bound(g: Graph) -> int:
    """Maximum path count promised for a block-tree host."""
    if g.n >= 7 and not recognize_bad(g).is_bad:
        return (g.n - 1) // 3
    return g.n // 3


def _bridge_sides(g: Graph, bridge):
    parts = g.without_edges([bridge]).components()
    assert len(parts) == 2
    side0 = next(p for p in parts if bridge[0] in p)
    side1 = next(p for p in parts if bridge[0] not in p)
    return set(side0), set(side1)


def ipf_blocktree(g: Graph) -> Ipf:
    """Well-behaved IPF of a connected {2,3}-graph whose blocks are
    hamiltonian, have order >= 5 and partition the vertex set.

    Path count is at most (n-1)/3 when n >= 7 and the host is not bad,
    and at most n/3 otherwise."""
    dec = _blocktree_hypotheses(g)
    if dec is None:
        raise GraphError("host does not satisfy the block-tree hypotheses")
    out = _blocktree_inner(g, dec)
    if out.path_count > _allowed_bound(g):
        raise ConstructionError(
            f"block-tree construction used {out.path_count} paths, "
            f"allowed {_allowed_bound(g)}")
    wb = is_well_behaved(g, out)
    if not wb.verdict:
        raise ConstructionError(
            f"block-tree IPF is not well-behaved: {wb.witnesses[:1]}")
    return out


def _blocktree_inner(g: Graph, dec) -> Ipf:
    n = g.n
    if len(dec.blocks) == 1:
        return ipf_ham23(g)
    if n <= 12:
        return _two_block_assembly(g, dec)
    # a bridge whose larger side is not bad lets the two sides recurse freely
    for bridge in sorted(dec.bridges):
        s0, s1 = _bridge_sides(g, bridge)
        for sa, sb in ((s0, s1), (s1, s0)):
            if len(sa) < 7 or len(sb) < 6:
                continue
            ga, _, a_n2o = _sub(g, sa)
            if recognize_bad(ga).is_bad:
                continue
            gb, _, b_n2o = _sub(g, sb)
            pa = ipf_blocktree(ga)
            pb = ipf_blocktree(gb)
            edges = _edges_up(pa.edges, a_n2o) | _edges_up(pb.edges, b_n2o)
            return Ipf.from_edges(g, edges)
    # a bridge with both sides of order >= 6: each side is order 6 or bad,
    # and the bad-side endpoint lies in a triangle of its hub
    for bridge in sorted(dec.bridges):
        s0, s1 = _bridge_sides(g, bridge)
        if len(s0) < 6 or len(s1) < 6:
            continue
        return _bad_bridge_assembly(g, bridge, s0, s1)
    return _star_assembly(g, dec)


def _two_block_assembly(g: Graph, dec) -> Ipf:
    assert len(dec.blocks) == 2 and len(dec.bridges) == 1
    (bridge,) = dec.bridges
    b0, b1 = dec.blocks
    if len(b0) < len(b1):
        b0, b1 = b1, b0
    x0 = bridge[0] if bridge[0] in b0 else bridge[1]
    x1 = bridge[1] if bridge[0] in b0 else bridge[0]
    edges = {bridge}
    for blk, x in ((b0, x0), (b1, x1)):
        sub, o2n, n2o = _sub(g, blk)
        p = ipf_small_ham(sub, o2n[x])
        edges |= _edges_up(p.edges, n2o)
    return Ipf.from_edges(g, edges)


def _bad_bridge_assembly(g: Graph, bridge, s0, s1) -> Ipf:
    # orient so side a is bad (order >= 9); side b is order 6 or also bad
    ga, _, _ = _sub(g, s0)
    if recognize_bad(ga).is_bad:
        sa, sb = s0, s1
    else:
        sa, sb = s1, s0
    xa = bridge[0] if bridge[0] in sa else bridge[1]
    xb = bridge[1] if bridge[0] in sa else bridge[0]
    ga, a_o2n, _ = _sub(g, sa)
    bad_a = recognize_bad(ga)
    if not bad_a.is_bad:
        raise ConstructionError("bridge assembly expected a bad side")
    hub_a = {v for v in sa if a_o2n[v] in bad_a.hub}
    if xa not in hub_a or _triangle_of(ga, a_o2n[xa]) is None:
        raise ConstructionError("bad-side bridge endpoint not in a hub triangle")
    ga_minus, _, am_n2o = _sub(g, sa - {xa})
    pa = ipf_blocktree(ga_minus)
    edges = _edges_up(pa.edges, am_n2o) | {bridge}
    if len(sb) == 6:
        gb, b_o2n, b_n2o = _sub(g, sb)
        pb = ipf_small_ham(gb, b_o2n[xb])
        edges |= _edges_up(pb.edges, b_n2o)
    else:
        gb, b_o2n, _ = _sub(g, sb)
        bad_b = recognize_bad(gb)
        if not bad_b.is_bad:
            raise ConstructionError("expected the second side to be bad")
        hub_b = {v for v in sb if b_o2n[v] in bad_b.hub}
        if xb not in hub_b or _triangle_of(gb, b_o2n[xb]) is None:
            raise ConstructionError("second bridge endpoint not in a hub triangle")
        gb_minus, _, bm_n2o = _sub(g, sb - {xb})
        pb = ipf_blocktree(gb_minus)
        edges |= _edges_up(pb.edges, bm_n2o)
    return Ipf.from_edges(g, edges)


def _star_assembly(g: Graph, dec) -> Ipf:
    """Host shaped as a central block C with order-5 leaf blocks attached
    by bridges (the only shape left once bridge splits are exhausted)."""
    n = g.n
    # every bridge must hang a whole order-5 block off the centre
    leaves = []  # (x on C, y on leaf, leaf vertex set)
    leaf_sets = []
    for bridge in sorted(dec.bridges):
        s0, s1 = _bridge_sides(g, bridge)
        if len(s0) == 5:
            leaf, x = s0, (bridge[0] if bridge[0] in s1 else bridge[1])
        elif len(s1) == 5:
            leaf, x = s1, (bridge[0] if bridge[0] in s0 else bridge[1])
        else:
            raise ConstructionError("star assembly expected order-5 leaf sides")
        y = bridge[0] if bridge[0] in leaf else bridge[1]
        if not any(leaf == set(b) for b in dec.blocks):
            raise ConstructionError("leaf side is not a single block")
        leaves.append((x, y, frozenset(leaf)))
        leaf_sets.append(frozenset(leaf))
    centre = [b for b in dec.blocks if b not in leaf_sets]
    if len(centre) != 1:
        raise ConstructionError("star assembly expected a single centre block")
    C = centre[0]
    csub, c_o2n, c_n2o = _sub(g, C)
    xs = [x for x, _, _ in leaves]

    def leaf_ipf_edges(x, y, leaf):
        sub, o2n, n2o = _sub(g, leaf)
        p = ipf_small_ham(sub, o2n[y])
        return _edges_up(p.edges, n2o) | {tuple(sorted((x, y)))}

    # two adjacent attachment vertices: cut both leaves off and paste a
    # K4-minus over the edge between them
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            if not g.has_edge(xs[i], xs[j]):
                continue
            x1, y1, l1 = leaves[i]
            x2, y2, l2 = leaves[j]
            g0, o2n0, n2o0 = _sub(g, set(range(n)) - l1 - l2)
            g0p, rec = paste_k4minus(g0, o2n0[x1], o2n0[x2])
            p0 = lift(g0, g0p, rec, ipf_blocktree(g0p))
            edges = _edges_up(p0.edges, n2o0)
            edges |= leaf_ipf_edges(x1, y1, l1) | leaf_ipf_edges(x2, y2, l2)
            return Ipf.from_edges(g, edges)

    if len(C) == 5:
        # centre C5 with two leaves at cycle distance 2
        if len(leaves) != 2:
            raise ConstructionError("order-5 centre must carry two leaves")
        x1, y1, l1 = leaves[0]
        x2, y2, l2 = leaves[1]
        cyc = [c_n2o[v] for v in hamilton_cycle(csub)]
        cyc = _rotate_to(cyc, x1)
        if cyc[2] != x2:
            cyc = [cyc[0]] + cyc[:0:-1]
        if cyc[2] != x2:
            raise ConstructionError("centre attachments not at distance 2")
        u, v, w = cyc[1], cyc[3], cyc[4]
        edges = leaf_ipf_edges(x1, y1, l1) | leaf_ipf_edges(x2, y2, l2)
        edges |= {tuple(sorted((u, x1))), tuple(sorted((u, x2))),
                  tuple(sorted((v, w)))}
        return Ipf.from_edges(g, edges)

    # an attachment vertex inside a triangle of C: delete it with its leaf
    for x, y, leaf in leaves:
        if _triangle_of(csub, c_o2n[x]) is None:
            continue
        g0, _, n2o0 = _sub(g, set(range(n)) - leaf - {x})
        p0 = ipf_blocktree(g0)
        edges = _edges_up(p0.edges, n2o0) | leaf_ipf_edges(x, y, leaf)
        return Ipf.from_edges(g, edges)

    # no attachment vertex in a triangle: suppress the first one
    x1, y1, l1 = leaves[0]
    g0, o2n0, n2o0 = _sub(g, set(range(n)) - l1)
    g0p, rec = suppress_vertex(g0, o2n0[x1])
    if not recognize_bad(g0p).is_bad or recognize_bad(g).is_bad:
        p0 = lift(g0, g0p, rec, ipf_blocktree(g0p))
        edges = _edges_up(p0.edges, n2o0) | leaf_ipf_edges(x1, y1, l1)
        return Ipf.from_edges(g, edges)
    # suppression produced a bad graph while the host is not bad: the
    # suppressed vertex subdivided a triangle edge of the bad hub
    u, v = (w for w in g.adj[x1] if w != y1)
    ulp = rec.old_to_new[o2n0[u]]
    vlp = rec.old_to_new[o2n0[v]]
    if not any(g0p.has_edge(ulp, t) and g0p.has_edge(vlp, t)
               for t in g0p.adj[ulp]):
        raise ConstructionError("suppressed edge not in a hub triangle")
    if len(g0p.adj[ulp]) == 3 and len(g0p.adj[vlp]) == 3:
        # the edge closes its triangle: drop the vertex and recurse
        g2, _, n2o2 = _sub(g, set(range(n)) - l1 - {x1})
        p2 = ipf_blocktree(g2)
        edges = _edges_up(p2.edges, n2o2) | leaf_ipf_edges(x1, y1, l1)
        return Ipf.from_edges(g, edges)
    # the edge lies on the hub's hamilton cycle: one endpoint has degree 2
    if len(g0p.adj[ulp]) == 2:
        u, v = v, u
    g2, _, n2o2 = _sub(g, set(range(n)) - l1 - {x1, v})
    p2 = ipf_blocktree(g2)
    edges = _edges_up(p2.edges, n2o2) | leaf_ipf_edges(x1, y1, l1)
    edges |= {tuple(sorted((v, x1)))}
    return Ipf.from_edges(g, edges)


# ---------------------------------------------------------------------------
# {2,3}-graphs with a long-cycle 2-factor
# ---------------------------------------------------------------------------

def ipf_23_with_2factor(g: Graph, f: TwoFactor) -> Ipf:
    """IPF with at most n/3 paths (bad host) or (n-1)/3 paths (otherwise)
    for a connected {2,3}-graph with a 2-factor whose cycles have length
    at least 5.

    The 2-factor should have the minimum number of cycles among such
    factors; the final verification on the host catches any violation of
    the induced property that a non-minimal factor could cause."""
    if g.n < 7:
        raise GraphError("the 2-factor construction requires order >= 7")
    if not g.is_connected() or not g.is_23_graph():
        raise GraphError("host must be a connected {2,3}-graph")
    f.validate(g)
    if any(len(c) < 5 for c in f.cycles):
        raise GraphError("all 2-factor cycles must have length >= 5")
    if _blocktree_hypotheses(g) is not None:
        return ipf_blocktree(g)
    cycle_of = {}
    for i, cyc in enumerate(f.cycles):
        for v in cyc:
            cycle_of[v] = i
    S = [e for e in g.sorted_edges() if cycle_of[e[0]] != cycle_of[e[1]]]
    S_prime: list[tuple[int, int]] = []
    for e in S:
        if g.is_connected_without_edges(S_prime + [e]):
            S_prime.append(e)
    if not S_prime:
        raise ConstructionError("no removable inter-cycle edges found")
    reduced = g.without_edges(S_prime)
    removed = set(S_prime)
    bad = recognize_bad(reduced)
    if bad.is_bad:
        # swap: re-add one removed inter-cycle edge and cut the bridge that
        # ties its order-5 block to the hub, leaving a degree-2 hub vertex
        # outside any triangle
        u, v = S_prime[0]
        dec = block_decomposition(reduced)
        blk_u = next((b for b in dec.blocks if u in b), None)
        if blk_u is None or len(blk_u) != 5:
            u, v = v, u
            blk_u = next((b for b in dec.blocks if u in b), None)
        if blk_u is None or len(blk_u) != 5:
            raise ConstructionError("swap edge has no order-5 endpoint block")
        wx = next(br for br in sorted(dec.bridges)
                  if (br[0] in bad.hub) != (br[0] in blk_u)
                  and (br[0] in blk_u or br[1] in blk_u)
                  and (br[0] in bad.hub or br[1] in bad.hub))
        removed = (removed | {wx}) - {(min(u, v), max(u, v))}
        reduced = g.without_edges(removed)
        if not reduced.is_connected():
            raise ConstructionError("swap disconnected the host")
        if recognize_bad(reduced).is_bad:
            raise ConstructionError("swap did not remove badness")
    p = ipf_blocktree(reduced)
    out = Ipf.from_edges(g, p.edges)  # re-verify against the full edge set
    limit = g.n // 3 if recognize_bad(g).is_bad else (g.n - 1) // 3
    if out.path_count > limit:
        raise ConstructionError(
            f"2-factor construction used {out.path_count} paths, allowed {limit}")
    return out


# ---------------------------------------------------------------------------
# Connected cubic graphs
# ---------------------------------------------------------------------------

@dataclass
class Certificate:
    """A verified IPF of a connected cubic graph with its promised bound:
    2 paths for order at most 6, (n-1)/3 paths beyond."""
    graph6: str
    n: int
    bound: str
    ipf: Ipf
    verified: bool
    trace: list[str]

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "bound": self.bound,
            "ipf": self.ipf.to_json_fragment(),
            "verified": self.verified,
            "trace": list(self.trace),
        }


def ipf_cubic(g: Graph) -> Certificate:
    """IPF of a connected cubic graph with at most 2 paths (n <= 6) or
    (n-1)/3 paths (n > 6)."""
    if not g.is_connected() or not g.is_cubic():
        raise GraphError("host must be a connected cubic graph")
    ipf, trace = _cubic_recurse(g)
    limit = 2 if g.n <= 6 else (g.n - 1) // 3
    if ipf.path_count > limit:
        raise ConstructionError(
            f"cubic construction used {ipf.path_count} paths, allowed {limit}")
    return Certificate(
        graph6=write_graph6(g),
        n=g.n,
        bound="2" if g.n <= 6 else "(n-1)/3",
        ipf=ipf,
        verified=True,
        trace=trace,
    )


def _cubic_recurse(g: Graph) -> tuple[Ipf, list[str]]:
    if g.n <= 6:
        res = rho_exhaustive(g)
        if res.rho != 2:
            raise ConstructionError(
                f"small cubic host needs {res.rho} paths, expected 2")
        return res.witness, ["base-small"]
    dec = block_decomposition(g)
    if dec.bridges:
        return _cubic_bridge_split(g, min(sorted(dec.bridges)))
    # hamiltonian hosts go straight through the single-cycle 2-factor;
    # this also guarantees order >= 14 below, which the K4- reduction needs
    # for its remainder (the only smaller bridgeless nonhamiltonian cubic
    # graphs are the Petersen and Tietze graphs, and neither contains an
    # induced K4-)
    cyc = hamilton_cycle(g)
    if cyc is not None:
        return ipf_23_with_2factor(g, TwoFactor.from_cycles([cyc])), \
            ["two-factor"]
    if g.n >= 14:
        hit = _find_reducible_k4minus(g)
        if hit is not None:
            return _cubic_k4minus(g, hit)
    lad = ladder_decomposition(g)
    if lad is not None:
        return _cubic_ladder(g, lad)
    f = two_factor_search(g, min_cycle_len=5, minimize_cycles=True)
    if f is None:
        raise ConstructionError(
            "3-connected cubic host without a 2-factor of long cycles")
    return ipf_23_with_2factor(g, f), ["two-factor"]


def _cubic_bridge_split(g: Graph, bridge) -> tuple[Ipf, list[str]]:
    """Split at a bridge; each side has exactly one degree-2 vertex (the
    bridge endpoint) and contributes an IPF with a path ending there."""
    s0, s1 = _bridge_sides(g, bridge)
    edges = {bridge}
    trace = ["bridge-split"]
    for side in (s0, s1):
        x = bridge[0] if bridge[0] in side else bridge[1]
        sub, o2n, n2o = _sub(g, side)
        xl = o2n[x]
        ni = len(side)
        if ni in (5, 7):
            # a cubic bridge side has exactly one degree-2 vertex, so the
            # order-7 host with three of them cannot occur here
            p = ipf_small_ham(sub, xl)
            if p.path_count != 2:
                raise ConstructionError(
                    "small bridge side did not yield a 2-path IPF")
        else:
            tri = _triangle_of(sub, xl)
            if tri is not None:
                nxt, rec = augment_triangle(sub, tri[0], tri[1], xl)
            else:
                nxt, rec = suppress_vertex(sub, xl)
            inner, tr = _cubic_recurse(nxt)
            trace += tr
            p = lift(sub, nxt, rec, inner)
            if 3 * p.path_count > ni + 1:
                raise ConstructionError("bridge side exceeded (n+1)/3 paths")
        edges |= _edges_up(p.edges, n2o)
    return Ipf.from_edges(g, edges), trace


def _find_reducible_k4minus(g: Graph):
    """First induced K4- whose two outside neighbours are distinct and
    nonadjacent, with a connected remainder.

    When the outside neighbours coincide or are adjacent the K4- hangs off
    a bridge or a 2-edge-cut, which the other reductions handle."""
    for a, b, c, d in induced_k4minus_subgraphs(g):
        x0 = next(w for w in g.adj[a] if w not in (c, d))
        y0 = next(w for w in g.adj[b] if w not in (c, d))
        if x0 == y0 or g.has_edge(x0, y0):
            continue
        keep = set(range(g.n)) - {a, b, c, d}
        sub, _ = g.induced_subgraph(keep)
        if sub.is_connected():
            return a, b, c, d, x0, y0
    return None


def _cubic_k4minus(g: Graph, hit) -> tuple[Ipf, list[str]]:
    """Cut out an induced K4- and repair the two degree-2 leftovers, each
    by a triangle augmentation or a suppression; recurse, lift both
    repairs back, and route the K4- as two path ends."""
    a, b, c, d, x0, y0 = hit
    trace = ["k4minus-reduction"]
    g0, o2n, n2o = _sub(g, set(range(g.n)) - {a, b, c, d})
    graphs = [g0]
    recs = []
    y_cur = o2n[y0]
    for z in (o2n[x0], None):
        cur = graphs[-1]
        if z is None:
            z = y_cur
        tri = _triangle_of(cur, z)
        if tri is not None:
            nxt, rec = augment_triangle(cur, tri[0], tri[1], z)
        else:
            nxt, rec = suppress_vertex(cur, z)
        # y0 still needs repairing after x0's surgery; track its new index
        y_cur = rec.old_to_new.get(y_cur, y_cur)
        graphs.append(nxt)
        recs.append(rec)
    inner, tr = _cubic_recurse(graphs[-1])
    trace += tr
    p = inner
    for i in range(len(recs) - 1, -1, -1):
        p = lift(graphs[i], graphs[i + 1], recs[i], p)
    x0l, y0l = o2n[x0], o2n[y0]
    ends = _endpoints(p)
    if x0l not in ends or y0l not in ends:
        raise ConstructionError(
            "K4- reduction lost a required path end at an outside neighbour")
    if ends[x0l] == ends[y0l]:
        # both ends landed on one path: reroute the end edge at y0 to its
        # other neighbour so the ends sit on distinct paths
        path = p.paths()[ends[y0l]]
        u = path[1] if path[0] == y0l else path[-2]
        (v,) = (w for w in g0.adj[y0l] if w != u)
        swapped = (p.edges - {tuple(sorted((y0l, u)))}) \
            | {tuple(sorted((y0l, v)))}
        p = Ipf.from_edges(g0, swapped)
        ends = _endpoints(p)
        if x0l not in ends or y0l not in ends or ends[x0l] == ends[y0l]:
            raise ConstructionError(
                "K4- reduction could not separate the outside path ends")
    edges = _edges_up(p.edges, n2o)
    edges |= {tuple(sorted(e)) for e in ((x0, a), (a, c), (y0, b), (b, d))}
    return Ipf.from_edges(g, edges), trace


def _chain_edges(path) -> set[tuple[int, int]]:
    return {tuple(sorted(e)) for e in zip(path, path[1:])}


def _cubic_ladder(g: Graph, lad) -> tuple[Ipf, list[str]]:
    """Reassemble across a 2-edge-cut (a ladder of s rungs between two
    cubic-with-two-degree-2-vertices sides)."""
    trace = ["two-edge-cut"]
    s = lad.s
    sides = []
    for verts, x, y in ((lad.g1_vertices, lad.u_path[0], lad.v_path[0]),
                        (lad.g2_vertices, lad.u_path[-1], lad.v_path[-1])):
        sub, o2n, n2o = _sub(g, verts)
        xl, yl = o2n[x], o2n[y]
        ni = len(verts)
        if ni in (4, 6):
            p = _two_path_ipf_with_ends(sub, xl, yl)
            distinct = True
        else:
            closed = sub.with_edges([(xl, yl)])
            inner, tr = _cubic_recurse(closed)
            trace += tr
            xy = (min(xl, yl), max(xl, yl))
            if xy in inner.edges:
                p = Ipf.from_edges(sub, inner.edges - {xy})
                distinct = True
            else:
                p = Ipf.from_edges(sub, inner.edges)
                ends = _endpoints(p)
                distinct = (xl in ends and yl in ends and ends[xl] != ends[yl])
            if 3 * p.path_count > ni + 2:
                raise ConstructionError("ladder side exceeded (n+2)/3 paths")
        sides.append({"p": p, "distinct": distinct, "verts": verts,
                      "sub": sub, "o2n": o2n, "n2o": n2o, "ni": ni,
                      "x": x, "y": y, "xl": xl, "yl": yl})
    s1, s2 = sides
    small = [3 * t["p"].path_count <= t["ni"] - 1 for t in sides]
    if s1["distinct"] and s2["distinct"]:
        edges = _edges_up(s1["p"].edges, s1["n2o"]) \
            | _edges_up(s2["p"].edges, s2["n2o"]) \
            | _chain_edges(lad.u_path) | _chain_edges(lad.v_path)
        return Ipf.from_edges(g, edges), trace
    if s <= 2 and small[0] and small[1]:
        edges = _edges_up(s1["p"].edges, s1["n2o"]) \
            | _edges_up(s2["p"].edges, s2["n2o"])
        if s == 2:
            edges |= {tuple(sorted((lad.u_path[1], lad.v_path[1])))}
        return Ipf.from_edges(g, edges), trace
    # mixed case: side1 has a small count but no usable ends; rebuild it
    # with a K4- pasted over the first rung so the lift forces distinct
    # path ends at u1 and v1
    if not s1["distinct"]:
        side1, side2 = s1, s2
        upath, vpath = list(lad.u_path), list(lad.v_path)
    else:
        side1, side2 = s2, s1
        upath, vpath = list(lad.u_path[::-1]), list(lad.v_path[::-1])
    if not (side2["ni"] > 4 or s >= 2):
        raise ConstructionError(
            "order-4 far side across a single rung should have been "
            "handled as a K4- reduction")
    if side2["distinct"]:
        p2 = side2["p"]
    else:
        # free the far ends: drop one IPF edge at each of x2, y2
        p2 = None
        x2l, y2l = side2["xl"], side2["yl"]
        ex = [e for e in side2["p"].edges if x2l in e]
        ey = [e for e in side2["p"].edges if y2l in e]
        for rx in ex or [None]:
            for ry in ey or [None]:
                drop = {e for e in (rx, ry) if e is not None}
                try:
                    cand = Ipf.from_edges(side2["sub"],
                                          side2["p"].edges - drop)
                except Exception:
                    continue
                ends = _endpoints(cand)
                if x2l in ends and y2l in ends and ends[x2l] != ends[y2l]:
                    p2 = cand
                    break
            if p2 is not None:
                break
        if p2 is None:
            raise ConstructionError("could not free the far-side path ends")
        if not (small[sides.index(side2)] and s >= 3):
            # freeing ends costs up to two paths; only affordable with a
            # long ladder
            raise ConstructionError("far side has neither usable ends nor "
                                    "slack for freeing them")
    u1, v1 = upath[1], vpath[1]
    ext_verts = set(side1["verts"]) | {u1, v1}
    sub_e, o2n_e, n2o_e = _sub(g, ext_verts)
    u1l, v1l = o2n_e[u1], o2n_e[v1]
    if not sub_e.has_edge(u1l, v1l):
        sub_e = sub_e.with_edges([(u1l, v1l)])
    pasted, rec = paste_k4minus(sub_e, u1l, v1l)
    inner, tr = _cubic_recurse(pasted)
    trace += tr
    p1 = lift(sub_e, pasted, rec, inner)
    edges = _edges_up(p1.edges, n2o_e) | _edges_up(p2.edges, side2["n2o"])
    edges |= _chain_edges(upath[1:]) | _chain_edges(vpath[1:])
    return Ipf.from_edges(g, edges), trace
