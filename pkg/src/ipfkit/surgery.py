"""Local graph surgeries with records for lifting IPFs back.

Every operation returns (new_graph, SurgeryRecord).  The record carries the
old-to-new vertex map (vertices absent from the map were deleted) and the
indices of freshly created vertices, which is exactly what the IPF lift
operations need to translate edge sets between the two graphs.

Vertex numbering: new vertices are appended after the existing ones in
creation order; deletions shift higher indices down to keep indices dense.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph


class SurgeryError(ValueError):
    """A surgery precondition failed; the message names the hypothesis."""


@dataclass(frozen=True)
class SurgeryRecord:
    kind: str
    args: tuple
    old_to_new: dict  # old index -> new index; deleted vertices absent
    new_vertices: tuple[int, ...] = ()
    # for glue_at_vertex: map from the second graph's indices
    aux_to_new: dict = field(default_factory=dict)

    def map_edge(self, u: int, v: int) -> tuple[int, int]:
        a, b = self.old_to_new[u], self.old_to_new[v]
        return (a, b) if a < b else (b, a)


def _identity(n: int) -> dict:
    return {v: v for v in range(n)}


def _require(cond: bool, hypothesis: str) -> None:
    if not cond:
        raise SurgeryError(f"hypothesis failed: {hypothesis}")


def subdivide_edge(g: Graph, u: int, v: int) -> tuple[Graph, SurgeryRecord]:
    """Replace edge uv with a path u-w-v through a new vertex w = g.n."""
    _require(g.has_edge(u, v), f"{u}{v} is an edge")
    w = g.n
    edges = (g.edges - {(min(u, v), max(u, v))}) | {(u, w), (v, w)}
    rec = SurgeryRecord("subdivide_edge", (u, v), _identity(g.n), (w,))
    return Graph(g.n + 1, edges), rec


def suppress_vertex(g: Graph, c: int) -> tuple[Graph, SurgeryRecord]:
    """Delete the degree-2 vertex c and join its two nonadjacent
    neighbours directly."""
    _require(g.degree(c) == 2, f"deg({c}) = 2")
    a, b = g.adj[c]
    _require(not g.has_edge(a, b), f"neighbours {a},{b} of {c} nonadjacent")
    old_to_new = {v: (v if v < c else v - 1) for v in range(g.n) if v != c}
    edges = [(old_to_new[x], old_to_new[y]) for x, y in g.edges if c not in (x, y)]
    edges.append((old_to_new[a], old_to_new[b]))
    rec = SurgeryRecord("suppress_vertex", (c,), old_to_new)
    return Graph(g.n - 1, edges), rec


def paste_k4minus(g: Graph, a: int, b: int) -> tuple[Graph, SurgeryRecord]:
    """Delete the edge ab (both endpoints of degree 2) and attach two new
    adjacent vertices c, d joined to both a and b."""
    _require(g.has_edge(a, b), f"{a}{b} is an edge")
    _require(g.degree(a) == 2, f"deg({a}) = 2")
    _require(g.degree(b) == 2, f"deg({b}) = 2")
    c, d = g.n, g.n + 1
    edges = (g.edges - {(min(a, b), max(a, b))}) \
        | {(a, c), (a, d), (b, c), (b, d), (c, d)}
    rec = SurgeryRecord("paste_k4minus", (a, b), _identity(g.n), (c, d))
    return Graph(g.n + 2, edges), rec


def augment_triangle(g: Graph, a: int, b: int, c: int) -> tuple[Graph, SurgeryRecord]:
    """On a triangle abc with deg(a)=deg(b)=3 and deg(c)=2, subdivide ab
    with a new vertex d and add the edge cd."""
    _require(g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c),
             f"{a},{b},{c} form a triangle")
    _require(g.degree(a) == 3, f"deg({a}) = 3")
    _require(g.degree(b) == 3, f"deg({b}) = 3")
    _require(g.degree(c) == 2, f"deg({c}) = 2")
    d = g.n
    edges = (g.edges - {(min(a, b), max(a, b))}) | {(a, d), (b, d), (c, d)}
    rec = SurgeryRecord("augment_triangle", (a, b, c), _identity(g.n), (d,))
    return Graph(g.n + 1, edges), rec


def glue_at_vertex(g: Graph, h: Graph, vg: int, vh: int) -> tuple[Graph, SurgeryRecord]:
    """Disjoint union of g and h with vh identified with vg.

    g keeps its indices; h's other vertices follow in increasing order
    starting at g.n."""
    _require(0 <= vg < g.n, f"{vg} is a vertex of the first graph")
    _require(0 <= vh < h.n, f"{vh} is a vertex of the second graph")
    aux = {}
    nxt = g.n
    for v in range(h.n):
        if v == vh:
            aux[v] = vg
        else:
            aux[v] = nxt
            nxt += 1
    edges = list(g.edges) + [(aux[x], aux[y]) for x, y in h.edges]
    rec = SurgeryRecord("glue_at_vertex", (vg, vh), _identity(g.n),
                        tuple(sorted(set(aux.values()) - set(range(g.n)))),
                        aux_to_new=aux)
    return Graph(nxt, edges), rec


def add_edge(g: Graph, u: int, v: int) -> tuple[Graph, SurgeryRecord]:
    _require(u != v, f"{u} and {v} are distinct")
    _require(not g.has_edge(u, v), f"{u}{v} is not already an edge")
    rec = SurgeryRecord("add_edge", (u, v), _identity(g.n))
    return g.with_edges([(u, v)]), rec


def delete_edges(g: Graph, edges) -> tuple[Graph, SurgeryRecord]:
    es = [(min(u, v), max(u, v)) for u, v in edges]
    for u, v in es:
        _require(g.has_edge(u, v), f"{u}{v} is an edge")
    rec = SurgeryRecord("delete_edges", (tuple(sorted(es)),), _identity(g.n))
    return g.without_edges(es), rec


def delete_vertices(g: Graph, vertices) -> tuple[Graph, SurgeryRecord]:
    vs = set(vertices)
    for v in vs:
        _require(0 <= v < g.n, f"{v} is a vertex")
    keep = [v for v in range(g.n) if v not in vs]
    sub, old_to_new = g.induced_subgraph(keep)
    rec = SurgeryRecord("delete_vertices", (tuple(sorted(vs)),), old_to_new)
    return sub, rec


_KINDS = {
    "subdivide_edge": subdivide_edge,
    "suppress_vertex": suppress_vertex,
    "paste_k4minus": paste_k4minus,
    "augment_triangle": augment_triangle,
    "glue_at_vertex": glue_at_vertex,
    "add_edge": add_edge,
    "delete_edges": delete_edges,
    "delete_vertices": delete_vertices,
}


def surgery(g: Graph, kind: str, *args) -> tuple[Graph, SurgeryRecord]:
    """Dispatch by kind name; see the individual operations."""
    try:
        fn = _KINDS[kind]
    except KeyError:
        raise SurgeryError(f"unknown surgery kind: {kind!r}") from None
    return fn(g, *args)
