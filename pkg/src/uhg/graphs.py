"""Core graph types and the elementary transforms used by every pipeline.

Vertices are dense integer labels 0..n-1.  Graphs are immutable after
construction: every transform returns a new object, so values can be shared
freely across workers.  Adjacency is kept as one Python int bitmask per
vertex, which is what the hamiltonicity and connectivity engines consume
directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .errors import MissingEdgeError, PreconditionError

Edge = tuple[int, int]


def _norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph: no loops, no parallel edges.

    Duplicate edges in the constructor input collapse (set semantics); loops
    raise.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[Edge] = ()):
        if n < 1:
            raise PreconditionError(f"graph needs at least one vertex, got n={n}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"loop at vertex {u} not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    # -- basic queries ----------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def edges(self) -> list[Edge]:
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return out

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    # -- derived graphs ---------------------------------------------------

    def with_edges(self, extra: Iterable[Edge]) -> "Graph":
        return Graph(self.n, list(self.edges()) + list(extra))

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise MissingEdgeError(f"edge ({u},{v}) not present")
        e = _norm_edge(u, v)
        return Graph(self.n, [f for f in self.edges() if f != e])

    def add_vertex(self, joined_to: Iterable[int] = ()) -> "Graph":
        """New graph with one extra vertex n, joined to `joined_to`."""
        v = self.n
        return Graph(self.n + 1, list(self.edges()) + [(u, v) for u in joined_to])

    def remove_vertices(self, drop: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Delete vertices and relabel densely.

        Returns (graph, vmap) where vmap maps every kept old label to its new
        label.
        """
        dropped = set(drop)
        keep = [v for v in range(self.n) if v not in dropped]
        if not keep:
            raise PreconditionError("cannot remove all vertices")
        vmap = {v: i for i, v in enumerate(keep)}
        edges = [
            (vmap[u], vmap[v])
            for u, v in self.edges()
            if u not in dropped and v not in dropped
        ]
        return Graph(len(keep), edges), vmap

    def relabel(self, perm: list[int]) -> "Graph":
        """Apply vertex permutation: new label of v is perm[v]."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        vs = set(vertices)
        return self.remove_vertices(v for v in range(self.n) if v not in vs)

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


class MultiGraph:
    """Undirected multigraph: parallel edges allowed, loops never."""

    __slots__ = ("n", "mult")

    def __init__(self, n: int, edges: Iterable[Edge] = (), mult: dict[Edge, int] | None = None):
        if n < 1:
            raise PreconditionError(f"graph needs at least one vertex, got n={n}")
        m: dict[Edge, int] = {}
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"loop at vertex {u} not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u},{v}) out of range for n={n}")
            e = _norm_edge(u, v)
            m[e] = m.get(e, 0) + 1
        if mult:
            for (u, v), k in mult.items():
                if u == v:
                    raise PreconditionError(f"loop at vertex {u} not allowed")
                if k < 1:
                    raise PreconditionError("multiplicities must be >= 1")
                e = _norm_edge(u, v)
                m[e] = m.get(e, 0) + k
        self.n = n
        self.mult = dict(sorted(m.items()))

    def degree(self, v: int) -> int:
        return sum(k for (a, b), k in self.mult.items() if a == v or b == v)

    def degrees(self) -> list[int]:
        d = [0] * self.n
        for (a, b), k in self.mult.items():
            d[a] += k
            d[b] += k
        return d

    def multiplicity(self, u: int, v: int) -> int:
        return self.mult.get(_norm_edge(u, v), 0)

    def support(self) -> Graph:
        """Underlying simple graph (each parallel class becomes one edge)."""
        return Graph(self.n, self.mult.keys())

    def edges(self) -> list[Edge]:
        return list(self.mult.keys())

    def is_simple(self) -> bool:
        return all(k == 1 for k in self.mult.values())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MultiGraph)
            and self.n == other.n
            and self.mult == other.mult
        )

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.mult.items())))

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={sum(self.mult.values())})"


class DegreeSet(tuple):
    """Strictly sorted set of target degrees, all >= 2."""

    def __new__(cls, values: Iterable[int]):
        vals = sorted(set(int(v) for v in values))
        if not vals:
            raise PreconditionError("degree set must be non-empty")
        if vals[0] < 2:
            raise PreconditionError(f"degrees must be >= 2, got {vals[0]}")
        return super().__new__(cls, vals)

    def has_even(self) -> bool:
        return any(d % 2 == 0 for d in self)

    def __repr__(self) -> str:
        return "{" + ",".join(str(d) for d in self) + "}"


def degree_set(g: Graph | MultiGraph) -> DegreeSet:
    """The set of vertex degrees occurring in g (multigraph degrees count
    edge multiplicities)."""
    return DegreeSet(set(g.degrees()))


# ---------------------------------------------------------------------------
# Elementary transforms
# ---------------------------------------------------------------------------


class ExpandResult(NamedTuple):
    graph: Graph
    vmap: dict[int, int]          # old label -> new label, expanded vertex absent
    triangle: tuple[int, int, int]  # the three new cubic vertices


def subdivide_edge(g: Graph, e: Edge) -> tuple[Graph, int]:
    """Replace edge e by a path of length 2 through a new degree-2 vertex.

    All existing labels are stable; returns (graph, new_vertex).
    """
    u, v = e
    if not g.has_edge(u, v):
        raise MissingEdgeError(f"edge ({u},{v}) not present")
    w = g.n
    edges = [f for f in g.edges() if f != _norm_edge(u, v)]
    edges += [(u, w), (v, w)]
    return Graph(g.n + 1, edges), w


def expand_triangle(g: Graph, x: int) -> ExpandResult:
    """Replace a cubic vertex by a triangle of three new cubic vertices,
    each joined to one former neighbour of x.

    The new corner adjacent to the i-th smallest former neighbour of x is
    triangle[i].  Old labels above x shift down by one.
    """
    if g.degree(x) != 3:
        raise PreconditionError(f"vertex {x} has degree {g.degree(x)}, need 3")
    nbrs = g.neighbors(x)
    h, vmap = g.remove_vertices([x])
    base = h.n
    corners = (base, base + 1, base + 2)
    edges = list(h.edges())
    edges += [(corners[0], corners[1]), (corners[1], corners[2]), (corners[0], corners[2])]
    edges += [(vmap[nbrs[i]], corners[i]) for i in range(3)]
    return ExpandResult(Graph(base + 3, edges), vmap, corners)


def multiply_edge(g: MultiGraph, e: Edge, k: int = 1) -> MultiGraph:
    """Raise the multiplicity of an existing edge by k (endpoint degrees +k)."""
    u, v = e
    if g.multiplicity(u, v) == 0:
        raise MissingEdgeError(f"edge ({u},{v}) not present")
    if k < 1:
        raise PreconditionError("k must be >= 1")
    mult = dict(g.mult)
    mult[_norm_edge(u, v)] += k
    return MultiGraph(g.n, mult=mult)


# ---------------------------------------------------------------------------
# Stock graphs
# ---------------------------------------------------------------------------


def cycle(n: int) -> Graph:
    if n < 3:
        raise PreconditionError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, edges)


# ---------------------------------------------------------------------------
# Bit helpers (shared by the engines)
# ---------------------------------------------------------------------------


def _bits(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        t = mask & 1
        if t:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m
