"""Canonical forms for vertex-coloured graphs.

Colour refinement plus individualization backtracking.  Two coloured graphs
have equal canonical forms iff a colour-preserving isomorphism exists; the
colour classes are ordered, so "preserving" means class index is kept.

This is the isomorph-rejection workhorse for seed searches, where the path
endpoints s and t sit in their own colour classes.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import PreconditionError
from .graphs import Graph


def _initial_colours(n: int, classes: Sequence[Iterable[int]] | None) -> list[int]:
    if classes is None:
        return [0] * n
    colours = [-1] * n
    for idx, cls in enumerate(classes):
        for v in cls:
            if not (0 <= v < n):
                raise PreconditionError(f"class vertex {v} out of range")
            if colours[v] != -1:
                raise PreconditionError(f"vertex {v} in two colour classes")
            colours[v] = idx
    if any(c == -1 for c in colours):
        raise PreconditionError("colour classes must partition the vertex set")
    return colours


def _refine(nbrs: list[list[int]], colours: list[int]) -> list[int]:
    """Equitable refinement: split colours by neighbour-colour multisets."""
    n = len(colours)
    while True:
        sigs = [
            (colours[v], tuple(sorted(colours[u] for u in nbrs[v])))
            for v in range(n)
        ]
        remap = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [remap[sigs[v]] for v in range(n)]
        if new == colours:
            return colours
        colours = new


def _cells(colours: list[int]) -> dict[int, list[int]]:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colours):
        cells.setdefault(c, []).append(v)
    return cells


def _leaf_string(g: Graph, order: list[int]) -> bytes:
    """Adjacency bits of the relabelled graph, upper triangle row-major."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    bits = bytearray((g.n * (g.n - 1) // 2 + 7) // 8)
    idx = 0
    for i in range(g.n):
        vi = order[i]
        row = g.adj[vi]
        for j in range(i + 1, g.n):
            if (row >> order[j]) & 1:
                bits[idx >> 3] |= 1 << (idx & 7)
            idx += 1
    return bytes(bits)


def _search(g: Graph, nbrs: list[list[int]], colours: list[int], best: list) -> None:
    colours = _refine(nbrs, colours)
    cells = _cells(colours)
    target = None
    for c in sorted(cells):
        if len(cells[c]) > 1:
            if target is None or len(cells[c]) < len(cells[target]):
                target = c
    if target is None:
        order = sorted(range(g.n), key=lambda v: colours[v])
        s = _leaf_string(g, order)
        if best[0] is None or s < best[0]:
            best[0] = s
            best[1] = order
        return
    cell = cells[target]
    reps = []
    seen_sigs = []
    for v in cell:
        # twins (equal adjacency away from each other) give identical
        # subtrees: branch on one representative per twin class
        sig = g.adj[v] & ~sum(1 << u for u in cell)
        key = (sig, g.adj[v].bit_count())
        if any(
            key == k2 and (g.adj[v] & ~(1 << u2)) == (g.adj[u2] & ~(1 << v))
            for u2, k2 in seen_sigs
        ):
            continue
        seen_sigs.append((v, key))
        reps.append(v)
    for v in reps:
        # individualized vertex gets the smaller colour inside its old cell
        branched = [2 * colours[u] - (1 if u == v else 0) for u in range(g.n)]
        _search(g, nbrs, branched, best)


def canonical_labelling(
    g: Graph, classes: Sequence[Iterable[int]] | None = None
) -> tuple[bytes, list[int]]:
    """Return (canonical form, vertex order realizing it).

    order[i] is the old label placed at canonical position i.
    """
    colours = _initial_colours(g.n, classes)
    nbrs = [g.neighbors(v) for v in range(g.n)]
    best: list = [None, None]
    _search(g, nbrs, colours, best)
    cells = _cells(colours)
    sizes = tuple(len(cells[c]) for c in sorted(cells))
    header = b"%d|%s|" % (g.n, ",".join(map(str, sizes)).encode())
    return header + best[0], best[1]


def canonical_form(g: Graph, classes: Sequence[Iterable[int]] | None = None) -> bytes:
    """Canonical byte string; equal iff colour-preserving isomorphic."""
    return canonical_labelling(g, classes)[0]


def are_isomorphic(
    g1: Graph,
    g2: Graph,
    classes1: Sequence[Iterable[int]] | None = None,
    classes2: Sequence[Iterable[int]] | None = None,
) -> bool:
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    return canonical_form(g1, classes1) == canonical_form(g2, classes2)
