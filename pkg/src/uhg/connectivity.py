"""Exact vertex-connectivity tests.

k-connectivity is decided by peeling: kappa(G) >= k iff G is complete enough
or kappa(G - v) >= k-1 for every v, with 2-connectivity done by a linear-time
articulation scan.  For the k in {1,2,3} used throughout this package that
is O(n*m) and comfortably exact even for the multi-hundred-vertex pipeline
outputs.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional

from .errors import PreconditionError
from .graphs import Graph, _bits


def _components(adj, mask: int) -> list[int]:
    comps = []
    rest = mask
    while rest:
        start = rest & -rest
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                nxt |= adj[low.bit_length() - 1]
                m ^= low
            frontier = nxt & mask & ~seen
            seen |= frontier
        comps.append(seen)
        rest &= ~seen
    return comps


def _is_connected_mask(adj, mask: int) -> bool:
    if mask == 0:
        return True
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= adj[low.bit_length() - 1]
            m ^= low
        frontier = nxt & mask & ~seen
        seen |= frontier
    return seen == mask


def _has_articulation(adj, mask: int) -> bool:
    """Any cutvertex inside the vertex set `mask`?  Iterative Tarjan."""
    verts = _bits(mask)
    if len(verts) <= 2:
        return False
    index = {v: i for i, v in enumerate(verts)}
    num = [0] * len(verts)
    low = [0] * len(verts)
    visited = [False] * len(verts)
    parent = [-1] * len(verts)
    counter = 1
    for root in range(len(verts)):
        if visited[root]:
            continue
        root_children = 0
        stack = [(root, iter([u for u in _bits(adj[verts[root]] & mask)]))]
        visited[root] = True
        num[root] = low[root] = counter
        counter += 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for u_label in it:
                u = index[u_label]
                if not visited[u]:
                    visited[u] = True
                    num[u] = low[u] = counter
                    counter += 1
                    parent[u] = v
                    if v == root:
                        root_children += 1
                    stack.append((u, iter(_bits(adj[verts[u]] & mask))))
                    advanced = True
                    break
                elif u != parent[v]:
                    if num[u] < low[v]:
                        low[v] = num[u]
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if p != root and low[v] >= num[p]:
                        return True
        if root_children > 1:
            return True
    return False


def _is_complete(adj, mask: int) -> bool:
    for v in _bits(mask):
        if adj[v] & mask != mask & ~(1 << v):
            return False
    return True


def _k_connected_mask(adj, mask: int, k: int) -> bool:
    if k <= 0:
        return True
    nv = mask.bit_count()
    if _is_complete(adj, mask):
        return nv - 1 >= k
    if k == 1:
        return _is_connected_mask(adj, mask)
    if k == 2:
        return nv >= 3 and _is_connected_mask(adj, mask) and not _has_articulation(adj, mask)
    m = mask
    while m:
        low = m & -m
        if not _k_connected_mask(adj, mask & ~low, k - 1):
            return False
        m ^= low
    return True


def is_connected(g: Graph) -> bool:
    return _is_connected_mask(g.adj, (1 << g.n) - 1)


def is_k_connected(g: Graph, k: int) -> bool:
    """Exact vertex-connectivity decision: kappa(g) >= k."""
    if k < 0:
        raise PreconditionError("k must be >= 0")
    return _k_connected_mask(g.adj, (1 << g.n) - 1, k)


def find_cut(g: Graph, size: int) -> Optional[tuple[int, ...]]:
    """A separating vertex set of exactly the given size, if one exists.

    Sizes 1 and 2 run in polynomial time; larger sizes fall back to
    exhaustive subsets and are meant for small graphs.
    """
    if size < 1:
        raise PreconditionError("cut size must be >= 1")
    full = (1 << g.n) - 1
    if g.n - size < 2:
        return None  # removing that many vertices cannot disconnect
    if size == 1:
        for v in range(g.n):
            if not _is_connected_mask(g.adj, full & ~(1 << v)):
                return (v,)
        return None
    if size == 2:
        for v in range(g.n):
            rest = full & ~(1 << v)
            for u in range(g.n):
                if u == v:
                    continue
                if not _is_connected_mask(g.adj, rest & ~(1 << u)):
                    return tuple(sorted((v, u)))
        return None
    for combo in combinations(range(g.n), size):
        drop = 0
        for v in combo:
            drop |= 1 << v
        if not _is_connected_mask(g.adj, full & ~drop):
            return combo
    return None


def min_side_2cut(g: Graph) -> Optional[tuple[tuple[int, int], tuple[int, ...]]]:
    """Over all 2-cuts {s,t}, one minimizing the smallest component of
    g - {s,t}, together with that component.  None if g is 3-connected.

    Requires a 2-connected input.
    """
    if not is_k_connected(g, 2):
        raise PreconditionError("min_side_2cut needs a 2-connected graph")
    full = (1 << g.n) - 1
    best = None
    for a, b in combinations(range(g.n), 2):
        mask = full & ~(1 << a) & ~(1 << b)
        comps = _components(g.adj, mask)
        if len(comps) < 2:
            continue
        small = min(comps, key=lambda c: (c.bit_count(), c))
        key = (small.bit_count(), (a, b))
        if best is None or key < best[0]:
            best = (key, (a, b), tuple(_bits(small)))
    if best is None:
        return None
    return best[1], best[2]
