"""Exact hamiltonicity oracles: enumerate or count hamiltonian cycles and
s-t hamiltonian paths with pruning, under an interruptible step budget.

Counts are exact whenever `exhausted` is set; a budget-truncated report is a
first-class outcome and never silently treated as a count.  Graphs up to 62
vertices run on the bitmask kernels (numba-accelerated when available);
larger graphs and multigraphs use the arbitrary-size engine below, which
implements the same DFS with the same pruning.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from . import _kernels
from .errors import PreconditionError
from .graphs import Graph, MultiGraph

DEFAULT_BUDGET = 10**9

_SMALL_LIMIT = 62


@dataclass(frozen=True)
class HamReport:
    """Outcome of a hamiltonian cycle/path count.

    count is exact if exhausted; otherwise the search stopped at the cap or
    at the step budget and count is a lower bound (saturated at cap).
    """

    count: int
    witnesses: tuple[tuple[int, ...], ...]
    exhausted: bool
    steps: int

    @property
    def complete(self) -> bool:
        return self.exhausted


class UhcVerdict(NamedTuple):
    unique: Optional[bool]       # None: indeterminate within budget
    cycle: Optional[tuple[int, ...]]
    report: HamReport


# ---------------------------------------------------------------------------
# Arbitrary-size engine (python ints; multigraph weights)
# ---------------------------------------------------------------------------


def _feasible_path_big(adj, full, visited, cur, t_bit):
    free = ~visited & full
    if free == 0:
        return True
    cur_bit = 1 << cur
    m = free
    while m:
        low = m & -m
        v = low.bit_length() - 1
        a = adj[v] & (free | cur_bit)
        if low == t_bit:
            if a == 0:
                return False
        elif (a & (a - 1)) == 0:  # fewer than 2 bits
            return False
        m ^= low
    seen = cur_bit
    frontier = cur_bit
    allowed = free | cur_bit
    while frontier:
        nxt = 0
        mm = frontier
        while mm:
            low = mm & -mm
            nxt |= adj[low.bit_length() - 1]
            mm ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen & free == free


def _feasible_cycle_big(adj, full, visited, cur):
    free = ~visited & full
    if free == 0:
        return (adj[cur] & 1) != 0
    cur_bit = 1 << cur
    usable = free | cur_bit | 1
    m = free
    while m:
        low = m & -m
        a = adj[low.bit_length() - 1] & usable
        if (a & (a - 1)) == 0:
            return False
        m ^= low
    if adj[0] & free == 0:
        return False
    seen = cur_bit
    frontier = cur_bit
    allowed = free | cur_bit
    while frontier:
        nxt = 0
        mm = frontier
        while mm:
            low = mm & -mm
            nxt |= adj[low.bit_length() - 1]
            mm ^= low
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen & free == free


def _count_paths_big(adj, n, s, t, cap, budget, maxwit, weight=None):
    """weight: optional n x n list of edge multiplicities (counts each
    parallel-edge choice as a distinct path)."""
    if n == 1 or s == t:
        return 0, True, 0, []
    full = (1 << n) - 1
    t_bit = 1 << t
    if n == 2:
        c = weight[s][t] if weight else (1 if adj[s] & t_bit else 0)
        return c, True, 1, [(s, t)] if c else []
    path = [0] * n
    avail = [0] * n
    wprod = [1] * n
    path[0] = s
    visited = 1 << s
    avail[0] = adj[s] & ~visited & ~t_bit
    depth = 0
    count = 0
    steps = 1
    wits = []
    while depth >= 0:
        m = avail[depth]
        if m == 0:
            visited &= ~(1 << path[depth])
            depth -= 1
            continue
        low = m & -m
        avail[depth] = m ^ low
        v = low.bit_length() - 1
        steps += 1
        if steps > budget:
            return count, False, steps, wits
        visited |= low
        prev = path[depth]
        depth += 1
        path[depth] = v
        wprod[depth] = wprod[depth - 1] * (weight[prev][v] if weight else 1)
        if visited | t_bit == full:
            if adj[v] & t_bit:
                w = wprod[depth] * (weight[v][t] if weight else 1)
                if len(wits) < maxwit:
                    wits.append(tuple(path[: depth + 1]) + (t,))
                count += w
                if count >= cap:
                    return min(count, cap), False, steps, wits
            visited ^= low
            depth -= 1
            continue
        if not _feasible_path_big(adj, full, visited, v, t_bit):
            visited ^= low
            depth -= 1
            continue
        avail[depth] = adj[v] & ~visited & ~t_bit
    return count, True, steps, wits


def _count_cycles_big(adj, n, cap, budget, maxwit, weight=None):
    if n < 3:
        if n == 2 and weight:
            m = weight[0][1]
            c = m * (m - 1) // 2
            return min(c, cap) if c >= cap else c, c < cap, 1, [(0, 1)] if c else []
        return 0, True, 0, []
    full = (1 << n) - 1
    path = [0] * n
    avail = [0] * n
    wprod = [1] * n
    visited = 1
    avail[0] = adj[0] & ~1
    depth = 0
    count = 0
    steps = 1
    wits = []
    while depth >= 0:
        m = avail[depth]
        if m == 0:
            visited &= ~(1 << path[depth])
            depth -= 1
            continue
        low = m & -m
        avail[depth] = m ^ low
        v = low.bit_length() - 1
        steps += 1
        if steps > budget:
            return count, False, steps, wits
        visited |= low
        prev = path[depth]
        depth += 1
        path[depth] = v
        wprod[depth] = wprod[depth - 1] * (weight[prev][v] if weight else 1)
        if visited == full:
            if (adj[v] & 1) and path[1] < v:
                w = wprod[depth] * (weight[v][0] if weight else 1)
                if len(wits) < maxwit:
                    wits.append(tuple(path[: depth + 1]))
                count += w
                if count >= cap:
                    return min(count, cap), False, steps, wits
            visited ^= low
            depth -= 1
            continue
        if not _feasible_cycle_big(adj, full, visited, v):
            visited ^= low
            depth -= 1
            continue
        avail[depth] = adj[v] & ~visited & ~1
    return count, True, steps, wits


# ---------------------------------------------------------------------------
# Public API
# ---------------------------------------------------------------------------


def _weight_matrix(g: MultiGraph):
    w = [[0] * g.n for _ in range(g.n)]
    for (u, v), k in g.mult.items():
        w[u][v] = k
        w[v][u] = k
    return w


def count_ham_cycles(
    g: Graph | MultiGraph,
    cap: int = 2,
    budget: int | None = None,
    want_witnesses: int | None = None,
) -> HamReport:
    """Count hamiltonian cycles, stopping after `cap` have been found.

    In multigraphs, cycles differing in which parallel edge they use are
    distinct cycles (witnesses stay vertex sequences).
    """
    if cap < 1:
        raise PreconditionError("cap must be >= 1")
    budget = DEFAULT_BUDGET if budget is None else budget
    maxwit = min(cap, 64) if want_witnesses is None else want_witnesses
    if isinstance(g, MultiGraph):
        support = g.support()
        weight = None if g.is_simple() else _weight_matrix(g)
        count, exhausted, steps, wits = _count_cycles_big(
            support.adj, g.n, cap, budget, maxwit, weight
        )
    elif g.n <= _SMALL_LIMIT:
        count, exhausted, steps, wits = _kernels.count_cycles_small(
            g.adj, g.n, cap, budget, want_witnesses=maxwit
        )
    else:
        count, exhausted, steps, wits = _count_cycles_big(
            g.adj, g.n, cap, budget, maxwit
        )
    return HamReport(count, tuple(wits), exhausted, steps)


def count_ham_paths(
    g: Graph,
    s: int,
    t: int,
    cap: int = 2,
    budget: int | None = None,
    want_witnesses: int | None = None,
) -> HamReport:
    """Count hamiltonian s-t paths with the same cap semantics as cycles."""
    if cap < 1:
        raise PreconditionError("cap must be >= 1")
    if s == t:
        raise PreconditionError("s and t must differ")
    if not isinstance(g, Graph):
        raise PreconditionError("path counting is defined on simple graphs")
    budget = DEFAULT_BUDGET if budget is None else budget
    maxwit = min(cap, 64) if want_witnesses is None else want_witnesses
    if g.n <= _SMALL_LIMIT:
        count, exhausted, steps, wits = _kernels.count_paths_small(
            g.adj, g.n, s, t, cap, budget, want_witnesses=maxwit
        )
    else:
        count, exhausted, steps, wits = _count_paths_big(
            g.adj, g.n, s, t, cap, budget, maxwit
        )
    return HamReport(count, tuple(wits), exhausted, steps)


def is_uniquely_hamiltonian(g: Graph | MultiGraph, budget: int | None = None) -> UhcVerdict:
    """Exactly one hamiltonian cycle?  Decided by counting with cap 2."""
    rep = count_ham_cycles(g, cap=2, budget=budget, want_witnesses=2)
    if rep.count >= 2:
        return UhcVerdict(False, None, rep)
    if not rep.exhausted:
        return UhcVerdict(None, rep.witnesses[0] if rep.witnesses else None, rep)
    if rep.count == 1:
        return UhcVerdict(True, rep.witnesses[0], rep)
    return UhcVerdict(False, None, rep)


def has_unique_ham_path(
    g: Graph, s: int, t: int, budget: int | None = None
) -> tuple[Optional[bool], Optional[tuple[int, ...]], HamReport]:
    """Convenience mirror of is_uniquely_hamiltonian for s-t paths."""
    rep = count_ham_paths(g, s, t, cap=2, budget=budget, want_witnesses=2)
    if rep.count >= 2:
        return False, None, rep
    if not rep.exhausted:
        return None, rep.witnesses[0] if rep.witnesses else None, rep
    if rep.count == 1:
        return True, rep.witnesses[0], rep
    return False, None, rep


class OffCycleStructure(NamedTuple):
    off_edges: tuple[tuple[int, int], ...]
    is_2factor_plus_matching: bool


def off_cycle_structure(g: Graph, cyc: Sequence[int]) -> OffCycleStructure:
    """Edges off the given hamiltonian cycle, and whether they split into a
    2-regular subgraph covering exactly the degree-4 vertices plus a matching
    covering exactly the degree-3 vertices."""
    n = g.n
    if sorted(cyc) != list(range(n)):
        raise PreconditionError("cycle must visit every vertex exactly once")
    cyc_edges = set()
    for i in range(n):
        u, v = cyc[i], cyc[(i + 1) % n]
        if not g.has_edge(u, v):
            raise PreconditionError(f"({u},{v}) is not an edge; invalid cycle")
        cyc_edges.add((min(u, v), max(u, v)))
    off = tuple(e for e in g.edges() if e not in cyc_edges)
    offdeg = [0] * n
    for u, v in off:
        offdeg[u] += 1
        offdeg[v] += 1
    ok = True
    for v in range(n):
        d = g.degree(v)
        if d == 2:
            ok = ok and offdeg[v] == 0
        elif d == 3:
            ok = ok and offdeg[v] == 1
        elif d == 4:
            ok = ok and offdeg[v] == 2
        else:
            ok = False
    if ok:
        # parts must not mix: every off-edge joins two deg-3 or two deg-4 ends
        for u, v in off:
            if g.degree(u) != g.degree(v):
                ok = False
                break
    return OffCycleStructure(off, ok)


def naive_cycle_count(g: Graph) -> int:
    """Permutation-based oracle for tiny graphs (independent of the DFS)."""
    from itertools import permutations

    n = g.n
    if n < 3:
        return 0
    count = 0
    for perm in permutations(range(1, n)):
        if perm[0] > perm[-1]:
            continue  # each cycle once
        seq = (0,) + perm
        if all(g.has_edge(seq[i], seq[(i + 1) % n]) for i in range(n)):
            count += 1
    return count


def naive_path_count(g: Graph, s: int, t: int) -> int:
    """Permutation-based s-t path oracle for tiny graphs."""
    from itertools import permutations

    n = g.n
    if n == 1 or s == t:
        return 0
    middle = [v for v in range(n) if v not in (s, t)]
    count = 0
    for perm in permutations(middle):
        seq = (s,) + perm + (t,)
        if all(g.has_edge(seq[i], seq[i + 1]) for i in range(n - 1)):
            count += 1
    return count
