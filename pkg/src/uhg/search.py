"""Exhaustive, isomorph-free search for d-seeds on n vertices, plus the
independent enumerate-then-filter oracle used to cross-validate it.

The search space follows the computational-results recipe: fix the spine
path 0,1,...,n-1, then add chords so that the degree restrictions are
respected and no second hamiltonian 0-(n-1) path is introduced.  Because
the spine is each seed's unique hamiltonian path, relabelling along it is a
complete invariant: two distinct chord sets are never isomorphic as seeds,
so isomorph rejection is free and output files are canonical as-is.

The oracle enumerates every degree-feasible chord set blindly and filters
afterwards with the unpruned path counter; it shares no search logic with
the production DFS.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from . import _kernels
from .codec import encode
from .errors import PreconditionError
from .graphs import Graph
from .seeds import Seed, validate_seed

ORACLE_DEFAULT_LIMIT = 13


@dataclass(frozen=True)
class SearchSpec:
    n: int
    d: int
    budget: Optional[int] = None   # DFS node budget for the whole search
    split_depth: int = 2           # spine vertices decided inside a work unit prefix

    def __post_init__(self):
        if self.n < 3:
            raise PreconditionError("n must be >= 3")
        if self.d < 4 or self.d % 2:
            raise PreconditionError("d must be even and >= 4")
        if self.split_depth < 0:
            raise PreconditionError("split_depth must be >= 0")


@dataclass
class SearchResult:
    seeds: list[Seed]
    complete: bool
    nodes: int = 0
    leaves: int = 0

    def lines(self) -> list[str]:
        return [encode(s.graph) for s in self.seeds]


def _profile(n: int, d: int) -> Optional[tuple[int, int, int]]:
    """(#interior cubics, #interior quartics, #chords) or None if infeasible."""
    cubic = d - 3          # interiors of degree 3 (s is cubic but not interior)
    quartic = n - d + 1    # interiors of degree 4
    if cubic < 0 or quartic < 0 or cubic + quartic != n - 2:
        return None
    chords = n - d // 2 + 1
    return cubic, quartic, chords


class _SearchState:
    """Mutable DFS state over the chord-addition tree."""

    __slots__ = ("n", "d", "adj", "cnt", "cap", "cubic_left", "quartic_left",
                 "chords", "nodes", "budget", "complete", "out", "wit")

    def __init__(self, n: int, d: int, budget: Optional[int]):
        self.n = n
        self.d = d
        self.adj = np.zeros(n, dtype=np.int64)
        for i in range(n - 1):
            self.adj[i] |= np.int64(1) << np.int64(i + 1)
            self.adj[i + 1] |= np.int64(1) << np.int64(i)
        self.cnt = [0] * n
        self.cap = [2] * n
        self.cap[0] = 2
        self.cap[n - 1] = 1
        cubic, quartic, _ = _profile(n, d)
        self.cubic_left = cubic
        self.quartic_left = quartic
        self.chords: list[tuple[int, int]] = []
        self.nodes = 0
        self.budget = budget if budget is not None else float("inf")
        self.complete = True
        self.out: list[tuple[tuple[int, int], ...]] = []
        self.wit = np.empty((0, n), dtype=np.int8)

    def add(self, u: int, w: int) -> None:
        self.adj[u] |= np.int64(1) << np.int64(w)
        self.adj[w] |= np.int64(1) << np.int64(u)
        self.cnt[u] += 1
        self.cnt[w] += 1
        self.chords.append((u, w))

    def pop(self) -> None:
        u, w = self.chords.pop()
        self.adj[u] &= ~(np.int64(1) << np.int64(w))
        self.adj[w] &= ~(np.int64(1) << np.int64(u))
        self.cnt[u] -= 1
        self.cnt[w] -= 1

    def second_path(self) -> bool:
        count, _, _ = _kernels._count_paths(
            self.adj, self.n, 0, self.n - 1, 2, 1 << 60, self.wit, True
        )
        return count >= 2

    def graph(self) -> Graph:
        return Graph(self.n, [(i, i + 1) for i in range(self.n - 1)] + self.chords)


def _dfs(st: _SearchState, u: int, collect_at: Optional[int] = None) -> None:
    """Extend chords for spine vertex u and recurse.

    When collect_at is set, states with all vertices < collect_at decided
    are emitted as work-unit prefixes instead of being explored further.
    """
    n = st.n
    if collect_at is not None and u == collect_at:
        st.out.append(tuple(st.chords))
        return
    if u == n - 1:
        if st.cnt[u] == 1 and st.cubic_left == 0 and st.quartic_left == 0:
            st.out.append(tuple(st.chords))
        return
    if u == 0:
        totals = [2]
    else:
        totals = []
        if st.cubic_left > 0:
            totals.append(1)
        if st.quartic_left > 0:
            totals.append(2)
    for total in totals:
        extra = total - st.cnt[u]
        if extra < 0:
            continue
        if u > 0:
            if total == 1:
                st.cubic_left -= 1
            else:
                st.quartic_left -= 1
        if extra == 0:
            _dfs(st, u + 1, collect_at)
        else:
            cands = [w for w in range(u + 2, n) if st.cnt[w] < st.cap[w]]
            if len(cands) >= extra:
                for combo in itertools.combinations(cands, extra):
                    st.nodes += 1
                    if st.nodes > st.budget:
                        st.complete = False
                        break
                    for w in combo:
                        st.add(u, w)
                    if not st.second_path():
                        _dfs(st, u + 1, collect_at)
                    for _ in combo:
                        st.pop()
                    if not st.complete:
                        break
        if u > 0:
            if total == 1:
                st.cubic_left += 1
            else:
                st.quartic_left += 1
        if not st.complete:
            return


def _replay(st: _SearchState, chords: Iterable[tuple[int, int]], resume: int) -> None:
    """Install a work-unit prefix: vertices < resume are fully decided."""
    for u, w in chords:
        st.add(u, w)
        if st.cnt[u] > st.cap[u] or st.cnt[w] > st.cap[w]:
            raise PreconditionError("corrupt prefix")
    for u in range(1, resume):
        if st.cnt[u] == 1:
            st.cubic_left -= 1
        elif st.cnt[u] == 2:
            st.quartic_left -= 1
        else:
            raise PreconditionError("corrupt prefix: undecided vertex before resume")


def _finish_leaf(n: int, d: int, chords: tuple[tuple[int, int], ...],
                 budget: Optional[int]) -> Optional[Seed]:
    g = Graph(n, [(i, i + 1) for i in range(n - 1)] + list(chords))
    rep = validate_seed(g, 0, n - 1, d, budget=budget)
    if rep.passed:
        return Seed(g, 0, n - 1, d)
    return None


@dataclass(frozen=True)
class WorkUnit:
    spec: SearchSpec
    prefix: tuple[tuple[int, int], ...]
    resume: int


def shard(spec: SearchSpec, worker_count: int = 1) -> list[WorkUnit]:
    """Split the search tree at split_depth into independent work units.

    The union of unit results equals the unsharded result for any unit
    count; the depth deepens automatically until there are at least
    worker_count units (or the tree runs out).
    """
    if _profile(spec.n, spec.d) is None:
        return [WorkUnit(spec, (), 0)]
    depth = min(max(spec.split_depth, 0), spec.n - 1)
    if depth == 0 and worker_count <= 1:
        return [WorkUnit(spec, (), 0)]
    depth = max(depth, 1)
    while True:
        st = _SearchState(spec.n, spec.d, None)
        _dfs(st, 0, collect_at=depth)
        units = [WorkUnit(spec, p, depth) for p in st.out]
        if len(units) >= worker_count or depth >= spec.n - 1 or not units:
            break
        depth += 1
    return units if units else [WorkUnit(spec, (), 0)]


def run_unit(unit: WorkUnit) -> SearchResult:
    spec = unit.spec
    prof = _profile(spec.n, spec.d)
    if prof is None:
        return SearchResult([], True)
    st = _SearchState(spec.n, spec.d, spec.budget)
    _replay(st, unit.prefix, unit.resume)
    if st.second_path():
        return SearchResult([], True, st.nodes)
    nch = prof[2]
    budget = spec.budget if spec.budget is not None else (1 << 60)
    rows = 1 << 12
    while True:
        out = np.full((rows, 2 * nch), -1, dtype=np.int64)
        adj = st.adj.copy()
        cnt = np.asarray(st.cnt, dtype=np.int64)
        nout, nodes, status = _kernels._seed_search(
            spec.n, adj, cnt, st.cubic_left, st.quartic_left,
            unit.resume, budget, True, out, st.wit,
        )
        if status != 2:
            break
        rows *= 4
    seeds = []
    for i in range(nout):
        chords = tuple(
            (int(out[i, 2 * j]), int(out[i, 2 * j + 1]))
            for j in range(nch)
            if out[i, 2 * j] >= 0
        )
        s = _finish_leaf(spec.n, spec.d, chords, spec.budget)
        if s is not None:
            seeds.append(s)
    return SearchResult(seeds, status == 0, int(nodes), int(nout))


def merge(partials: Iterable[SearchResult]) -> SearchResult:
    """Deterministic union: dedupe by exact spine form, sort by encoding."""
    seen: dict[str, Seed] = {}
    complete = True
    nodes = 0
    leaves = 0
    for part in partials:
        complete = complete and part.complete
        nodes += part.nodes
        leaves += part.leaves
        for s in part.seeds:
            seen.setdefault(encode(s.graph), s)
    ordered = [seen[k] for k in sorted(seen)]
    return SearchResult(ordered, complete, nodes, leaves)


def search_seeds(spec: SearchSpec, jobs: int = 1) -> SearchResult:
    """The complete set of d-seeds on n vertices up to isomorphism mapping
    the path endpoints onto each other; deterministic across runs and shard
    counts.  A budget-truncated run is returned with complete=False."""
    units = shard(spec, jobs)
    if jobs > 1 and len(units) > 1:
        import multiprocessing as mp

        with mp.Pool(jobs) as pool:
            partials = pool.map(run_unit, units)
    else:
        partials = [run_unit(u) for u in units]
    return merge(partials)


# ---------------------------------------------------------------------------
# Independent oracle
# ---------------------------------------------------------------------------


def oracle_search_seeds(n: int, d: int, max_n: int = ORACLE_DEFAULT_LIMIT) -> list[Seed]:
    """Cross-validation oracle: enumerate every degree-feasible supergraph of
    the spine path, then filter by the seed invariants.  No pruning beyond
    the degree profile, so results are independent of the production DFS."""
    if n > max_n:
        raise PreconditionError(f"oracle refuses n={n} > {max_n}")
    if d < 4 or d % 2:
        raise PreconditionError("d must be even and >= 4")
    prof = _profile(n, d)
    if prof is None:
        return []
    adj = np.zeros(n, dtype=np.int64)
    for i in range(n - 1):
        adj[i] |= np.int64(1) << np.int64(i + 1)
        adj[i + 1] |= np.int64(1) << np.int64(i)
    cnt = [0] * n
    cap = [2] * n
    cap[n - 1] = 1
    found: list[tuple[tuple[int, int], ...]] = []
    chords: list[tuple[int, int]] = []
    wit = np.empty((0, n), dtype=np.int8)

    def place(u: int, cubic_left: int, quartic_left: int) -> None:
        if u == n - 1:
            if cnt[u] == 1 and cubic_left == 0 and quartic_left == 0:
                count, exhausted, _ = _kernels._count_paths(
                    adj, n, 0, n - 1, 2, 1 << 60, wit, False
                )
                if exhausted and count == 1:
                    found.append(tuple(chords))
            return
        if u == 0:
            options = [2]
        else:
            options = []
            if cubic_left > 0:
                options.append(1)
            if quartic_left > 0:
                options.append(2)
        for total in options:
            extra = total - cnt[u]
            if extra < 0:
                continue
            c_left = cubic_left - (1 if (u > 0 and total == 1) else 0)
            q_left = quartic_left - (1 if (u > 0 and total == 2) else 0)
            if extra == 0:
                place(u + 1, c_left, q_left)
                continue
            cands = [w for w in range(u + 2, n) if cnt[w] < cap[w]]
            for combo in itertools.combinations(cands, extra):
                for w in combo:
                    adj[u] |= np.int64(1) << np.int64(w)
                    adj[w] |= np.int64(1) << np.int64(u)
                    cnt[u] += 1
                    cnt[w] += 1
                    chords.append((u, w))
                place(u + 1, c_left, q_left)
                for w in combo:
                    adj[u] &= ~(np.int64(1) << np.int64(w))
                    adj[w] &= ~(np.int64(1) << np.int64(u))
                    cnt[u] -= 1
                    cnt[w] -= 1
                    chords.pop()

    place(0, prof[0], prof[1])
    seeds = []
    for ch in sorted(found):
        g = Graph(n, [(i, i + 1) for i in range(n - 1)] + list(ch))
        if validate_seed(g, 0, n - 1, d).passed:
            seeds.append(Seed(g, 0, n - 1, d))
    seeds.sort(key=lambda s: encode(s.graph))
    return seeds
