"""d-seeds: validation, the W(G) weak-plugin builder, and the seed
transforms (triangle step-up, same-n step-up, zigzag extension).

A d-seed has exactly one degree-2 vertex (t), d-2 cubic vertices (s among
them), degree 4 everywhere else, a unique hamiltonian s-t path, and W(G)
plus an apex on {v, s, t} 3-connected.  No transform is trusted
structurally: every output is re-validated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .connectivity import is_k_connected
from .errors import PreconditionError, UhgError
from .graphs import Graph, expand_triangle
from .hamilton import count_ham_paths
from .splice import HPlugin, WEAK, make_plugin


@dataclass(frozen=True)
class Seed:
    graph: Graph
    s: int
    t: int
    d: int

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass
class SeedReport:
    """Per-invariant outcome; clause values are True/False or None when the
    verification budget ran out."""

    clauses: dict[str, Optional[bool]]
    witnesses: dict[str, object]

    @property
    def passed(self) -> bool:
        return all(v is True for v in self.clauses.values())

    def failing(self) -> list[str]:
        return [k for k, v in self.clauses.items() if v is not True]


def _profile_ok(g: Graph, s: int, t: int, d: int) -> tuple[bool, object]:
    degs = g.degrees()
    two = [v for v in range(g.n) if degs[v] == 2]
    three = [v for v in range(g.n) if degs[v] == 3]
    four = [v for v in range(g.n) if degs[v] == 4]
    if len(two) + len(three) + len(four) != g.n:
        bad = next(v for v in range(g.n) if degs[v] not in (2, 3, 4))
        return False, f"vertex {bad} has degree {degs[bad]}"
    if two != [t]:
        return False, f"degree-2 vertices {two}, expected exactly [t={t}]"
    if len(three) != d - 2 or s not in three:
        return False, f"{len(three)} cubic vertices (s in them: {s in three}), expected {d - 2}"
    return True, None


def build_W_graph(g: Graph, s: int, t: int) -> tuple[Graph, int]:
    """W(G): add v joined to t and to every cubic vertex except s."""
    targets = [w for w in range(g.n) if w != s and g.degree(w) == 3]
    if t not in targets:
        targets.append(t)
    w = g.add_vertex(joined_to=sorted(set(targets)))
    return w, g.n


def validate_seed(g: Graph, s: int, t: int, d: int, budget: int | None = None) -> SeedReport:
    """Check the four seed invariants; failures name the violated clause
    and carry a witness."""
    clauses: dict[str, Optional[bool]] = {}
    wit: dict[str, object] = {}

    clauses["d_even"] = d % 2 == 0 and d >= 4
    if not clauses["d_even"]:
        wit["d_even"] = f"d={d}; d-seeds do not exist for odd d"

    ok, why = _profile_ok(g, s, t, d)
    clauses["degree_profile"] = ok
    if not ok:
        wit["degree_profile"] = why

    if ok:
        rep = count_ham_paths(g, s, t, cap=2, budget=budget, want_witnesses=2)
        if not rep.exhausted and rep.count < 2:
            clauses["unique_path"] = None
            wit["unique_path"] = "budget exceeded"
        else:
            clauses["unique_path"] = rep.count == 1
            if rep.count == 0:
                wit["unique_path"] = "no hamiltonian s-t path"
            elif rep.count > 1:
                wit["unique_path"] = rep.witnesses[1]
            else:
                wit["unique_path"] = rep.witnesses[0]

        wgraph, v = build_W_graph(g, s, t)
        aug = wgraph.add_vertex(joined_to=[v, s, t])
        clauses["w_3connected"] = is_k_connected(aug, 3)
        if not clauses["w_3connected"]:
            from .connectivity import find_cut

            wit["w_3connected"] = find_cut(aug, 2) or find_cut(aug, 1)
    else:
        clauses["unique_path"] = False
        clauses["w_3connected"] = False

    return SeedReport(clauses, wit)


def require_valid(seed: Seed, budget: int | None = None) -> SeedReport:
    rep = validate_seed(seed.graph, seed.s, seed.t, seed.d, budget=budget)
    if not rep.passed:
        raise PreconditionError(f"invalid {seed.d}-seed: {rep.failing()} {rep.witnesses}")
    return rep


def to_spine(seed: Seed, budget: int | None = None) -> Seed:
    """Relabel along the unique hamiltonian path so s=0, t=n-1 and the path
    is 0,1,...,n-1.  This is a complete isomorphism invariant for seeds."""
    rep = count_ham_paths(seed.graph, seed.s, seed.t, cap=2, budget=budget, want_witnesses=1)
    if not (rep.exhausted and rep.count == 1):
        raise PreconditionError("cannot respine: unique path not verified")
    order = rep.witnesses[0]
    pos = [0] * seed.n
    for i, v in enumerate(order):
        pos[v] = i
    return Seed(seed.graph.relabel(pos), 0, seed.n - 1, seed.d)


def build_W(seed: Seed, budget: int | None = None) -> HPlugin:
    """The canonical weak plugin of a seed: (W(G), s, t, v), deg(v) = d-2."""
    require_valid(seed, budget=budget)
    wgraph, v = build_W_graph(seed.graph, seed.s, seed.t)
    plugin = make_plugin(wgraph, seed.s, seed.t, v, budget=budget)
    if plugin.strength != WEAK:
        raise UhgError(f"W(G) classified {plugin.strength}, expected weak")
    return plugin


# ---------------------------------------------------------------------------
# Transforms
# ---------------------------------------------------------------------------


def step_up_triangle(seed: Seed, budget: int | None = None) -> Seed:
    """A (d+2)-seed on n+2 vertices: replace a cubic vertex other than s by
    a triangle."""
    require_valid(seed, budget=budget)
    g = seed.graph
    for x in range(g.n):
        if x == seed.s or g.degree(x) != 3:
            continue
        res = expand_triangle(g, x)
        cand = Seed(res.graph, res.vmap[seed.s], res.vmap[seed.t], seed.d + 2)
        if validate_seed(cand.graph, cand.s, cand.t, cand.d, budget=budget).passed:
            return cand
    raise UhgError("no cubic vertex yields a valid (d+2)-seed; contradicts the step-up remark")


def same_n_candidates(seed: Seed, budget: int | None = None) -> list[tuple[int, int]]:
    """Off-path edges with both endpoints of degree 4."""
    rep = count_ham_paths(seed.graph, seed.s, seed.t, cap=1, budget=budget, want_witnesses=1)
    path = rep.witnesses[0]
    on_path = {(min(a, b), max(a, b)) for a, b in zip(path, path[1:])}
    return [
        (u, v)
        for u, v in seed.graph.edges()
        if (u, v) not in on_path and seed.graph.degree(u) == 4 and seed.graph.degree(v) == 4
    ]


def step_up_same_n(seed: Seed, budget: int | None = None) -> Seed:
    """A (d+2)-seed on the same n, for n > 2.5d - 4: remove an off-path
    edge joining two degree-4 vertices."""
    require_valid(seed, budget=budget)
    if not seed.n > 2.5 * seed.d - 4:
        raise PreconditionError(
            f"need n > 2.5d - 4 (= {2.5 * seed.d - 4:g}), got n = {seed.n}"
        )
    cands = same_n_candidates(seed, budget=budget)
    lower = seed.n - 2.5 * seed.d + 4
    if len(cands) < lower:
        raise UhgError(
            f"only {len(cands)} candidate edges, bound says >= {lower:g}; "
            "contradicts the same-n step-up remark"
        )
    for u, v in sorted(cands):
        cand = Seed(seed.graph.without_edge(u, v), seed.s, seed.t, seed.d + 2)
        if validate_seed(cand.graph, cand.s, cand.t, cand.d, budget=budget).passed:
            return cand
    raise UhgError("no candidate edge revalidates; contradicts the same-n step-up remark")


def _zigzag_edges(n: int, s: int, t: int, k: int) -> tuple[int, list[tuple[int, int]], int, int]:
    """Gadget wiring fixed by revalidation for k = 1..3: a zigzag ladder of k
    new degree-4 vertices between the old endpoints and fresh s', t'."""
    z = [n + i for i in range(k)]
    s2, t2 = n + k, n + k + 1
    if k == 1:
        edges = [(z[0], s), (z[0], t), (z[0], s2), (z[0], t2), (t, s2), (s2, t2)]
    else:
        edges = [(t, z[0]), (t, z[1]), (s, z[0])]
        edges += [(z[i], z[i + 1]) for i in range(k - 1)]
        edges += [(z[i], z[i + 2]) for i in range(k - 2)]
        edges += [(z[k - 2], s2), (z[k - 1], s2), (z[k - 1], t2), (s2, t2)]
    return n + k + 2, edges, s2, t2


def zigzag_extend(seed: Seed, k: int = 1, budget: int | None = None) -> Seed:
    """Same-d seed with k more degree-4 vertices: hang a zigzag ladder off s
    and t, ending in new endpoints s' (cubic) and t' (degree 2)."""
    if k < 1:
        raise PreconditionError("k must be >= 1")
    require_valid(seed, budget=budget)
    g = seed.graph
    n2, extra, s2, t2 = _zigzag_edges(g.n, seed.s, seed.t, k)
    cand = Seed(Graph(n2, list(g.edges()) + extra), s2, t2, seed.d)
    rep = validate_seed(cand.graph, cand.s, cand.t, cand.d, budget=budget)
    if not rep.passed:
        raise UhgError(f"zigzag gadget failed revalidation: {rep.failing()}")
    return cand
