"""End-to-end realization pipelines for prescribed degree sets.

realize_min2 chains subdivided complete graphs; realize_min3 grows the U34
catalog graph with Petersen-based strong plugins, triangle expansions and
joins; realize_min4 splices strong plugins (manufactured from Pminus or
PminusEx and a seed stock) into the two-to-one host G_k; multigraph
realizations multiply off-cycle edges of G_k.  Every pipeline output carries
a construction trace, has its degree set and connectivity verified exactly,
and is enumeration-verified in full when at most 40 vertices (budgeted
attempt above that, with every splice condition-certified).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .catalog import reconstruct_catalog
from .connectivity import is_k_connected, min_side_2cut
from .errors import (
    BudgetExceededError,
    NoEvenDegreeError,
    PreconditionError,
    SpliceError,
    UhgError,
    UnsupportedDegreeError,
    UnknownSeedError,
)
from .graphs import (
    DegreeSet,
    Graph,
    MultiGraph,
    degree_set,
    expand_triangle,
    multiply_edge,
    subdivide_edge,
)
from .hamilton import (
    HamReport,
    count_ham_cycles,
    count_ham_paths,
    is_uniquely_hamiltonian,
    off_cycle_structure,
)
from .seeds import Seed, build_W, step_up_triangle, zigzag_extend
from .splice import (
    HPlugin,
    HamStructure,
    cycle_structure,
    make_apex_plugin,
    make_plugin,
    path_structure,
    plan_splice_set,
    site_at,
    splice,
    spliced_structure,
)
from .trace import ConstructionTrace

FULL_ENUM_LIMIT = 40
DEFAULT_STEP_BUDGET = 10**9
CERTIFY_REVERIFY_LIMIT = 80  # re-enumerate after each splice only below this order


@dataclass
class Realization:
    graph: Graph | MultiGraph
    trace: ConstructionTrace
    degrees: DegreeSet
    connectivity: int                  # verified vertex connectivity level
    uhc_status: str                    # "verified" | "certified-unexhausted"
    uhc_report: Optional[HamReport] = None
    structure: Optional[HamStructure] = None


def _verify_output(
    g: Graph | MultiGraph,
    M: DegreeSet,
    trace: ConstructionTrace,
    budget: Optional[int],
    certified: bool,
    structure: Optional[HamStructure] = None,
) -> Realization:
    degs = degree_set(g)
    if tuple(degs) != tuple(M):
        raise UhgError(f"pipeline produced degree set {degs}, wanted {M}")
    need_k = 2 if 2 in M else 3
    gg = g.support() if isinstance(g, MultiGraph) else g
    if not is_k_connected(gg, need_k):
        raise UhgError(f"pipeline output is not {need_k}-connected")
    budget = DEFAULT_STEP_BUDGET if budget is None else budget
    rep = count_ham_cycles(g, cap=2, budget=budget)
    if rep.exhausted and rep.count == 1:
        status = "verified"
        if structure is None and rep.witnesses:
            structure = cycle_structure(rep.witnesses[0])
    elif rep.count >= 2 or (rep.exhausted and rep.count == 0):
        raise UhgError(f"pipeline output is not uniquely hamiltonian (count={rep.count})")
    else:
        if gg.n <= FULL_ENUM_LIMIT:
            raise BudgetExceededError(
                f"could not finish enumeration on {gg.n} <= {FULL_ENUM_LIMIT} vertices"
            )
        if not certified:
            raise UhgError("unexhausted verification on an uncertified construction")
        status = "certified-unexhausted"
    trace.record("verify", degrees=str(degs), connectivity=need_k, uhc=status)
    return Realization(g, trace, degs, need_k, status, rep, structure)


# ---------------------------------------------------------------------------
# Minimum degree 2
# ---------------------------------------------------------------------------


def _chain_blocks(degrees: Sequence[int], trace: ConstructionTrace) -> Graph:
    """Complete blocks K_{d+1}, consecutive blocks bridged across one removed
    edge on each side (disjoint within middle blocks)."""
    k = len(degrees)
    sizes = [d + 1 for d in degrees]
    offs = []
    total = 0
    for s in sizes:
        offs.append(total)
        total += s
    edges = []
    for i, s in enumerate(sizes):
        drop = set()
        if k > 1:
            if i < k - 1:
                drop.add((0, 1))            # outgoing removed edge
            if i > 0:
                drop.add((s - 2, s - 1))    # incoming removed edge, disjoint
        for a in range(s):
            for b in range(a + 1, s):
                if (a, b) not in drop:
                    edges.append((offs[i] + a, offs[i] + b))
        trace.record("complete_block", degree=degrees[i], size=s)
    for i in range(k - 1):
        nxt = sizes[i + 1]
        edges.append((offs[i] + 0, offs[i + 1] + nxt - 2))
        edges.append((offs[i] + 1, offs[i + 1] + nxt - 1))
        trace.record("bridge", left_block=i, right_block=i + 1)
    return Graph(total, edges)


def realize_min2(M: DegreeSet | Sequence[int], budget: Optional[int] = None) -> Realization:
    """Any degree set with minimum 2: chained complete graphs with a
    hamiltonian cycle subdivided (every subdivision vertex has degree 2 and
    forces its two edges, so the cycle is unique)."""
    M = DegreeSet(M)
    if M[0] != 2:
        raise PreconditionError(f"minimum of {M} is not 2")
    trace = ConstructionTrace()
    if len(M) == 1:
        g = Graph(3, [(0, 1), (1, 2), (0, 2)])
        trace.record("cycle", n=3)
        return _verify_output(g, M, trace, budget, certified=False)
    base = _chain_blocks(list(M[1:]), trace)
    rep = count_ham_cycles(base, cap=1, budget=budget, want_witnesses=1)
    if not rep.witnesses:
        raise UhgError("chained blocks are not hamiltonian; construction bug")
    cyc = rep.witnesses[0]
    g = base
    for i in range(len(cyc)):
        g, _ = subdivide_edge(g, (cyc[i], cyc[(i + 1) % len(cyc)]))
    trace.record("subdivide_cycle", length=len(cyc))
    return _verify_output(g, M, trace, budget, certified=False)


# ---------------------------------------------------------------------------
# Strong +2 splices on U34 (minimum degree 3)
# ---------------------------------------------------------------------------


def _p3plus2_plugin() -> HPlugin:
    entry = reconstruct_catalog("P3plus2")
    return make_plugin(entry.primary, entry.meta["s"], entry.meta["t"], entry.meta["v"])


def _reverify(g: Graph, structure: HamStructure, budget: Optional[int]) -> None:
    if g.n > CERTIFY_REVERIFY_LIMIT:
        return
    if structure.kind == "cycle":
        rep = count_ham_cycles(g, cap=2, budget=budget)
    else:
        rep = count_ham_paths(g, structure.s, structure.t, cap=2, budget=budget)
    if rep.count >= 2:
        raise UhgError("splice broke unique hamiltonicity; licensing bug")


def _raise_degree(
    g: Graph,
    structure: HamStructure,
    key: str,
    target: int,
    plugin: HPlugin,
    trace: ConstructionTrace,
    budget: Optional[int],
    watched: dict[str, int],
) -> tuple[Graph, HamStructure, dict[str, int]]:
    """Raise watched[key]'s degree to `target` in +2 steps by splicing the
    strong plugin at off-structure edges into it; relabels every watched
    vertex through the splices."""
    vertex = watched[key]
    if (target - g.degree(vertex)) % 2:
        raise PreconditionError("degree parity mismatch for a +2 plugin chain")
    while g.degree(watched[key]) < target:
        vertex = watched[key]
        on = structure.edge_set()
        xs = [
            w
            for w in g.neighbors(vertex)
            if g.degree(w) == 3
            and (min(w, vertex), max(w, vertex)) not in on
            and w not in watched.values()
            and (structure.kind == "cycle" or w not in (structure.s, structure.t))
        ]
        if not xs:
            raise SpliceError(f"no off-structure cubic neighbour at vertex {vertex}")
        site = site_at(g, min(xs), vertex)
        res = splice(g, site, plugin, "x1s")
        structure = spliced_structure(structure, site, plugin, "x1s", res)
        g = res.graph
        watched = {k: res.host_map[v] for k, v in watched.items()}
        _reverify(g, structure, budget)
        trace.record("splice_plus2", vertex=watched[key], new_degree=g.degree(watched[key]))
    return g, structure, watched


def _min3_block(
    evens: Sequence[int], odds: Sequence[int], budget: Optional[int]
) -> tuple[Graph, HamStructure, ConstructionTrace]:
    """A uniquely hamiltonian block grown from U34 carrying degree set
    {3} | {4 if fewer than two evens} | evens | odds."""
    if len(evens) > 2:
        raise PreconditionError("a block can raise at most two degree-4 vertices")
    plugin = _p3plus2_plugin()
    entry = reconstruct_catalog("U34")
    g = entry.primary
    structure = cycle_structure(tuple(range(g.n)))
    trace = ConstructionTrace()
    trace.record("base_catalog", name="U34")
    quartics = [v for v in range(g.n) if g.degree(v) == 4]
    watched = {f"q{i}": q for i, q in enumerate(quartics)}
    for i, target in enumerate(sorted(evens, reverse=True)):
        g, structure, watched = _raise_degree(
            g, structure, f"q{i}", target, plugin, trace, budget, watched
        )
    for o in sorted(odds, reverse=True):
        on = structure.edge_set()
        cand = [
            v
            for v in range(g.n)
            if g.degree(v) == 3
            and v not in watched.values()
            and any(
                g.degree(w) == 3
                and w not in watched.values()
                and (min(v, w), max(v, w)) not in on
                for w in g.neighbors(v)
            )
        ]
        if not cand:
            raise SpliceError("no cubic vertex with an off-structure cubic neighbour")
        key = f"odd{o}_{len(watched)}"
        watched[key] = min(cand)
        g, structure, watched = _raise_degree(
            g, structure, key, o, plugin, trace, budget, watched
        )
    return g, structure, trace


def join_uhgs(
    g1: Graph, g2: Graph, budget: Optional[int] = None
) -> tuple[Graph, tuple[int, ...]]:
    """Join two uniquely hamiltonian graphs: remove one cubic vertex in each
    and connect the neighbours so the cycle parts link up.  Bijections are
    tried in deterministic order; the first whose result re-verifies wins."""
    from itertools import permutations

    for g, name in ((g1, "first"), (g2, "second")):
        ver = is_uniquely_hamiltonian(g, budget=budget)
        if ver.unique is None:
            raise BudgetExceededError(f"could not verify the {name} join input")
        if not ver.unique:
            raise PreconditionError(f"{name} join input is not uniquely hamiltonian")
    cub1 = [v for v in range(g1.n) if g1.degree(v) == 3]
    cub2 = [v for v in range(g2.n) if g2.degree(v) == 3]
    if not cub1 or not cub2:
        raise PreconditionError("both join inputs need a removable cubic vertex")
    for v1 in cub1:
        n1 = sorted(g1.neighbors(v1))
        h1, m1 = g1.remove_vertices([v1])
        for v2 in cub2:
            n2 = sorted(g2.neighbors(v2))
            h2, m2 = g2.remove_vertices([v2])
            off = h1.n
            base = list(h1.edges()) + [(off + a, off + b) for a, b in h2.edges()]
            for perm in permutations(range(3)):
                joined = Graph(
                    h1.n + h2.n,
                    base + [(m1[n1[i]], off + m2[n2[perm[i]]]) for i in range(3)],
                )
                ver = is_uniquely_hamiltonian(joined, budget=budget)
                if ver.unique:
                    return joined, (v1, v2) + tuple(perm)
    raise UhgError("no neighbour bijection yields a uniquely hamiltonian join")


def realize_min3(M: DegreeSet | Sequence[int], budget: Optional[int] = None) -> Realization:
    """Minimum degree 3: realizable iff the set contains an even number;
    3-connected output built from U34 blocks and joins."""
    M = DegreeSet(M)
    if M[0] != 3:
        raise PreconditionError(f"minimum of {M} is not 3")
    if not M.has_even():
        raise NoEvenDegreeError(
            f"{M} contains no even number: uniquely hamiltonian graphs whose "
            "degrees are all odd do not exist"
        )
    rest = list(M[1:])
    evens_gt4 = sorted((d for d in rest if d % 2 == 0 and d > 4), reverse=True)
    odds = sorted((d for d in rest if d % 2), reverse=True)
    keep4 = 4 in rest
    estar = max(d for d in M if d % 2 == 0)

    blocks: list[tuple[list[int], list[int]]] = []
    for i in range(0, len(evens_gt4) - 1, 2):
        blocks.append((evens_gt4[i : i + 2], []))
    if len(evens_gt4) % 2:
        last = evens_gt4[-1]
        blocks.append(([last] if keep4 else [last, last], []))
    for o in odds:
        blocks.append(([] if keep4 else [estar, estar], [o]))
    if not blocks or (keep4 and all(len(ev) == 2 for ev, _ in blocks)):
        blocks.append(([], []))

    trace = ConstructionTrace()
    g = None
    for blk_evens, blk_odds in blocks:
        bg, _, btrace = _min3_block(blk_evens, blk_odds, budget)
        trace.extend(btrace)
        if g is None:
            g = bg
        else:
            g, how = join_uhgs(g, bg, budget=budget)
            trace.record("join", bijection=list(how))
    return _verify_output(g, M, trace, budget, certified=True)


# ---------------------------------------------------------------------------
# Seed stock and strong plugins (minimum degree 4)
# ---------------------------------------------------------------------------


class SeedStock:
    """Seeds for every even d >= 10, derived from the 10-vertex 10-seed by
    triangle step-ups; the weak plugins W(S_d) come from these."""

    def __init__(self, budget: Optional[int] = None):
        self.budget = budget
        self._seeds: dict[int, Seed] = {}
        self._plugins: dict[int, HPlugin] = {}

    @property
    def d0(self) -> int:
        return 10

    def seed(self, d: int) -> Seed:
        if d % 2 or d < self.d0:
            raise UnsupportedDegreeError(f"no {d}-seed in stock (d0 = {self.d0})")
        if d not in self._seeds:
            if d == self.d0:
                entry = reconstruct_catalog("Seed10")
                self._seeds[d] = Seed(entry.primary, entry.meta["s"], entry.meta["t"], 10)
            else:
                self._seeds[d] = step_up_triangle(self.seed(d - 2), budget=self.budget)
        return self._seeds[d]

    def weak_plugin(self, d: int) -> HPlugin:
        if d not in self._plugins:
            self._plugins[d] = build_W(self.seed(d), budget=self.budget)
        return self._plugins[d]


def build_strong_plugin(
    d: int, stock: Optional[SeedStock] = None, budget: Optional[int] = None
) -> HPlugin:
    """A strong plugin carrying degree d (even case over Pminus: five
    degree-d vertices after deployment; odd case over PminusEx: eight)."""
    stock = stock or SeedStock(budget)
    if d < stock.d0:
        raise UnsupportedDegreeError(f"need d >= d0 = {stock.d0}, got {d}")
    even = d % 2 == 0
    entry = reconstruct_catalog("Pminus" if even else "PminusEx")
    base, plan = entry.meta["witnesses"][0]
    sites, leftover = plan
    weak = stock.weak_plugin(d if even else d - 1)
    structure = path_structure(tuple(range(base.n)))
    res = plan_splice_set(base, structure, sites, weak, budget=budget)
    g = res.graph
    s, t = res.remap[structure.s], res.remap[structure.t]
    p, q = res.remap[leftover[0]], res.remap[leftover[1]]
    if even:
        g = g.without_edge(s, t)  # off the unique path, so the path survives
    plugin = make_apex_plugin(g, s, t, [p, q], budget=budget, known_path=res.structure.seq)
    # degree audit: after deployment the copy carries the promised profile
    degs = sorted(plugin.graph.degrees())
    deployed = {}
    for v in range(plugin.graph.n):
        if v == plugin.v:
            continue
        dv = plugin.graph.degree(v) + (1 if v in (plugin.s, plugin.t) else 0)
        deployed[dv] = deployed.get(dv, 0) + 1
    want = {4: plugin.graph.n - 1 - (5 if even else 8), d: 5 if even else 8}
    if deployed != want:
        raise UhgError(f"strong plugin degree audit failed: {deployed} != {want}")
    if not plugin.is_strong:
        raise UhgError("strong plugin construction classified non-strong")
    return plugin


def build_Gk(k: int, budget: Optional[int] = None):
    """3-connected uniquely hamiltonian host with degree set {3,4}: two
    Pminus copies combined by the two-to-one trick, then triangle-expanded
    until the off-cycle matching has size >= k.

    Returns (graph, matching, cycle, trace)."""
    if k < 1:
        raise PreconditionError("k must be >= 1")
    entry = reconstruct_catalog("Pminus")
    pm = entry.primary
    from .catalog import _PM_C1, _PM_C2

    c1e = {(min(a, b), max(a, b)) for a, b in zip(_PM_C1, _PM_C1[1:] + _PM_C1[:1])}
    c2e = {(min(a, b), max(a, b)) for a, b in zip(_PM_C2, _PM_C2[1:] + _PM_C2[:1])}
    pick = None
    for v in range(pm.n):
        if pm.degree(v) != 3:
            continue
        e1 = {e for e in c1e if v in e}
        e2 = {e for e in c2e if v in e}
        if e1 != e2:
            common = e1 & e2
            if len(common) == 1:
                pick = v
                break
    if pick is None:
        raise UhgError("no cubic vertex is traversed differently by the two cycles")
    v = pick
    (a,) = [w for e in (c1e & c2e) if v in e for w in e if w != v]
    (b,) = [w for e in (c1e - c2e) if v in e for w in e if w != v]
    (c,) = [w for e in (c2e - c1e) if v in e for w in e if w != v]
    h, vmap = pm.remove_vertices([v])
    off = h.n
    edges = list(h.edges()) + [(off + x, off + y) for x, y in h.edges()]
    edges += [
        (vmap[a], off + vmap[c]),
        (vmap[b], off + vmap[b]),
        (vmap[c], off + vmap[a]),
    ]
    g = Graph(2 * h.n, edges)
    trace = ConstructionTrace()
    trace.record("two_to_one", base="Pminus", removed=v, roles=[a, b, c])
    ver = is_uniquely_hamiltonian(g, budget=budget)
    if not ver.unique:
        raise UhgError("two-to-one combination failed unique hamiltonicity")
    cyc = ver.cycle
    off_edges, ok = off_cycle_structure(g, cyc)
    if not ok:
        raise UhgError("G_k off-cycle structure is not 2-factor plus matching")
    matching = [e for e in off_edges if g.degree(e[0]) == 3]
    while len(matching) < k:
        cubs = sorted(v for v in range(g.n) if g.degree(v) == 3)
        res = expand_triangle(g, cubs[0])
        g = res.graph
        trace.record("expand_triangle", vertex=cubs[0])
        ver = is_uniquely_hamiltonian(g, budget=budget)
        if not ver.unique:
            raise UhgError("triangle expansion broke unique hamiltonicity")
        cyc = ver.cycle
        off_edges, ok = off_cycle_structure(g, cyc)
        if not ok:
            raise UhgError("expansion broke the off-cycle structure")
        matching = [e for e in off_edges if g.degree(e[0]) == 3]
    return g, matching, cyc, trace


def realize_min4(
    M: DegreeSet | Sequence[int],
    stock: Optional[SeedStock] = None,
    budget: Optional[int] = None,
) -> Realization:
    """Minimum degree 4 with every other element >= the seed stock's
    parameter (10 for the stock grown from the 10-seed): splice the strong
    plugins over the matching of a G_k host."""
    M = DegreeSet(M)
    if M[0] != 4:
        raise PreconditionError(f"minimum of {M} is not 4")
    targets = list(M[1:])
    if not targets:
        raise UnknownSeedError(
            "realizing {4} alone requires a 4-seed, which is not known to exist"
        )
    stock = stock or SeedStock(budget)
    for dtar in targets:
        if 5 <= dtar <= stock.d0 - 1:
            raise UnsupportedDegreeError(
                f"degree {dtar} is below the seed stock parameter {stock.d0}"
            )
    g, matching, cyc, trace = build_Gk(len(targets), budget=budget)
    plugins = [build_strong_plugin(dtar, stock, budget=budget) for dtar in targets]
    structure = cycle_structure(cyc)
    sites = [site_at(g, e[0], e[1]) for e in matching]
    assigned = [plugins[i % len(plugins)] for i in range(len(sites))]
    res = plan_splice_set(
        g, structure, sites, assigned, budget=budget,
        reverify=g.n + sum(p.graph.n for p in assigned) <= CERTIFY_REVERIFY_LIMIT,
    )
    trace.record(
        "splice_matching",
        sites=len(sites),
        plugin_degrees=[int(dtar) for dtar in (targets[i % len(targets)] for i in range(len(sites)))],
    )
    return _verify_output(res.graph, M, trace, budget, certified=True, structure=res.structure)


# ---------------------------------------------------------------------------
# Multigraphs
# ---------------------------------------------------------------------------


def realize_multigraph(M: DegreeSet | Sequence[int], budget: Optional[int] = None) -> Realization:
    """Uniquely hamiltonian multigraph realizing M (minimum >= 3): exists
    iff M contains an even number; built by multiplying off-cycle edges of
    the G_k host."""
    M = DegreeSet(M)
    if M[0] == 2:
        return realize_min2(M, budget=budget)
    if not M.has_even():
        raise NoEvenDegreeError(
            f"{M} contains no even number: uniquely hamiltonian multigraphs "
            "with all degrees odd do not exist"
        )
    need = [d for d in M if d not in (3, 4)]
    g, matching, cyc, trace = build_Gk(max(len(need), 1), budget=budget)
    off_edges, _ = off_cycle_structure(g, cyc)
    two_factor = [e for e in off_edges if g.degree(e[0]) == 4]
    mg = MultiGraph(g.n, g.edges())
    evens = [d for d in M if d % 2 == 0]
    if 4 not in M:
        target = min(evens)
        for e in two_factor:
            mg = multiply_edge(mg, e, (target - 2) // 2 - 1)
        trace.record("multiply_two_factor", target=target)
    rest = sorted(set(M) - set(degree_set(mg)), reverse=True)
    pool = list(matching)
    for dtar in rest:
        e = pool.pop(0)
        mg = multiply_edge(mg, e, dtar - 3)
        trace.record("multiply_matching_edge", edge=list(e), target=dtar)
    if 3 not in M:
        fallback = min(d for d in M if d >= 4)
        for e in pool:
            if mg.degree(e[0]) == 3:
                mg = multiply_edge(mg, e, fallback - 3)
        trace.record("multiply_leftover_cubics", target=fallback)
    return _verify_output(mg, M, trace, budget, certified=False)


# ---------------------------------------------------------------------------
# 2-connected -> 3-connected lift for 4-regular inputs
# ---------------------------------------------------------------------------


def lift_2conn_to_3conn(g: Graph, budget: Optional[int] = None) -> Realization:
    """From a 2-connected uniquely hamiltonian 4-regular graph (none is
    currently known), build a 3-connected one: extract the minimum-side
    2-cut block, normalize its endpoints, subdivide an off-path edge into a
    strong plugin, and splice it over a G_k host."""
    if any(g.degree(v) != 4 for v in range(g.n)):
        raise PreconditionError("input is not 4-regular")
    ver = is_uniquely_hamiltonian(g, budget=budget)
    if ver.unique is None:
        raise BudgetExceededError("could not verify unique hamiltonicity")
    if not ver.unique:
        raise PreconditionError("input is not uniquely hamiltonian")
    if not is_k_connected(g, 2):
        raise PreconditionError("input is not 2-connected")
    cut = min_side_2cut(g)
    if cut is None:
        raise PreconditionError("input is already 3-connected; nothing to lift")
    (s, t), comp = cut
    g0, s0, t0 = extract_block(g, s, t, comp)
    plugin = block_to_strong_plugin(g0, s0, t0, budget=budget)
    host, matching, cyc, trace = build_Gk(1, budget=budget)
    structure = cycle_structure(cyc)
    sites = [site_at(host, e[0], e[1]) for e in matching]
    res = plan_splice_set(host, structure, sites, plugin, budget=budget, reverify=False)
    trace.record("lift_splice", sites=len(sites))
    M = DegreeSet([4])
    return _verify_output(res.graph, M, trace, budget, certified=True, structure=res.structure)


def extract_block(g: Graph, s: int, t: int, comp: Sequence[int]) -> tuple[Graph, int, int]:
    """G_0 = G[C_0 + {s,t}], with the edge {s,t} added when both endpoints
    have degree 2 there (they then have degree 3, all others 4)."""
    keep = sorted(set(comp) | {s, t})
    sub, vmap = g.induced(keep)
    s0, t0 = vmap[s], vmap[t]
    ds, dt = sub.degree(s0), sub.degree(t0)
    if ds == 2 and dt == 2:
        if sub.has_edge(s0, t0):
            raise UhgError("degree-2 endpoints are adjacent; contradicts minimality")
        sub = sub.with_edges([(s0, t0)])
    elif not (ds == 3 and dt == 3):
        raise UhgError(f"cut endpoints have degrees {ds},{dt}; parity argument violated")
    return sub, s0, t0


def block_to_strong_plugin(g0: Graph, s: int, t: int, budget: Optional[int] = None) -> HPlugin:
    """Subdivide an off-path edge other than {s,t} with a new vertex v; the
    result has no hamiltonian s-t path (the unique one avoided the edge), so
    it is a strong plugin by construction."""
    rep = count_ham_paths(g0, s, t, cap=2, budget=budget, want_witnesses=1)
    if not (rep.exhausted and rep.count == 1):
        raise PreconditionError("block lacks a verified unique hamiltonian s-t path")
    pathseq = rep.witnesses[0]
    on = {(min(a, b), max(a, b)) for a, b in zip(pathseq, pathseq[1:])}
    cands = [e for e in g0.edges() if e not in on and e != (min(s, t), max(s, t))]
    if not cands:
        raise UhgError("no off-path edge to subdivide")
    gv, v = subdivide_edge(g0, cands[0])
    return HPlugin(gv, s, t, v, "strong", tuple(pathseq), certified=True)


# ---------------------------------------------------------------------------
# Families (strong realizability)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    M: DegreeSet
    D1: tuple[int, ...]
    D2: tuple[int, ...]
    count: int
    c1: Optional[int] = None      # intended bound for D1 multiplicities
    c2: Optional[float] = None    # intended linear fraction for D2

    def __post_init__(self):
        M = DegreeSet(self.M)
        rest = set(M[1:])
        if set(self.D1) | set(self.D2) != rest or set(self.D1) & set(self.D2):
            raise PreconditionError("D1, D2 must partition M minus its minimum")
        if self.count < 1:
            raise PreconditionError("count must be >= 1")


@dataclass
class FamilyResult:
    graphs: list[Graph | MultiGraph]
    achieved_c1: int
    achieved_c2: float
    realizations: list[Realization]


def family(spec: FamilySpec, budget: Optional[int] = None) -> FamilyResult:
    """An increasing family realizing M where degrees in D1 stay bounded and
    each degree in D2 covers a linear fraction of the vertices; the achieved
    constants are reported, not optimized."""
    M = DegreeSet(spec.M)
    reals: list[Realization] = []
    if M[0] == 2:
        if not spec.D2:
            base = realize_min2(M, budget=budget)
            reals.append(base)
            g = base.graph
            for _ in range(spec.count - 1):
                ver = is_uniquely_hamiltonian(g, budget=budget)
                cyc = ver.cycle
                g, _ = subdivide_edge(g, (cyc[0], cyc[1]))
                tr = ConstructionTrace()
                tr.record("subdivide_on_cycle")
                reals.append(_verify_output(g, M, tr, budget, certified=False))
        else:
            for j in range(1, spec.count + 1):
                multi = sorted(list(spec.D1) + list(spec.D2) * j)
                tr = ConstructionTrace()
                base = _chain_blocks(multi, tr)
                rep = count_ham_cycles(base, cap=1, budget=budget, want_witnesses=1)
                g = base
                cyc = rep.witnesses[0]
                for i in range(len(cyc)):
                    g, _ = subdivide_edge(g, (cyc[i], cyc[(i + 1) % len(cyc)]))
                tr.record("subdivide_cycle", length=len(cyc))
                reals.append(_verify_output(g, M, tr, budget, certified=False))
    elif M[0] == 3:
        base = realize_min3(M, budget=budget)
        reals.append(base)
        if not spec.D2:
            g = base.graph
            for _ in range(spec.count - 1):
                cubs = [v for v in range(g.n) if g.degree(v) == 3]
                g = expand_triangle(g, cubs[0]).graph
                tr = ConstructionTrace()
                tr.record("expand_triangle", vertex=cubs[0])
                reals.append(_verify_output(g, M, tr, budget, certified=True))
        elif any(d % 2 == 0 for d in spec.D2):
            block_set = DegreeSet([3] + list(spec.D2))
            block = realize_min3(block_set, budget=budget)
            g = base.graph
            for _ in range(spec.count - 1):
                g, how = join_uhgs(g, block.graph, budget=budget)
                tr = ConstructionTrace()
                tr.record("join_block", degrees=str(block_set), bijection=list(how))
                reals.append(_verify_output(g, M, tr, budget, certified=True))
        else:
            # all-odd D2: grow by raising extra cubic vertices with the +2
            # plugin, one more vertex per D2 degree in each member
            plugin = _p3plus2_plugin()
            g = base.graph
            structure = base.structure
            tr = ConstructionTrace()
            for j in range(1, spec.count):
                for o in spec.D2:
                    on = structure.edge_set()
                    cand = [
                        v
                        for v in range(g.n)
                        if g.degree(v) == 3
                        and any(
                            g.degree(w) == 3 and (min(v, w), max(v, w)) not in on
                            for w in g.neighbors(v)
                        )
                    ]
                    if not cand:
                        raise SpliceError("ran out of raisable cubic vertices")
                    watched = {"v": min(cand)}
                    g, structure, watched = _raise_degree(
                        g, structure, "v", o, plugin, tr, budget, watched
                    )
                member_tr = ConstructionTrace()
                member_tr.steps = list(tr.steps)
                reals.append(
                    _verify_output(g, M, member_tr, budget, certified=True, structure=structure)
                )
    elif M[0] == 4:
        stock = SeedStock(budget)
        if not spec.D2:
            for j in range(spec.count):
                stock_j = _zigzag_stock(stock, j, budget)
                reals.append(realize_min4(M, stock_j, budget=budget))
        else:
            for j in range(spec.count):
                reals.append(_min4_family_member(M, spec, stock, j, budget))
    else:
        raise UnsupportedDegreeError(f"no family construction for minimum {M[0]}")

    graphs = [r.graph for r in reals]
    ns = [g.support().n if isinstance(g, MultiGraph) else g.n for g in graphs]
    if any(b <= a for a, b in zip(ns, ns[1:])):
        raise UhgError("family is not strictly growing")
    counts: dict[int, list[int]] = {}
    for g in graphs:
        degs = g.degrees()
        for dv in set(degs):
            counts.setdefault(dv, []).append(degs.count(dv))
    achieved_c1 = max((max(counts[dd]) for dd in spec.D1), default=0)
    achieved_c2 = min(
        (min(c / n for c, n in zip(counts[dd], ns)) for dd in spec.D2), default=0.0
    )
    if spec.c1 is not None and achieved_c1 > spec.c1:
        raise UhgError(f"achieved c1 {achieved_c1} exceeds requested {spec.c1}")
    if spec.c2 is not None and achieved_c2 < spec.c2:
        raise UhgError(f"achieved c2 {achieved_c2} below requested {spec.c2}")
    return FamilyResult(graphs, achieved_c1, achieved_c2, reals)


def _zigzag_stock(stock: SeedStock, j: int, budget: Optional[int]) -> SeedStock:
    """Stock whose seeds are zigzag-extended j times (bigger weak plugins,
    same degree-d counts downstream)."""
    if j == 0:
        return stock
    grown = SeedStock(budget)

    base_seed = stock.seed(stock.d0)
    extended = zigzag_extend(base_seed, j, budget=budget)
    grown._seeds[grown.d0] = extended
    return grown


def _min4_family_member(
    M: DegreeSet, spec: FamilySpec, stock: SeedStock, j: int, budget: Optional[int]
) -> Realization:
    """Member j uses a host with j extra matching edges per D2 degree, so
    each D2 degree appears on a linear fraction of vertices."""
    copies = 1 + j
    targets = list(spec.D1) + [d for d in spec.D2 for _ in range(copies)]
    targets = [d for d in targets if d != 4] or list(M[1:])
    g, matching, cyc, trace = build_Gk(len(targets), budget=budget)
    plugins = {d: build_strong_plugin(d, stock, budget=budget) for d in set(targets)}
    structure = cycle_structure(cyc)
    sites = [site_at(g, e[0], e[1]) for e in matching]
    assigned = [plugins[targets[i % len(targets)]] for i in range(len(sites))]
    res = plan_splice_set(g, structure, sites, assigned, budget=budget, reverify=False)
    trace.record("splice_matching", sites=len(sites), member=j)
    return _verify_output(res.graph, M, trace, budget, certified=True, structure=res.structure)


# ---------------------------------------------------------------------------
# Trace replay
# ---------------------------------------------------------------------------


def replay(trace: ConstructionTrace, budget: Optional[int] = None) -> Graph | MultiGraph:
    """Re-run the deterministic pipeline a trace came from; the result is
    isomorphic to the original output."""
    ops = [s.op for s in trace.steps]
    args = {s.op: s.args for s in trace.steps}
    if "two_to_one" in ops and "multiply_matching_edge" not in ops and "splice_matching" not in ops:
        sizes = sum(1 for o in ops if o == "expand_triangle")
        g, matching, _, _ = build_Gk(1, budget=budget)
        for step in trace.steps:
            if step.op == "expand_triangle":
                g = expand_triangle(g, step.args["vertex"]).graph
        return g
    for step in trace.steps:
        if step.op == "verify":
            M = DegreeSet(int(x) for x in step.args["degrees"].strip("{}").split(","))
            if "multiply_matching_edge" in ops or "multiply_two_factor" in ops or (
                "multiply_leftover_cubics" in ops
            ):
                return realize_multigraph(M, budget=budget).graph
            if "splice_matching" in ops:
                return realize_min4(M, budget=budget).graph
            if "base_catalog" in ops:
                return realize_min3(M, budget=budget).graph
            return realize_min2(M, budget=budget).graph
    raise UhgError("trace has no verify step; cannot replay")
