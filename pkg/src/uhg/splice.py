"""H-plugins and the splicing operation.

A plugin (P, s, t, v) is spliced into a host at a cubic vertex x with chosen
neighbour y by removing x, joining x's other neighbours to s and t of a fresh
copy of P, and identifying the copy's v with y.  The licensing conditions
under which splicing preserves unique hamiltonicity are checked here; the
plan executor re-verifies intermediate graphs rather than trusting the
informal simultaneous-splice argument, and certifies by condition only when
the verification budget runs out.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .errors import BudgetExceededError, PlanError, PreconditionError, SpliceError
from .graphs import Graph
from .hamilton import count_ham_cycles, count_ham_paths, has_unique_ham_path

WEAK = "weak"
STRONG = "strong"
INVALID = "invalid"
INDETERMINATE = "indeterminate"


# ---------------------------------------------------------------------------
# Hamiltonian structures (the verified unique cycle/path of a host)
# ---------------------------------------------------------------------------


class HamStructure(NamedTuple):
    kind: str                 # "cycle" | "path"
    seq: tuple[int, ...]      # vertex order; paths run s..t
    s: Optional[int] = None
    t: Optional[int] = None

    def edge_set(self) -> frozenset[tuple[int, int]]:
        edges = []
        m = len(self.seq) if self.kind == "cycle" else len(self.seq) - 1
        for i in range(m):
            u, v = self.seq[i], self.seq[(i + 1) % len(self.seq)]
            edges.append((min(u, v), max(u, v)))
        return frozenset(edges)


def cycle_structure(seq: Sequence[int]) -> HamStructure:
    return HamStructure("cycle", tuple(seq))


def path_structure(seq: Sequence[int]) -> HamStructure:
    return HamStructure("path", tuple(seq), seq[0], seq[-1])


# ---------------------------------------------------------------------------
# Plugins
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HPlugin:
    """A graph with designated s, t, v and a strength classification.

    inner_path is the unique hamiltonian s-t path of P - v (original labels),
    which splicing substitutes for the removed host vertex.  certified means
    the strength was established by construction (lemma chain) rather than
    finished enumeration.
    """

    graph: Graph
    s: int
    t: int
    v: int
    strength: str
    inner_path: tuple[int, ...]
    certified: bool = False

    @property
    def is_strong(self) -> bool:
        return self.strength == STRONG


class PluginClassification(NamedTuple):
    kind: str                              # weak | strong | invalid | indeterminate
    inner_path: Optional[tuple[int, ...]]  # unique s-t path of P - v, if established


def classify_plugin(g: Graph, s: int, t: int, v: int, budget: int | None = None) -> PluginClassification:
    """Classify (g, s, t, v): invalid unless P - v has a unique hamiltonian
    s-t path; strong iff additionally g itself has no hamiltonian s-t path."""
    if len({s, t, v}) != 3:
        raise PreconditionError("s, t, v must be distinct")
    without_v, vmap = g.remove_vertices([v])
    back = {new: old for old, new in vmap.items()}
    unique, path, rep = has_unique_ham_path(without_v, vmap[s], vmap[t], budget=budget)
    if unique is None:
        return PluginClassification(INDETERMINATE, None)
    if not unique:
        return PluginClassification(INVALID, None)
    inner = tuple(back[u] for u in path)
    full = count_ham_paths(g, s, t, cap=1, budget=budget)
    if full.count >= 1:
        return PluginClassification(WEAK, inner)
    if not full.exhausted:
        return PluginClassification(INDETERMINATE, inner)
    return PluginClassification(STRONG, inner)


def make_plugin(g: Graph, s: int, t: int, v: int, budget: int | None = None) -> HPlugin:
    cls = classify_plugin(g, s, t, v, budget=budget)
    if cls.kind == INVALID:
        raise SpliceError("not an H-plugin: P - v lacks a unique hamiltonian s-t path")
    if cls.kind == INDETERMINATE:
        raise BudgetExceededError("plugin classification ran out of budget")
    return HPlugin(g, s, t, v, cls.kind, cls.inner_path)


def make_apex_plugin(
    g: Graph,
    s: int,
    t: int,
    v_neighbors: Sequence[int],
    budget: int | None = None,
    known_path: Sequence[int] | None = None,
) -> HPlugin:
    """Add an apex v joined to v_neighbors over a graph with a unique
    hamiltonian s-t path.

    When the neighbour set is exactly an edge off that unique path, the
    result is a strong H-plugin by construction; otherwise the strength is
    classified by enumeration.  A caller holding a certified unique path
    (from a condition-licensed splice chain) may pass it as known_path to
    skip the enumeration; its shape is still validated.
    """
    vset = sorted(set(v_neighbors))
    if not vset:
        raise PreconditionError("apex needs at least one neighbour")
    if any(not 0 <= w < g.n for w in vset):
        raise PreconditionError("apex neighbour out of range")
    if known_path is not None:
        path = tuple(known_path)
        if (
            sorted(path) != list(range(g.n))
            or path[0] != s
            or path[-1] != t
            or not all(g.has_edge(a, b) for a, b in zip(path, path[1:]))
        ):
            raise PreconditionError("known_path is not a hamiltonian s-t path of g")
    else:
        unique, path, _ = has_unique_ham_path(g, s, t, budget=budget)
        if unique is None:
            raise BudgetExceededError("could not verify the unique s-t path in budget")
        if not unique:
            raise PreconditionError("base graph lacks a unique hamiltonian s-t path")
    p = g.add_vertex(joined_to=vset)
    v = g.n
    path_edges = {(min(a, b), max(a, b)) for a, b in zip(path, path[1:])}
    if (
        len(vset) == 2
        and g.has_edge(*vset)
        and (vset[0], vset[1]) not in path_edges
    ):
        return HPlugin(p, s, t, v, STRONG, tuple(path), certified=True)
    cls = classify_plugin(p, s, t, v, budget=budget)
    if cls.kind == INVALID:
        raise SpliceError("apex construction did not yield an H-plugin")
    if cls.kind == INDETERMINATE:
        raise BudgetExceededError("apex plugin classification ran out of budget")
    return HPlugin(p, s, t, v, cls.kind, cls.inner_path)


# ---------------------------------------------------------------------------
# Splice sites and the splice itself
# ---------------------------------------------------------------------------


class SpliceSite(NamedTuple):
    x: int
    y: int
    x1: int
    x2: int


def site_at(g: Graph, x: int, y: int) -> SpliceSite:
    """The splice site for edge {x,y}: x cubic, x1 < x2 its other neighbours."""
    if g.degree(x) != 3:
        raise SpliceError(f"vertex {x} has degree {g.degree(x)}, need 3")
    if not g.has_edge(x, y):
        raise SpliceError(f"({x},{y}) is not an edge")
    x1, x2 = sorted(w for w in g.neighbors(x) if w != y)
    return SpliceSite(x, y, x1, x2)


class SpliceResult(NamedTuple):
    graph: Graph
    host_map: dict[int, int]     # host labels (x absent) -> new labels
    plugin_map: dict[int, int]   # plugin labels -> new labels (v maps to y's image)


def splice(g: Graph, site: SpliceSite, plugin: HPlugin, orientation: str = "x1s") -> SpliceResult:
    """The plugin-splice of g at {x,y}: one of the two possibilities, chosen
    by `orientation` ("x1s": x1 to s and x2 to t, "x2s": the swap)."""
    if orientation not in ("x1s", "x2s"):
        raise SpliceError(f"unknown orientation {orientation!r}")
    x, y, x1, x2 = site
    if g.degree(x) != 3 or not g.has_edge(x, y):
        raise SpliceError("stale splice site")
    if sorted((x1, x2)) != sorted(w for w in g.neighbors(x) if w != y):
        raise SpliceError("site neighbours do not match the graph")
    host, host_map = g.remove_vertices([x])
    p = plugin.graph
    plugin_map: dict[int, int] = {}
    nxt = host.n
    for w in range(p.n):
        if w == plugin.v:
            plugin_map[w] = host_map[y]
        else:
            plugin_map[w] = nxt
            nxt += 1
    edges = set(host.edges())
    for u, w in p.edges():
        e = (plugin_map[u], plugin_map[w])
        e = (min(e), max(e))
        if e in edges:
            raise SpliceError(f"identification at y={y} would create a parallel edge")
        edges.add(e)
    a, b = (x1, x2) if orientation == "x1s" else (x2, x1)
    for u, w in ((host_map[a], plugin_map[plugin.s]), (host_map[b], plugin_map[plugin.t])):
        e = (min(u, w), max(u, w))
        if e in edges:
            raise SpliceError("attachment edge already present")
        edges.add(e)
    return SpliceResult(Graph(nxt, edges), host_map, plugin_map)


def spliced_structure(
    structure: HamStructure, site: SpliceSite, plugin: HPlugin, orientation: str, res: SpliceResult
) -> HamStructure:
    """The inherited hamiltonian structure after a licensed splice: all host
    edges except those at x survive, with x replaced by the plugin's inner
    s-t path."""
    x = site.x
    seq = list(structure.seq)
    i = seq.index(x)
    prev = seq[i - 1] if (structure.kind == "cycle" or i > 0) else None
    nxt = seq[(i + 1) % len(seq)] if (structure.kind == "cycle" or i + 1 < len(seq)) else None
    if prev is None or nxt is None:
        raise SpliceError("x must be interior to the hamiltonian structure")
    inner = [plugin.inner_path, tuple(reversed(plugin.inner_path))]
    first_host = site.x1 if orientation == "x1s" else site.x2
    # inner path runs s..t; it attaches s-side to first_host
    segment = inner[0] if prev == first_host else inner[1]
    if {prev, nxt} != {site.x1, site.x2}:
        raise SpliceError("structure does not pass x through x1, x2")
    new_seq = []
    for w in seq:
        if w == x:
            new_seq.extend(res.plugin_map[u] for u in segment)
        else:
            new_seq.append(res.host_map[w])
    return HamStructure(structure.kind, tuple(new_seq),
                        None if structure.kind == "cycle" else res.host_map[structure.s],
                        None if structure.kind == "cycle" else res.host_map[structure.t])


# ---------------------------------------------------------------------------
# Licensing conditions
# ---------------------------------------------------------------------------


def check_splice_conditions(
    g: Graph,
    structure: HamStructure,
    site: SpliceSite,
    plugin: HPlugin,
    budget: int | None = None,
    check_all: bool = False,
) -> frozenset[str]:
    """Which of the licensing conditions hold for splicing at this site.

    (i)   G - y is not hamiltonian (path mode: no s-t path in G - y, y not
          an endpoint) -- the expensive check, skipped unless nothing else
          licenses the splice or check_all is set;
    (ii)  {x,y} lies in a triangle;
    (iii) the plugin is strong;
    (iv)  path mode only: y is an endpoint.
    """
    x, y = site.x, site.y
    e = (min(x, y), max(x, y))
    if e in structure.edge_set():
        raise SpliceError(f"edge ({x},{y}) lies on the hamiltonian structure")
    held = set()
    if g.adj[x] & g.adj[y]:
        held.add("ii")
    if plugin.is_strong:
        held.add("iii")
    if structure.kind == "path" and y in (structure.s, structure.t):
        held.add("iv")
    if check_all or not held:
        if structure.kind == "cycle":
            sub, vmap = g.remove_vertices([y])
            rep = count_ham_cycles(sub, cap=1, budget=budget)
            if rep.exhausted and rep.count == 0:
                held.add("i")
        elif y not in (structure.s, structure.t):
            sub, vmap = g.remove_vertices([y])
            rep = count_ham_paths(sub, vmap[structure.s], vmap[structure.t], cap=1, budget=budget)
            if rep.exhausted and rep.count == 0:
                held.add("i")
    return frozenset(held)


# ---------------------------------------------------------------------------
# Splice plans
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PlanStep:
    site: SpliceSite          # labels current at execution time
    orientation: str
    conditions: frozenset[str]
    verification: str         # "verified" | "certified"


@dataclass
class PlanResult:
    steps: list[PlanStep]
    graph: Graph
    structure: HamStructure
    remap: dict[int, int]     # original host labels -> final labels (survivors)


def _weak_simultaneity_ok(g: Graph, structure: HamStructure, sites: Sequence[SpliceSite]) -> Optional[str]:
    """The licensing for splicing several edges with weak plugins at once:
    every site has its y at a path endpoint, or its edge lies in a triangle
    containing no degree-3 vertex of another site."""
    cubic_endpoints = set()
    for s in sites:
        for v in (s.x, s.y):
            if g.degree(v) == 3:
                cubic_endpoints.add(v)
    for s in sites:
        if structure.kind == "path" and s.y in (structure.s, structure.t):
            continue
        commons = [c for c in range(g.n) if (g.adj[s.x] >> c & 1) and (g.adj[s.y] >> c & 1)]
        if not any(c not in cubic_endpoints - {s.x, s.y} for c in commons):
            return f"site {s} lacks (iv) and a private triangle"
    return None


def plan_splice_set(
    g: Graph,
    structure: HamStructure,
    sites: Sequence[SpliceSite],
    plugins: HPlugin | Sequence[HPlugin],
    budget: int | None = None,
    reverify: bool = True,
) -> PlanResult:
    """Execute the sites in order, fixing per-site orientation so that each
    intermediate graph keeps a unique hamiltonian structure.

    Each step is re-verified by enumeration when the budget allows; a step
    whose verification cannot finish is certified by its licensing
    condition.  A disproved step (second structure found) flips orientation
    and, failing that, aborts the plan naming the site.
    """
    if isinstance(plugins, HPlugin):
        plugins = [plugins] * len(sites)
    if len(plugins) != len(sites):
        raise PreconditionError("need one plugin per site")
    verts = [v for s in sites for v in (s.x, s.y)]
    if len(set(verts)) != len(verts):
        raise PreconditionError("splice sites must be vertex-disjoint")
    if structure.kind == "path":
        for s in sites:
            if s.x in (structure.s, structure.t):
                raise PreconditionError("x may not be a path endpoint")
    if any(not p.is_strong for p in plugins):
        msg = _weak_simultaneity_ok(g, structure, sites)
        if msg is not None:
            raise PlanError(f"weak-plugin simultaneity violated: {msg}", failing_site=msg)

    cur = g
    cur_structure = structure
    remap = {v: v for v in range(g.n)}
    steps: list[PlanStep] = []
    for raw_site, plugin in zip(sites, plugins):
        x, y = remap[raw_site.x], remap[raw_site.y]
        site = site_at(cur, x, y)
        conds = check_splice_conditions(cur, cur_structure, site, plugin, budget=budget)
        if not conds:
            raise PlanError(f"site {raw_site} is not licensed by any condition", failing_site=raw_site)
        done = None
        failures = []
        for orientation in ("x1s", "x2s"):
            try:
                res = splice(cur, site, plugin, orientation)
            except SpliceError as exc:
                failures.append(str(exc))
                continue
            nxt_structure = spliced_structure(cur_structure, site, plugin, orientation, res)
            verification = "certified"
            if reverify:
                if cur_structure.kind == "cycle":
                    rep = count_ham_cycles(res.graph, cap=2, budget=budget)
                else:
                    rep = count_ham_paths(
                        res.graph, nxt_structure.s, nxt_structure.t, cap=2, budget=budget
                    )
                if rep.exhausted and rep.count == 1:
                    verification = "verified"
                elif rep.count >= 2:
                    failures.append(f"orientation {orientation}: second structure found")
                    continue
            done = (res, nxt_structure, verification, orientation)
            break
        if done is None:
            raise PlanError(
                f"no orientation works at site {raw_site}: {'; '.join(failures)}",
                failing_site=raw_site,
            )
        res, cur_structure, verification, orientation = done
        steps.append(PlanStep(site, orientation, conds, verification))
        remap = {
            orig: res.host_map[cur_label]
            for orig, cur_label in remap.items()
            if cur_label in res.host_map
        }
        cur = res.graph
    return PlanResult(steps, cur, cur_structure, remap)
