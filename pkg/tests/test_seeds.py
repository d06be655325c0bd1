from __future__ import annotations

import pytest

from uhg.errors import PreconditionError, UhgError
from uhg.graphs import Graph, degree_set
from uhg.hamilton import count_ham_paths
from uhg.seeds import (
    Seed,
    build_W,
    build_W_graph,
    same_n_candidates,
    step_up_same_n,
    step_up_triangle,
    to_spine,
    validate_seed,
    zigzag_extend,
)
from uhg.splice import WEAK, site_at, splice


@pytest.fixture(scope="module")
def seed10() -> Seed:
    from uhg.catalog import reconstruct_catalog

    e = reconstruct_catalog("Seed10")
    return Seed(e.primary, e.meta["s"], e.meta["t"], e.meta["d"])


def test_the_ten_seed_validates(seed10):
    rep = validate_seed(seed10.graph, seed10.s, seed10.t, seed10.d)
    assert rep.passed
    assert tuple(degree_set(seed10.graph)) == (2, 3, 4)
    degs = sorted(seed10.graph.degrees())
    assert degs == [2] + [3] * 8 + [4]  # one deg-4, eight deg-3, one deg-2


def test_swapped_endpoints_fail_profile(seed10):
    rep = validate_seed(seed10.graph, seed10.t, seed10.s, seed10.d)
    assert not rep.passed
    assert rep.clauses["degree_profile"] is False


def test_odd_d_rejected(seed10):
    rep = validate_seed(seed10.graph, seed10.s, seed10.t, 9)
    assert rep.clauses["d_even"] is False


def test_validator_catches_second_path(seed10):
    # adding an off-path chord between two low-degree vertices typically
    # creates a second path or breaks the profile; validator must not pass
    g = seed10.graph
    bad = g.with_edges([(2, 6)]) if not g.has_edge(2, 6) else g.with_edges([(2, 7)])
    rep = validate_seed(bad, seed10.s, seed10.t, seed10.d)
    assert not rep.passed


def test_build_w_degree_and_class(seed10):
    plug = build_W(seed10)
    assert plug.strength == WEAK
    wgraph = plug.graph
    v = plug.v
    assert wgraph.degree(v) == seed10.d - 2  # joined to t and cubics except s
    assert wgraph.has_edge(v, seed10.t)
    assert not wgraph.has_edge(v, seed10.s)


def test_w_splice_degree_bookkeeping(seed10):
    # splicing W(S_10) at a cubic y: the identified vertex reaches degree 10
    # and everything else in the copy has degree 4; at a quartic y it
    # reaches d+1 = 11
    from uhg.catalog import reconstruct_catalog
    from uhg.hamilton import count_ham_cycles

    plug = build_W(seed10)
    host = reconstruct_catalog("U34").primary
    on = {(min(i, (i + 1) % 18), max(i, (i + 1) % 18)) for i in range(18)}
    off = [e for e in host.edges() if e not in on]
    x, y = next(e for e in off if host.degree(e[0]) == 3 and host.degree(e[1]) == 3)
    res = splice(host, site_at(host, x, y), plug, "x1s")
    copy_degrees = sorted(
        res.graph.degree(res.plugin_map[w]) for w in range(plug.graph.n) if w != plug.v
    )
    assert copy_degrees == [4] * (plug.graph.n - 1)
    assert res.graph.degree(res.host_map[y]) == 3 - 1 + (seed10.d - 2)  # = 10

    yq = next(v for v in range(18) if host.degree(v) == 4)
    xq = next(
        w for w in host.neighbors(yq)
        if (min(w, yq), max(w, yq)) not in on and host.degree(w) == 3
    )
    res2 = splice(host, site_at(host, xq, yq), plug, "x1s")
    assert res2.graph.degree(res2.host_map[yq]) == 4 - 1 + (seed10.d - 2)  # = 11


def test_step_up_triangle(seed10):
    s12 = step_up_triangle(seed10)
    assert s12.d == 12 and s12.n == seed10.n + 2
    assert validate_seed(s12.graph, s12.s, s12.t, 12).passed
    # degree-3 count increases by 2
    c10 = sum(1 for v in range(seed10.n) if seed10.graph.degree(v) == 3)
    c12 = sum(1 for v in range(s12.n) if s12.graph.degree(v) == 3)
    assert c12 == c10 + 2
    s14 = step_up_triangle(s12)
    assert s14.d == 14 and s14.n == seed10.n + 4


def test_step_up_same_n_boundary(seed10):
    # n = 10, d = 10: 2.5d - 4 = 21 > 10, precondition fails
    with pytest.raises(PreconditionError):
        step_up_same_n(seed10)


def test_step_up_same_n_candidate_bound(seed10):
    # grow a 10-seed until n > 21, then step up in place
    s = seed10
    while s.n <= 2.5 * s.d - 4:
        s = zigzag_extend(s, 1)
    cands = same_n_candidates(s)
    assert len(cands) >= s.n - 2.5 * s.d + 4
    up = step_up_same_n(s)
    assert up.d == s.d + 2 and up.n == s.n
    assert validate_seed(up.graph, up.s, up.t, up.d).passed


def test_zigzag_extension(seed10):
    quartics0 = sum(1 for v in range(seed10.n) if seed10.graph.degree(v) == 4)
    prev = None
    for k in (1, 2, 3):
        ext = zigzag_extend(seed10, k)
        assert ext.d == seed10.d
        assert validate_seed(ext.graph, ext.s, ext.t, ext.d).passed
        quartics = sum(1 for v in range(ext.n) if ext.graph.degree(v) == 4)
        assert quartics == quartics0 + k + 2  # k ladder vertices + old s, old t
        if prev is not None:
            assert quartics == prev + 1  # steps of one vertex of degree 4
        prev = quartics


def test_zigzag_path_extends_old_witness(seed10):
    ext = zigzag_extend(seed10, 2)
    rep = count_ham_paths(ext.graph, ext.s, ext.t, cap=2, want_witnesses=1)
    assert rep.count == 1
    seq = rep.witnesses[0]
    # the old endpoints appear consecutively with the old unique path between
    old_rep = count_ham_paths(seed10.graph, seed10.s, seed10.t, cap=2, want_witnesses=1)
    old_seq = old_rep.witnesses[0]
    inner = [v for v in seq if v < seed10.n]
    assert inner == list(old_seq) or inner == list(reversed(old_seq))


def test_to_spine(seed10):
    ext = zigzag_extend(seed10, 1)
    spined = to_spine(ext)
    assert spined.s == 0 and spined.t == spined.n - 1
    rep = count_ham_paths(spined.graph, 0, spined.n - 1, cap=2, want_witnesses=1)
    assert rep.witnesses[0] == tuple(range(spined.n))
