from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from uhg.errors import PreconditionError
from uhg.graphs import Graph, MultiGraph, complete, cycle, path, petersen
from uhg.hamilton import (
    _count_cycles_big,
    _count_paths_big,
    count_ham_cycles,
    count_ham_paths,
    has_unique_ham_path,
    is_uniquely_hamiltonian,
    naive_cycle_count,
    naive_path_count,
    off_cycle_structure,
)


def test_cycle_counts_on_stock_graphs():
    assert count_ham_cycles(cycle(9), cap=5).count == 1
    assert count_ham_cycles(cycle(9), cap=5).exhausted
    assert count_ham_cycles(complete(5), cap=100).count == 12  # (5-1)!/2
    assert count_ham_cycles(petersen(), cap=5) .count == 0
    tri = MultiGraph(3, [(0, 1), (0, 1), (1, 2), (0, 2)])
    assert count_ham_cycles(tri, cap=10).count == 2  # parallel-edge choices


def test_path_counts_on_stock_graphs():
    assert count_ham_paths(path(7), 0, 6, cap=5).count == 1
    assert count_ham_paths(complete(4), 0, 3, cap=10).count == 2
    with pytest.raises(PreconditionError):
        count_ham_paths(path(3), 1, 1)
    with pytest.raises(PreconditionError):
        count_ham_paths(path(3), 0, 2, cap=0)


def test_petersen_minus_vertex_unique_path():
    # some s, t in the vertex-deleted Petersen graph admit a unique
    # hamiltonian path; the +2 plugin construction depends on this
    g = petersen()
    found = False
    for v in range(10):
        sub, vmap = g.remove_vertices([v])
        for s in range(9):
            for t in range(s + 1, 9):
                rep = count_ham_paths(sub, s, t, cap=2)
                if rep.exhausted and rep.count == 1:
                    found = True
                    break
            if found:
                break
        if found:
            break
    assert found


def test_agreement_with_naive_oracle(rng, make_random_graph):
    for _ in range(150):
        n = rng.randrange(3, 9)
        g = make_random_graph(rng, n, rng.random())
        assert count_ham_cycles(g, cap=10**6).count == naive_cycle_count(g)
    for _ in range(150):
        n = rng.randrange(2, 9)
        g = make_random_graph(rng, n, rng.random())
        s, t = 0, n - 1
        assert count_ham_paths(g, s, t, cap=10**6).count == naive_path_count(g, s, t)


def test_agreement_n10_spot_checks(rng, make_random_graph):
    for _ in range(10):
        g = make_random_graph(rng, 10, 0.4)
        assert count_ham_cycles(g, cap=10**7).count == naive_cycle_count(g)


def test_big_engine_matches_kernel(rng, make_random_graph):
    for _ in range(100):
        n = rng.randrange(3, 16)
        g = make_random_graph(rng, n, rng.random())
        small = count_ham_cycles(g, cap=50)
        big = _count_cycles_big(g.adj, g.n, 50, 10**9, 0)
        assert small.count == big[0] and small.exhausted == big[1]
        ps = count_ham_paths(g, 0, n - 1, cap=50)
        pb = _count_paths_big(g.adj, g.n, 0, n - 1, 50, 10**9, 0)
        assert ps.count == pb[0] and ps.exhausted == pb[1]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**31 - 1), st.integers(1, 6), st.integers(1, 12))
def test_cap_monotonicity(seed, c1, extra):
    import random as _r

    rng = _r.Random(seed)
    n = rng.randrange(3, 10)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.6]
    g = Graph(n, edges)
    c2 = c1 + extra
    r1 = count_ham_cycles(g, cap=c1)
    r2 = count_ham_cycles(g, cap=c2)
    assert min(r2.count, c1) == r1.count


def test_path_cycle_apex_reduction(rng, make_random_graph):
    # adding an apex joined to s and t turns unique s-t paths into unique
    # hamiltonian cycles and vice versa
    for _ in range(500):
        n = rng.randrange(3, 9)
        g = make_random_graph(rng, n, rng.random())
        s, t = 0, n - 1
        apexed = g.add_vertex(joined_to=[s, t])
        paths = count_ham_paths(g, s, t, cap=10**6).count
        cycles = count_ham_cycles(apexed, cap=10**6).count
        assert paths == cycles
        unique_path = has_unique_ham_path(g, s, t)[0]
        unique_cycle = is_uniquely_hamiltonian(apexed).unique
        assert unique_path == unique_cycle


def test_budget_exhaustion_is_flagged():
    g = complete(12)
    rep = count_ham_cycles(g, cap=10**9, budget=500)
    assert not rep.exhausted
    assert rep.steps > 500
    v = is_uniquely_hamiltonian(complete(12), budget=3)
    # either it already found two cycles (False) or it is indeterminate
    assert v.unique in (False, None)


def test_witnesses_are_valid(rng, make_random_graph):
    for _ in range(50):
        n = rng.randrange(4, 12)
        g = make_random_graph(rng, n, 0.5)
        rep = count_ham_cycles(g, cap=5, want_witnesses=5)
        for wit in rep.witnesses:
            assert sorted(wit) == list(range(n))
            assert all(g.has_edge(wit[i], wit[(i + 1) % n]) for i in range(n))
        prep = count_ham_paths(g, 0, n - 1, cap=5, want_witnesses=5)
        for wit in prep.witnesses:
            assert wit[0] == 0 and wit[-1] == n - 1
            assert sorted(wit) == list(range(n))
            assert all(g.has_edge(wit[i], wit[i + 1]) for i in range(n - 1))


def test_multigraph_weights_multiply():
    # doubling an on-cycle edge of C4 yields 2 hamiltonian cycles
    c4 = MultiGraph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    from uhg.graphs import multiply_edge

    doubled = multiply_edge(c4, (0, 1))
    assert count_ham_cycles(doubled, cap=10).count == 2
    # doubling an off-cycle edge preserves the count
    k4 = MultiGraph(4, complete(4).edges())
    assert count_ham_cycles(k4, cap=100).count == 3
    k4d = multiply_edge(k4, (0, 2))
    # the doubled chord lies on 2 of the 3 vertex cycles; each gains a copy
    assert count_ham_cycles(k4d, cap=100).count == 5


def test_is_uniquely_hamiltonian_verdicts():
    assert is_uniquely_hamiltonian(cycle(9)).unique is True
    assert is_uniquely_hamiltonian(cycle(9)).cycle == tuple(range(9))
    assert is_uniquely_hamiltonian(complete(4)).unique is False
    assert is_uniquely_hamiltonian(petersen()).unique is False


def test_off_cycle_structure():
    c = cycle(8)
    off, ok = off_cycle_structure(c, list(range(8)))
    assert off == () and ok

    k4 = complete(4)
    rep = count_ham_cycles(k4, cap=1, want_witnesses=1)
    off, ok = off_cycle_structure(k4, rep.witnesses[0])
    assert len(off) == 2 and ok  # perfect matching on the 4 cubic vertices

    with pytest.raises(PreconditionError):
        off_cycle_structure(c, [0, 1, 2, 3, 4, 5, 7, 6])  # not a cycle
    with pytest.raises(PreconditionError):
        off_cycle_structure(c, [0, 1, 2, 3])
