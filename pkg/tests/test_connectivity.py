from __future__ import annotations

from itertools import combinations

import pytest

from uhg.connectivity import find_cut, is_connected, is_k_connected, min_side_2cut
from uhg.errors import PreconditionError
from uhg.graphs import Graph, complete, cycle, path, petersen


def brute_k_connected(g: Graph, k: int) -> bool:
    """kappa(g) >= k by deleting all (k-1)-subsets."""
    if k <= 0:
        return True
    n = g.n
    if n <= k:
        return g.edge_count() == n * (n - 1) // 2 and n - 1 >= k
    full = (1 << n) - 1
    from uhg.connectivity import _is_connected_mask

    for size in range(k):
        for combo in combinations(range(n), size):
            mask = full
            for v in combo:
                mask &= ~(1 << v)
            if not _is_connected_mask(g.adj, mask):
                return False
    return True


def test_stock_examples():
    assert is_k_connected(cycle(5), 2)
    assert not is_k_connected(cycle(5), 3)
    assert is_k_connected(petersen(), 3)
    assert not is_k_connected(petersen(), 4)
    assert is_k_connected(complete(4), 3)
    assert not is_k_connected(path(4), 2)
    assert is_connected(path(4))
    assert not is_connected(Graph(4, [(0, 1), (2, 3)]))


def test_agreement_with_brute_force(rng, make_random_graph):
    for _ in range(200):
        n = rng.randrange(2, 12)
        g = make_random_graph(rng, n, rng.random())
        for k in (1, 2, 3, 4):
            assert is_k_connected(g, k) == brute_k_connected(g, k), (g.edges(), k)


def test_find_cut():
    g = Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])  # two triangles at 2
    assert find_cut(g, 1) == (2,)
    assert find_cut(petersen(), 1) is None
    assert find_cut(petersen(), 2) is None
    assert find_cut(cycle(6), 2) is not None
    assert find_cut(complete(4), 3) is None  # removing 3 of 4 leaves 1 vertex


def test_min_side_2cut_three_connected_absent():
    assert min_side_2cut(petersen()) is None


def test_min_side_2cut_two_k4s():
    # two K4s sharing two adjacent vertices: the shared pair is the cut,
    # smallest component has size 2 (brute force over all pairs agrees)
    edges = [(u, v) for u, v in combinations([0, 1, 2, 3], 2)]
    edges += [(u, v) for u, v in combinations([0, 1, 4, 5], 2) if (u, v) not in edges]
    g = Graph(6, edges)
    got = min_side_2cut(g)
    assert got is not None
    (a, b), comp = got
    assert {a, b} == {0, 1}
    assert len(comp) == 2


def test_min_side_2cut_cycle():
    got = min_side_2cut(cycle(6))
    assert got is not None
    (a, b), comp = got
    assert len(comp) == 1
    # the cut is the two neighbours of the isolated vertex
    (v,) = comp
    assert set(cycle(6).neighbors(v)) == {a, b}


def test_min_side_2cut_requires_2_connected():
    with pytest.raises(PreconditionError):
        min_side_2cut(path(5))
