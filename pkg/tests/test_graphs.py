from __future__ import annotations

import pytest

from uhg.errors import MissingEdgeError, PreconditionError
from uhg.graphs import (
    DegreeSet,
    Graph,
    MultiGraph,
    complete,
    cycle,
    degree_set,
    expand_triangle,
    multiply_edge,
    path,
    petersen,
    subdivide_edge,
)


def test_graph_basics():
    g = Graph(4, [(0, 1), (1, 2), (1, 2), (2, 3)])  # duplicate collapses
    assert g.edge_count() == 3
    assert g.degrees() == [1, 2, 2, 1]
    assert g.neighbors(1) == [0, 2]
    assert g.has_edge(2, 1) and not g.has_edge(0, 3)


def test_graph_rejects_loops_and_range():
    with pytest.raises(PreconditionError):
        Graph(3, [(1, 1)])
    with pytest.raises(PreconditionError):
        Graph(3, [(0, 3)])
    with pytest.raises(PreconditionError):
        Graph(0)


def test_multigraph_counts_multiplicities():
    mg = MultiGraph(3, [(0, 1), (0, 1), (1, 2)])
    assert mg.multiplicity(0, 1) == 2
    assert mg.degrees() == [2, 3, 1]
    assert not mg.is_simple()
    assert mg.support().edge_count() == 2


def test_degree_set_examples():
    assert tuple(degree_set(cycle(7))) == (2,)
    assert tuple(degree_set(complete(5))) == (4,)
    assert tuple(degree_set(petersen())) == (3,)


def test_degree_set_validation():
    with pytest.raises(PreconditionError):
        DegreeSet([1, 3])
    assert DegreeSet([4, 3, 3]) == (3, 4)
    assert DegreeSet([3, 5]).has_even() is False
    assert DegreeSet([3, 4]).has_even() is True


def test_subdivide_triangle_gives_c4():
    g, w = subdivide_edge(cycle(3), (0, 1))
    assert g.n == 4
    assert sorted(g.degrees()) == [2, 2, 2, 2]
    from uhg.canon import are_isomorphic

    assert are_isomorphic(g, cycle(4))


def test_subdivide_missing_edge():
    with pytest.raises(MissingEdgeError):
        subdivide_edge(path(3), (0, 2))


def test_subdivide_k6_cycle_degree_set():
    # subdividing the 6 edges of one hamiltonian cycle of K6 leaves degrees
    # {2,5} on 12 vertices; uniqueness checked by enumeration elsewhere
    g = complete(6)
    for i in range(6):
        g, _ = subdivide_edge(g, (i, (i + 1) % 6))
    assert g.n == 12
    assert tuple(degree_set(g)) == (2, 5)
    untouched = [v for v in range(6)]
    assert all(g.degree(v) == 5 for v in untouched)


def test_expand_triangle_prism():
    # expanding any vertex of K4 yields the 3-prism (circular ladder CL3)
    res = expand_triangle(complete(4), 0)
    g = res.graph
    assert g.n == 6
    assert sorted(g.degrees()) == [3] * 6
    prism = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                      (0, 3), (1, 4), (2, 5)])
    from uhg.canon import are_isomorphic

    assert are_isomorphic(g, prism)


def test_expand_triangle_counts_and_degrees():
    g = petersen()
    res = expand_triangle(g, 7)
    assert res.graph.n == g.n + 2
    # untouched vertices keep their degree
    for old, new in res.vmap.items():
        assert res.graph.degree(new) == g.degree(old)
    with pytest.raises(PreconditionError):
        expand_triangle(complete(5), 0)


def test_multiply_edge():
    tri = MultiGraph(3, [(0, 1), (1, 2), (0, 2)])
    doubled = multiply_edge(tri, (0, 1))
    assert sorted(doubled.degrees()) == [2, 3, 3]
    assert doubled.multiplicity(0, 1) == 2
    with pytest.raises(MissingEdgeError):
        multiply_edge(MultiGraph(3, [(0, 1)]), (1, 2))
    # degree recomputation matches incidence bookkeeping
    again = multiply_edge(doubled, (1, 2), 3)
    fresh = MultiGraph(3, mult={(0, 1): 2, (1, 2): 4, (0, 2): 1})
    assert again == fresh
    assert degree_set(again) == degree_set(fresh)


def test_remove_vertices_relabels_densely():
    g = petersen()
    h, vmap = g.remove_vertices([3, 7])
    assert h.n == 8
    assert sorted(vmap.values()) == list(range(8))
    for u, v in g.edges():
        if u not in (3, 7) and v not in (3, 7):
            assert h.has_edge(vmap[u], vmap[v])
