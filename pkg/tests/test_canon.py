from __future__ import annotations

import random

import pytest

from uhg.canon import are_isomorphic, canonical_form, canonical_labelling
from uhg.errors import PreconditionError
from uhg.graphs import Graph, complete, cycle, path, petersen


def test_relabelled_cycles_agree():
    g = cycle(6)
    rng = random.Random(7)
    for _ in range(20):
        perm = list(range(6))
        rng.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == canonical_form(g)


def test_path_endpoint_colouring_distinguishes():
    p3 = path(3)
    ends = canonical_form(p3, classes=[[0, 2], [1]])
    mixed = canonical_form(p3, classes=[[0, 1], [2]])
    assert ends != mixed


def test_colour_classes_must_partition():
    with pytest.raises(PreconditionError):
        canonical_form(path(3), classes=[[0], [1]])
    with pytest.raises(PreconditionError):
        canonical_form(path(3), classes=[[0, 1], [1, 2]])


def test_invariance_under_permutation(rng, make_random_graph):
    # 1000 random (graph, permutation) pairs
    for _ in range(1000):
        n = rng.randrange(2, 16)
        g = make_random_graph(rng, n, rng.random())
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == canonical_form(g)


def test_invariance_with_colour_classes(rng, make_random_graph):
    for _ in range(200):
        n = rng.randrange(3, 14)
        g = make_random_graph(rng, n, rng.random())
        split = rng.randrange(1, n)
        cls = [list(range(split)), list(range(split, n))]
        perm = list(range(n))
        # permute within classes so colours are preserved
        left, right = perm[:split], perm[split:]
        rng.shuffle(left)
        rng.shuffle(right)
        perm2 = {}
        for i, v in enumerate(range(split)):
            perm2[v] = left[i]
        for i, v in enumerate(range(split, n)):
            perm2[v] = right[i]
        g2 = g.relabel([perm2[v] for v in range(n)])
        assert canonical_form(g2, cls) == canonical_form(g, cls)


def test_canonical_labelling_realizes_form():
    g = petersen()
    form, order = canonical_labelling(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    relabelled = g.relabel(pos)
    form2, order2 = canonical_labelling(relabelled)
    assert form2 == form


def test_non_isomorphic_same_degrees():
    g1 = cycle(6)
    g2 = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])  # 2 triangles
    assert not are_isomorphic(g1, g2)


def test_symmetric_graphs():
    assert are_isomorphic(complete(5), complete(5))
    assert canonical_form(petersen()) == canonical_form(
        petersen().relabel([3, 8, 1, 9, 4, 0, 6, 2, 7, 5])
    )
