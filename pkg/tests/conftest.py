from __future__ import annotations

import os
import random

import pytest


def pytest_collection_modifyitems(config, items):
    if os.environ.get("UHG_ACCEPT_LONG") == "1":
        return
    skip = pytest.mark.skip(reason="paper-scale run; set UHG_ACCEPT_LONG=1 to enable")
    for item in items:
        if "longhaul" in item.keywords:
            item.add_marker(skip)


@pytest.fixture
def rng():
    return random.Random(0x5EED)


def random_graph(rng: random.Random, n: int, p: float):
    from uhg.graphs import Graph

    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


@pytest.fixture
def make_random_graph():
    return random_graph
