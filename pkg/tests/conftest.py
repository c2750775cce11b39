import random

import pytest

from domseq.graph import Graph, join


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    return Graph(n)


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(n: int, m: int) -> Graph:
    return join(empty(n), empty(m))


def paw() -> Graph:
    # triangle 0-1-2 with pendant 3 on 0
    return Graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


def triangle_windmill(k: int) -> tuple[Graph, int]:
    """k disjoint triangles whose apexes all attach to one extra vertex;
    returns the graph and the attaching vertex."""
    edges = []
    for t in range(k):
        base1, base2, apex = 3 * t, 3 * t + 1, 3 * t + 2
        edges += [(base1, base2), (base1, apex), (base2, apex)]
    hub = 3 * k
    edges += [(3 * t + 2, hub) for t in range(k)]
    return Graph(3 * k + 1, edges), hub


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xD05E9)
