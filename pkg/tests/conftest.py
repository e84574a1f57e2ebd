"""Shared fixtures and brute-force oracles for the test suite.

The oracles here deliberately avoid the library's own search paths: pattern
presence is decided by trying every vertex subset, cutsets by trying every
clique, bisimplicial vertices by trying every 2-partition of a neighborhood.
"""

from itertools import combinations

import pytest

from p7c4.graphs import Graph, induced_subgraph, isomorphic
from p7c4.patterns import pattern_graph


def brute_has_pattern(g: Graph, pattern: str) -> bool:
    pat = pattern_graph(pattern)
    if g.n < pat.n:
        return False
    return any(
        isomorphic(induced_subgraph(g, subset), pat)
        for subset in combinations(range(g.n), pat.n)
    )


def brute_max_clique(g: Graph) -> int:
    best = 1
    for k in range(2, g.n + 1):
        if any(
            all(g.has_edge(u, v) for u, v in combinations(subset, 2))
            for subset in combinations(range(g.n), k)
        ):
            best = k
    return best


def brute_is_bisimplicial(g: Graph, v: int) -> bool:
    nb = g.neighbors(v)
    if len(nb) <= 1:
        return True
    for r in range(len(nb) + 1):
        for left in combinations(nb, r):
            right = [u for u in nb if u not in left]
            if _is_clique(g, left) and _is_clique(g, right):
                return True
    return False


def _is_clique(g: Graph, vs) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(vs, 2))


def c7_plus(*attachments, extra_edges=()):
    """C7 on 0..6 plus one new vertex per attachment set."""
    edges = [(i, (i + 1) % 7) for i in range(7)]
    n = 7
    for att in attachments:
        edges += [(n, a) for a in att]
        n += 1
    edges += list(extra_edges)
    return Graph(n, edges)


def diamond_negative_controls():
    """Corrupted fixtures, one per NA property, on which exactly the target
    property (at least) fails."""
    from p7c4.families import graph_f

    f_corrupt = Graph(10, list(graph_f().edges()) + [(7, 8)])
    return [
        ("NA-1", c7_plus({0})),
        ("NA-2", c7_plus({0, 3}, {0, 3})),
        ("NA-3", f_corrupt),
        ("NA-4", c7_plus({0, 3}, {2, 5})),
        ("NA-5", c7_plus({0, 3, 4}, {3, 6, 0})),
        ("NA-6", c7_plus({0, 3}, {1, 4, 5})),
    ]


def gem_negative_controls():
    return [
        ("M1", c7_plus({0})),
        ("M2", c7_plus({0, 1, 2}, {0, 1, 2})),
        ("M3", c7_plus({0, 1, 2}, {1, 2, 3})),
        ("M4", c7_plus({0, 1, 2}, {2, 3, 4}, extra_edges=[(7, 8)])),
        ("M5", c7_plus({0, 3}, {2, 5})),
        ("M6", c7_plus({0, 3}, {1, 4}, extra_edges=[(7, 8)])),
        ("M7", c7_plus({0, 3}, {2, 3, 4})),
        ("M8", c7_plus({0, 3}, {0, 1, 2}, extra_edges=[(7, 8)])),
        ("M9", c7_plus({0, 3, 4}, {3, 6, 0})),
        ("M10", c7_plus({0, 3, 4}, {1, 4, 5}, extra_edges=[(7, 8)])),
        ("M11", c7_plus({0, 3, 4}, {0, 3})),
        ("M12", c7_plus({0, 3, 4}, {1, 4}, extra_edges=[(7, 8)])),
        ("M13", c7_plus({0, 3, 4}, {2, 3, 4})),
        ("M14", c7_plus({0, 3, 4}, {0, 1, 2}, extra_edges=[(7, 8)])),
    ]


@pytest.fixture(scope="session")
def small_graphs():
    """All graphs with 1..6 vertices (fast fixture for broad properties)."""
    from p7c4.enumerate import all_graphs

    return [g for n in range(1, 7) for g in all_graphs(n)]


@pytest.fixture(scope="session")
def connected_upto7():
    from p7c4.enumerate import connected_graphs

    return [g for n in range(1, 8) for g in connected_graphs(n)]
