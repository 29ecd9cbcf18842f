"""Shared fixtures and frozen reference data for the test suite."""

from __future__ import annotations

import random

from fsgraph import Graph, Permutation

# The 5-vertex worked example used throughout: a spider tree whose
# complement is the partner graph of the cycle-position instance.  The
# 24-permutation component below was frozen after cross-checking it both
# against brute-force search and against the orientation-class structure;
# it is the component of 12345 in FS(Cycle_5, SPIDER_COMPLEMENT_5).
SPIDER_TREE_5 = Graph(5, [(1, 2), (2, 3), (3, 4), (3, 5)])
SPIDER_COMPLEMENT_5 = SPIDER_TREE_5.complement()

FROZEN_CYCLE5_COMPONENT = frozenset(
    Permutation.parse(w)
    for w in (
        "12354 12345 52341 25341 52314 25314 52134 25134 21534 54312 45312 41532 "
        "54132 14532 45132 51432 15432 24351 42315 24315 42135 24135 21435 42351"
    ).split()
)


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if rng.random() < p
    ]
    return Graph(n, edges)


def random_connected_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    """Random graph conditioned on connectivity (resamples until connected)."""
    from fsgraph import structure_report

    while True:
        g = random_graph(rng, n, p)
        if structure_report(g).is_connected:
            return g
