"""Canonical labeling, isomorphism tests, and small-graph enumeration.

Canonical forms come from iterated color refinement followed by a
brute-force minimum over the relabelings that respect the refinement
classes.  That is exact (two graphs get the same form iff they are
isomorphic) and fast for the irregular graphs that dominate at desk
scale; vertex-transitive stragglers fall back to trying every class
permutation, which is still fine for n <= 8.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import InvalidArgumentError
from .graphs import Graph, build_named

CanonicalForm = tuple[int, tuple[tuple[int, int], ...]]


def _refine_colors(n: int, adj: tuple[int, ...], initial: list) -> list[int]:
    """Iterated neighborhood refinement; returns stable integer colors."""
    palette = {c: i for i, c in enumerate(sorted(set(initial)))}
    colors = [palette[c] for c in initial]
    while True:
        signatures = []
        for v in range(n):
            nbr = adj[v]
            sig = []
            while nbr:
                bit = nbr & -nbr
                nbr &= nbr - 1
                sig.append(colors[bit.bit_length() - 1])
            signatures.append((colors[v], tuple(sorted(sig))))
        palette = {s: i for i, s in enumerate(sorted(set(signatures)))}
        new_colors = [palette[s] for s in signatures]
        if new_colors == colors:
            return colors
        colors = new_colors


def _initial_colors(g: Graph) -> list:
    """A cheap isomorphism-invariant seed: degree, triangle count through
    the vertex, and the size of the vertex's connected component."""
    n = g.n
    adj = g._adj
    comp_size = [0] * n
    seen = 0
    for v in range(n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            w = frontier & -frontier
            frontier &= frontier - 1
            new = adj[w.bit_length() - 1] & ~comp
            comp |= new
            frontier |= new
        size = comp.bit_count()
        m = comp
        while m:
            bit = m & -m
            m &= m - 1
            comp_size[bit.bit_length() - 1] = size
        seen |= comp
    tri = [0] * n
    for a, b in g._edges:
        common = adj[a] & adj[b]
        tri[a] += common.bit_count()
        tri[b] += common.bit_count()
    return [(adj[v].bit_count(), tri[v], comp_size[v]) for v in range(n)]


def canonical_form(g: Graph) -> CanonicalForm:
    """A labeling-independent fingerprint: (n, canonical edge tuple)."""
    n = g.n
    colors = _refine_colors(n, g._adj, _initial_colors(g))
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    classes = [by_color[c] for c in sorted(by_color)]

    best: tuple[tuple[int, int], ...] | None = None
    for parts in itertools.product(*(itertools.permutations(cls) for cls in classes)):
        order = [v for part in parts for v in part]
        position = [0] * n
        for new, old in enumerate(order):
            position[old] = new
        relabeled = tuple(
            sorted(
                (position[a], position[b]) if position[a] < position[b] else (position[b], position[a])
                for a, b in g._edges
            )
        )
        if best is None or relabeled < best:
            best = relabeled
    assert best is not None
    return (n, tuple((a + 1, b + 1) for a, b in best))


def canonical_graph(g: Graph) -> Graph:
    n, edges = canonical_form(g)
    return Graph(n, edges)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


@lru_cache(maxsize=None)
def _named_canonical(family: str, n: int, k: int | None, m: int | None) -> CanonicalForm:
    return canonical_form(build_named(family, n, k=k, m=m))


# -- family recognizers -------------------------------------------------------


def is_path_graph(g: Graph) -> bool:
    if g.n == 1:
        return g.edge_count == 0
    if g.edge_count != g.n - 1:
        return False
    degs = sorted(g.degrees())
    if degs[:2] != [1, 1] or any(d != 2 for d in degs[2:]):
        return False
    return len(_cheap_components(g)) == 1


def is_cycle_graph(g: Graph) -> bool:
    return (
        g.n >= 3
        and g.edge_count == g.n
        and all(d == 2 for d in g.degrees())
        and len(_cheap_components(g)) == 1
    )


def is_star_graph(g: Graph) -> bool:
    """A star with at least 3 vertices (smaller stars are paths)."""
    return g.n >= 3 and g.edge_count == g.n - 1 and max(g.degrees()) == g.n - 1


def is_complete_graph(g: Graph) -> bool:
    return g.edge_count == g.n * (g.n - 1) // 2


def is_lollipop_graph(g: Graph, m: int = 3) -> bool:
    """Isomorphic to the lollipop with clique size m and tail n-m >= 1?"""
    k = g.n - m
    if k < 1:
        return False
    return (
        sorted(g.degrees()) == sorted(build_named("lollipop", k=k, m=m).degrees())
        and canonical_form(g) == _named_canonical("lollipop", g.n, k, m)
    )


def is_dynkin_graph(g: Graph) -> bool:
    if g.n < 3:
        return False
    return (
        sorted(g.degrees()) == sorted(build_named("dynkin_d", g.n).degrees())
        and canonical_form(g) == _named_canonical("dynkin_d", g.n, None, None)
    )


def is_theta0_graph(g: Graph) -> bool:
    if g.n != 7 or g.edge_count != 8:
        return False
    return canonical_form(g) == _named_canonical("theta0", 7, None, None)


def _cheap_components(g: Graph) -> list[int]:
    from .graphs import _component_masks

    return _component_masks(g._adj, (1 << g.n) - 1)


# -- exhaustive enumeration up to isomorphism ---------------------------------

# Known counts of simple graphs up to isomorphism, used as a self-check.
NONISOMORPHIC_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


@lru_cache(maxsize=None)
def enumerate_nonisomorphic(n: int) -> tuple[Graph, ...]:
    """All graphs on n vertices up to isomorphism, canonically labeled.

    Built by augmenting each (n-1)-vertex representative with one new
    vertex attached to every possible neighborhood, then deduplicating by
    canonical form.  Deterministic order: by edge count, then edge tuple.
    """
    if n < 1:
        raise InvalidArgumentError(f"n must be positive, got {n}")
    if n == 1:
        return (Graph(1),)
    seen: dict[CanonicalForm, Graph] = {}
    for parent in enumerate_nonisomorphic(n - 1):
        base_edges = list(parent.edges)
        for neighborhood in range(1 << (n - 1)):
            edges = base_edges + [
                (v + 1, n) for v in range(n - 1) if neighborhood >> v & 1
            ]
            form = canonical_form(Graph(n, edges))
            if form not in seen:
                seen[form] = Graph(form[0], form[1])
    result = tuple(sorted(seen.values(), key=lambda g: (g.edge_count, g.edges)))
    expected = NONISOMORPHIC_COUNTS.get(n)
    if expected is not None and len(result) != expected:
        raise AssertionError(
            f"graph enumeration produced {len(result)} classes on {n} vertices, expected {expected}"
        )
    return result
