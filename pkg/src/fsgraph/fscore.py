"""Direct construction and exploration of friends-and-strangers graphs.

Vertices of FS(X, Y) are permutations; two are adjacent when they differ
by swapping the entries across one edge of X whose two entries are
adjacent in Y.  Components are discovered by breadth-first search over
packed byte states with a visited hash set; nothing materializes the
edge set.  Seeding the sweep in lexicographic order makes every report
deterministic, and the representative of a component is automatically
its lexicographically least permutation.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass

from .config import DEFAULT_CONFIG, RunConfig
from .errors import InvalidArgumentError, ResourceLimitError
from .graphs import Graph, induced_subgraph, structure_report
from .perms import Permutation


class FSInstance:
    """The pair (X, Y) defining FS(X, Y); X supplies positions, Y labels."""

    __slots__ = ("x", "y", "n", "_xedges", "_yadj")

    def __init__(self, x: Graph, y: Graph):
        if x.n != y.n:
            raise InvalidArgumentError(
                f"X has {x.n} vertices but Y has {y.n}; they must agree"
            )
        self.x = x
        self.y = y
        self.n = x.n
        self._xedges = x._edges          # 0-indexed position pairs
        self._yadj = y._adj              # 0-indexed label adjacency masks

    def __repr__(self) -> str:
        return f"FSInstance(x={self.x!r}, y={self.y!r})"


@dataclass(frozen=True)
class ComponentReport:
    component_count: int
    sizes: tuple[int, ...]                 # multiset, ascending
    representatives: tuple[Permutation, ...]   # lexicographically least, in order
    explored_vertices: int

    def to_json_dict(self, n: int) -> dict:
        return {
            "n": n,
            "component_count": self.component_count,
            "sizes": list(self.sizes),
            "representatives": [str(p) for p in self.representatives],
        }


def _state_of(sigma: Permutation) -> bytes:
    return bytes(v - 1 for v in sigma.word)


def _perm_of(state: bytes) -> Permutation:
    return Permutation._from_word(bytes(v + 1 for v in state))


def _check_statespace(n: int, config: RunConfig) -> int:
    total = math.factorial(n)
    if total > config.state_cap:
        raise ResourceLimitError(
            f"{n}! = {total} states exceeds the configured cap of {config.state_cap}"
        )
    return total


def _expand(state: bytes, xedges, yadj) -> list[bytes]:
    out = []
    for i, j in xedges:
        a = state[i]
        b = state[j]
        if yadj[a] >> b & 1:
            nxt = bytearray(state)
            nxt[i] = b
            nxt[j] = a
            out.append(bytes(nxt))
    return out


def friendly_neighbors(inst: FSInstance, sigma: Permutation) -> list[Permutation]:
    """Neighbors of sigma in FS(X, Y), ordered by the X edge performing the swap."""
    if sigma.n != inst.n:
        raise InvalidArgumentError(
            f"permutation length {sigma.n} does not match n = {inst.n}"
        )
    return [_perm_of(s) for s in _expand(_state_of(sigma), inst._xedges, inst._yadj)]


def _bfs_from(inst: FSInstance, start: bytes, cap: int) -> set[bytes]:
    xedges, yadj = inst._xedges, inst._yadj
    visited = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for i, j in xedges:
            a = cur[i]
            b = cur[j]
            if yadj[a] >> b & 1:
                nxt = bytearray(cur)
                nxt[i] = b
                nxt[j] = a
                s = bytes(nxt)
                if s not in visited:
                    if len(visited) >= cap:
                        raise ResourceLimitError(
                            f"component search exceeded the cap of {cap} states"
                        )
                    visited.add(s)
                    queue.append(s)
    return visited


def component_of(
    inst: FSInstance, sigma: Permutation, config: RunConfig = DEFAULT_CONFIG
) -> frozenset[Permutation]:
    """Everything reachable from sigma by friendly swaps."""
    if sigma.n != inst.n:
        raise InvalidArgumentError(
            f"permutation length {sigma.n} does not match n = {inst.n}"
        )
    states = _bfs_from(inst, _state_of(sigma), config.state_cap)
    return frozenset(_perm_of(s) for s in states)


def iter_component_states(inst: FSInstance, config: RunConfig = DEFAULT_CONFIG):
    """Yield the component state sets in lexicographic order of their least
    member, covering all n! permutations."""
    _check_statespace(inst.n, config)
    seen: set[bytes] = set()
    for word in itertools.permutations(range(inst.n)):
        start = bytes(word)
        if start in seen:
            continue
        comp = _bfs_from(inst, start, config.state_cap)
        seen |= comp
        yield start, comp


def components(inst: FSInstance, config: RunConfig = DEFAULT_CONFIG) -> ComponentReport:
    """Exhaustive component sweep of all n! vertices."""
    sizes = []
    reps = []
    explored = 0
    for start, comp in iter_component_states(inst, config):
        sizes.append(len(comp))
        reps.append(_perm_of(start))
        explored += len(comp)
    return ComponentReport(
        component_count=len(sizes),
        sizes=tuple(sorted(sizes)),
        representatives=tuple(reps),
        explored_vertices=explored,
    )


def is_connected(inst: FSInstance, config: RunConfig = DEFAULT_CONFIG) -> bool:
    """Single BFS from the identity; connected iff it reaches all n! states."""
    total = _check_statespace(inst.n, config)
    start = bytes(range(inst.n))
    return len(_bfs_from(inst, start, config.state_cap)) == total


def component_count(inst: FSInstance, config: RunConfig = DEFAULT_CONFIG) -> int:
    return components(inst, config).component_count


def inverse_isomorphism_check(inst: FSInstance, config: RunConfig = DEFAULT_CONFIG) -> bool:
    """Verify that inversion maps the edges of FS(X, Y) bijectively onto the
    edges of FS(Y, X)."""
    _check_statespace(inst.n, config)
    flipped = FSInstance(inst.y, inst.x)
    forward_half_edges = 0
    backward_half_edges = 0
    for word in itertools.permutations(range(inst.n)):
        state = bytes(word)
        image = _state_of(_perm_of(state).inverse())
        neighbors = _expand(state, inst._xedges, inst._yadj)
        image_neighbors = set(_expand(image, flipped._xedges, flipped._yadj))
        forward_half_edges += len(neighbors)
        backward_half_edges += len(image_neighbors)
        for nb in neighbors:
            if _state_of(_perm_of(nb).inverse()) not in image_neighbors:
                return False
    return forward_half_edges == backward_half_edges


# -- cut-vertex incidence matrices --------------------------------------------


def _count_margin_matrices(rows: tuple[int, ...], cols: tuple[int, ...], memo: dict) -> int:
    if not rows:
        return 1 if all(c == 0 for c in cols) else 0
    key = (rows, tuple(sorted(cols)))
    if key in memo:
        return memo[key]
    target = rows[0]
    rest = rows[1:]
    total = 0

    def distribute(idx: int, remaining: int, current: tuple[int, ...]):
        nonlocal total
        if idx == len(cols) - 1:
            if remaining <= cols[idx]:
                reduced = tuple(
                    c - (current + (remaining,))[t] for t, c in enumerate(cols)
                )
                total += _count_margin_matrices(rest, reduced, memo)
            return
        for take in range(min(remaining, cols[idx]) + 1):
            distribute(idx + 1, remaining - take, current + (take,))

    distribute(0, target, ())
    memo[key] = total
    return total


def incidence_matrix_count(x: Graph, y: Graph, x0: int, y0: int) -> int:
    """Number of nonnegative integer matrices whose row sums are the
    component sizes of X - x0 and whose column sums are those of Y - y0.
    This counts the reachability classes frozen by the two cut vertices, a
    lower bound on the number of components of FS(X, Y)."""
    if x.n != y.n:
        raise InvalidArgumentError("X and Y must have the same number of vertices")
    rx = structure_report(x)
    ry = structure_report(y)
    if x0 not in rx.cut_vertices:
        raise InvalidArgumentError(f"vertex {x0} is not a cut vertex of X")
    if y0 not in ry.cut_vertices:
        raise InvalidArgumentError(f"vertex {y0} is not a cut vertex of Y")
    row_sums = _deleted_component_sizes(x, x0)
    col_sums = _deleted_component_sizes(y, y0)
    return _count_margin_matrices(tuple(row_sums), tuple(col_sums), {})


def _deleted_component_sizes(g: Graph, v: int) -> tuple[int, ...]:
    sub, _ = induced_subgraph(g, (u for u in range(1, g.n + 1) if u != v))
    return tuple(len(c) for c in structure_report(sub).components)


# -- component-count identity for disconnected X ------------------------------


def _ordered_set_partitions(universe: tuple[int, ...], sizes: tuple[int, ...]):
    if not sizes:
        yield ()
        return
    first, rest = sizes[0], sizes[1:]
    for chosen in itertools.combinations(universe, first):
        chosen_set = set(chosen)
        remaining = tuple(v for v in universe if v not in chosen_set)
        for tail in _ordered_set_partitions(remaining, rest):
            yield (chosen,) + tail


def decomposition_check(x: Graph, y: Graph, config: RunConfig = DEFAULT_CONFIG) -> bool:
    """Check the component-count identity that splits FS(X, Y) along the
    components of a disconnected X: the total equals the sum, over ordered
    set partitions of V(Y) with matching sizes, of the product of the
    factor component counts."""
    if x.n != y.n:
        raise InvalidArgumentError("X and Y must have the same number of vertices")
    rx = structure_report(x)
    if rx.is_connected:
        raise InvalidArgumentError("decomposition check needs a disconnected X")
    direct = component_count(FSInstance(x, y), config)

    factors = []
    for comp in rx.components:
        sub, _ = induced_subgraph(x, comp)
        factors.append(sub)
    sizes = tuple(g.n for g in factors)

    cache: dict[tuple, int] = {}

    def factor_count(xi: Graph, members: tuple[int, ...]) -> int:
        sub_y, _ = induced_subgraph(y, members)
        key = (xi.edges, xi.n, sub_y._adj)
        if key not in cache:
            cache[key] = component_count(FSInstance(xi, sub_y), config)
        return cache[key]

    total = 0
    universe = tuple(range(1, y.n + 1))
    for parts in _ordered_set_partitions(universe, sizes):
        product = 1
        for xi, members in zip(factors, parts):
            product *= factor_count(xi, members)
            if product == 0:
                break
        total += product
    return total == direct


# -- DOT export ----------------------------------------------------------------

FS_DOT_MAX_N = 5


def fs_to_dot(inst: FSInstance, config: RunConfig = DEFAULT_CONFIG) -> str:
    """DOT rendering of the whole FS(X, Y); gated to tiny n."""
    if inst.n > FS_DOT_MAX_N:
        raise ResourceLimitError(f"DOT export limited to n <= {FS_DOT_MAX_N}")
    _check_statespace(inst.n, config)
    lines = ["graph FS {"]
    for word in itertools.permutations(range(inst.n)):
        state = bytes(word)
        lines.append(f'  "{_perm_of(state)}";')
    for word in itertools.permutations(range(inst.n)):
        state = bytes(word)
        me = _perm_of(state)
        for nb in _expand(state, inst._xedges, inst._yadj):
            if state < nb:
                lines.append(f'  "{me}" -- "{_perm_of(nb)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
