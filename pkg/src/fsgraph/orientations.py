"""Orientations of a graph and the flip moves that act on the acyclic ones.

An orientation is a bit vector over the graph's canonical edge order
(lexicographic on sorted endpoint pairs): bit t clear means the t-th edge
runs low -> high, bit t set means high -> low.  Classes of every
equivalence kind are keyed and sorted by that bit vector, so all outputs
are order-stable.
"""

from __future__ import annotations

import itertools
import math
from collections import deque

from .config import DEFAULT_EDGE_CAP, DEFAULT_EXTENSION_VERTEX_CAP
from .errors import InvalidArgumentError, InvalidMoveError, ResourceLimitError
from .graphs import Graph, _component_masks
from .perms import Permutation

PARTITION_KINDS = ("toric", "double_flip", "local_double_flip", "ab_flip")


class Orientation:
    """A direction for every edge of a fixed graph (not necessarily acyclic)."""

    __slots__ = ("graph", "bits", "_reach")

    def __init__(self, graph: Graph, bits: int):
        if bits < 0 or bits >> graph.edge_count:
            raise InvalidArgumentError(
                f"direction bits {bits:#x} out of range for {graph.edge_count} edges"
            )
        self.graph = graph
        self.bits = bits
        self._reach: tuple[int, ...] | None = None

    # -- directions --------------------------------------------------------

    def directed_edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as 1-indexed (tail, head) pairs in canonical edge order."""
        out = []
        for t, (a, b) in enumerate(self.graph._edges):
            if self.bits >> t & 1:
                out.append((b + 1, a + 1))
            else:
                out.append((a + 1, b + 1))
        return tuple(out)

    def _out_masks(self) -> list[int]:
        out = [0] * self.graph.n
        for t, (a, b) in enumerate(self.graph._edges):
            if self.bits >> t & 1:
                out[b] |= 1 << a
            else:
                out[a] |= 1 << b
        return out

    def sources(self) -> tuple[int, ...]:
        """Vertices of in-degree 0 (isolated vertices count)."""
        indeg = [0] * self.graph.n
        for tail, head in self.directed_edges():
            indeg[head - 1] += 1
        return tuple(v + 1 for v in range(self.graph.n) if indeg[v] == 0)

    def sinks(self) -> tuple[int, ...]:
        outdeg = [0] * self.graph.n
        for tail, head in self.directed_edges():
            outdeg[tail - 1] += 1
        return tuple(v + 1 for v in range(self.graph.n) if outdeg[v] == 0)

    def is_acyclic(self) -> bool:
        n = self.graph.n
        out = self._out_masks()
        indeg = [0] * n
        for v in range(n):
            m = out[v]
            while m:
                bit = m & -m
                m &= m - 1
                indeg[bit.bit_length() - 1] += 1
        ready = [v for v in range(n) if indeg[v] == 0]
        removed = 0
        while ready:
            v = ready.pop()
            removed += 1
            m = out[v]
            while m:
                bit = m & -m
                m &= m - 1
                u = bit.bit_length() - 1
                indeg[u] -= 1
                if indeg[u] == 0:
                    ready.append(u)
        return removed == n

    def reachability(self) -> tuple[int, ...]:
        """Bitmask per vertex of everything strictly reachable from it (cached)."""
        if self._reach is None:
            n = self.graph.n
            out = self._out_masks()
            reach = [0] * n
            order = self._topological_order()
            for v in reversed(order):
                r = out[v]
                m = out[v]
                while m:
                    bit = m & -m
                    m &= m - 1
                    r |= reach[bit.bit_length() - 1]
                reach[v] = r
            self._reach = tuple(reach)
        return self._reach

    def _topological_order(self) -> list[int]:
        n = self.graph.n
        out = self._out_masks()
        indeg = [0] * n
        for v in range(n):
            m = out[v]
            while m:
                bit = m & -m
                m &= m - 1
                indeg[bit.bit_length() - 1] += 1
        ready = [v for v in range(n) if indeg[v] == 0]
        order = []
        while ready:
            v = ready.pop()
            order.append(v)
            m = out[v]
            while m:
                bit = m & -m
                m &= m - 1
                u = bit.bit_length() - 1
                indeg[u] -= 1
                if indeg[u] == 0:
                    ready.append(u)
        if len(order) != n:
            raise InvalidArgumentError("orientation contains a directed cycle")
        return order

    # -- flip moves ---------------------------------------------------------

    def _incident_bits(self, v: int) -> int:
        mask = 0
        for t, (a, b) in enumerate(self.graph._edges):
            if a == v - 1 or b == v - 1:
                mask |= 1 << t
        return mask

    def flip(self, v: int) -> "Orientation":
        """Reverse every edge at v; v must currently be a source or a sink."""
        self.graph._check_vertex(v)
        if v not in self.sources() and v not in self.sinks():
            raise InvalidMoveError(f"vertex {v} is neither a source nor a sink")
        return Orientation(self.graph, self.bits ^ self._incident_bits(v))

    def double_flip(self, u: int, v: int) -> "Orientation":
        """Flip the source u into a sink and the sink v into a source;
        u and v must be distinct and non-adjacent."""
        self.graph._check_vertex(u)
        self.graph._check_vertex(v)
        if u == v:
            raise InvalidMoveError("double flip needs two distinct vertices")
        if self.graph.has_edge(u, v):
            raise InvalidMoveError(f"vertices {u} and {v} are adjacent")
        if u not in self.sources():
            raise InvalidMoveError(f"vertex {u} is not a source")
        if v not in self.sinks():
            raise InvalidMoveError(f"vertex {v} is not a sink")
        return Orientation(self.graph, self.bits ^ self._incident_bits(u) ^ self._incident_bits(v))

    def ab_flip(self, sources_to_flip, sinks_to_flip) -> "Orientation":
        """Simultaneously flip a set of sources and a set of sinks; all the
        chosen vertices must be distinct and pairwise non-adjacent."""
        us = tuple(sorted(sources_to_flip))
        vs = tuple(sorted(sinks_to_flip))
        chosen = us + vs
        for w in chosen:
            self.graph._check_vertex(w)
        if len(set(chosen)) != len(chosen):
            raise InvalidMoveError("flip sets must be disjoint")
        for x, y in itertools.combinations(chosen, 2):
            if self.graph.has_edge(x, y):
                raise InvalidMoveError(f"vertices {x} and {y} are adjacent")
        src = set(self.sources())
        snk = set(self.sinks())
        for u in us:
            if u not in src:
                raise InvalidMoveError(f"vertex {u} is not a source")
        for v in vs:
            if v not in snk:
                raise InvalidMoveError(f"vertex {v} is not a sink")
        bits = self.bits
        for w in chosen:
            bits ^= self._incident_bits(w)
        return Orientation(self.graph, bits)

    # -- identity, order, text ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Orientation)
            and self.bits == other.bits
            and self.graph == other.graph
        )

    def __lt__(self, other: "Orientation") -> bool:
        return self.bits < other.bits

    def __hash__(self) -> int:
        return hash((self.graph, self.bits))

    def __repr__(self) -> str:
        return f"Orientation({self})"

    def __str__(self) -> str:
        return ",".join(f"{t}>{h}" for t, h in self.directed_edges())

    @classmethod
    def from_string(cls, graph: Graph, text: str) -> "Orientation":
        parts = [p for p in text.strip().split(",") if p]
        if len(parts) != graph.edge_count:
            raise InvalidArgumentError(
                f"expected {graph.edge_count} directed edges, got {len(parts)}"
            )
        bits = 0
        for t, part in enumerate(parts):
            try:
                tail_s, head_s = part.split(">")
                tail, head = int(tail_s), int(head_s)
            except ValueError as exc:
                raise InvalidArgumentError(f"bad directed edge {part!r}") from exc
            a, b = graph._edges[t]
            if (tail - 1, head - 1) == (a, b):
                pass
            elif (tail - 1, head - 1) == (b, a):
                bits |= 1 << t
            else:
                raise InvalidArgumentError(
                    f"edge {part!r} does not match canonical edge {(a + 1, b + 1)}"
                )
        return cls(graph, bits)


def orientation_from_permutation(graph: Graph, sigma: Permutation) -> Orientation:
    """The acyclic orientation whose linear extensions include sigma: each
    edge points from the endpoint appearing earlier in the word."""
    if graph.n != sigma.n:
        raise InvalidArgumentError(
            f"graph has {graph.n} vertices but permutation has length {sigma.n}"
        )
    position = [0] * graph.n
    for pos, value in enumerate(sigma.word):
        position[value - 1] = pos
    bits = 0
    for t, (a, b) in enumerate(graph._edges):
        if position[a] > position[b]:
            bits |= 1 << t
    return Orientation(graph, bits)


def enumerate_acyclic(graph: Graph, edge_cap: int = DEFAULT_EDGE_CAP) -> tuple[Orientation, ...]:
    """All acyclic orientations, sorted by direction bit vector.

    Small edge counts get the straight filter over all 2^m direction
    vectors; past 16 edges it is cheaper to collect the orientations
    induced by all n! vertex orders, which produces the same set.
    """
    m = graph.edge_count
    if m > edge_cap:
        raise ResourceLimitError(f"{m} edges exceeds the enumeration cap of {edge_cap}")
    if m == 0:
        return (Orientation(graph, 0),)
    if m <= 16 or math.factorial(graph.n) >= 1 << m:
        result = [
            o for bits in range(1 << m) if (o := Orientation(graph, bits)).is_acyclic()
        ]
        return tuple(result)
    seen: set[int] = set()
    edges = graph._edges
    for word in itertools.permutations(range(graph.n)):
        position = [0] * graph.n
        for pos, v in enumerate(word):
            position[v] = pos
        bits = 0
        for t, (a, b) in enumerate(edges):
            if position[a] > position[b]:
                bits |= 1 << t
        seen.add(bits)
    return tuple(Orientation(graph, bits) for bits in sorted(seen))


class OrientationPartition:
    """A partition of Acyc(G) into equivalence classes of one move kind."""

    __slots__ = ("graph", "kind", "a", "b", "classes", "_index")

    def __init__(
        self,
        graph: Graph,
        kind: str,
        classes: tuple[tuple[Orientation, ...], ...],
        a: int | None = None,
        b: int | None = None,
    ):
        self.graph = graph
        self.kind = kind
        self.a = a
        self.b = b
        self.classes = classes
        self._index = {o.bits: i for i, cls in enumerate(classes) for o in cls}

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def class_index(self, orientation: Orientation) -> int:
        if orientation.graph != self.graph or orientation.bits not in self._index:
            raise InvalidArgumentError("orientation is not part of this partition")
        return self._index[orientation.bits]

    def all_orientations(self) -> tuple[Orientation, ...]:
        return tuple(sorted((o for cls in self.classes for o in cls), key=lambda o: o.bits))

    def to_json_dict(self) -> dict:
        data: dict = {"kind": self.kind}
        if self.kind == "ab_flip":
            data["a"] = self.a
            data["b"] = self.b
        data["classes"] = [[str(o) for o in cls] for cls in self.classes]
        return data


def _legal_moves(o: Orientation, kind: str, a: int | None, b: int | None, comp_id):
    src = o.sources()
    snk = o.sinks()
    if kind == "toric":
        for v in sorted(set(src) | set(snk)):
            yield o.flip(v)
        return
    if kind in ("double_flip", "local_double_flip"):
        for u in src:
            for v in snk:
                if u == v or o.graph.has_edge(u, v):
                    continue
                if kind == "local_double_flip" and comp_id[u - 1] != comp_id[v - 1]:
                    continue
                yield o.double_flip(u, v)
        return
    if kind == "ab_flip":
        shapes = [(a, b)] if a == b else [(a, b), (b, a)]
        for na, nb in shapes:
            for us in itertools.combinations(src, na):
                us_set = set(us)
                for vs in itertools.combinations(snk, nb):
                    if us_set & set(vs):
                        continue
                    chosen = us + vs
                    if any(
                        o.graph.has_edge(x, y) for x, y in itertools.combinations(chosen, 2)
                    ):
                        continue
                    yield o.ab_flip(us, vs)
        return
    raise InvalidArgumentError(f"unknown partition kind {kind!r}")


def partition_by_moves(
    graph: Graph,
    kind: str,
    a: int | None = None,
    b: int | None = None,
    edge_cap: int = DEFAULT_EDGE_CAP,
) -> OrientationPartition:
    """Group the acyclic orientations into classes reachable by the chosen
    move kind, via breadth-first closure (no symmetry shortcuts)."""
    if kind not in PARTITION_KINDS:
        raise InvalidArgumentError(f"kind must be one of {PARTITION_KINDS}, got {kind!r}")
    if kind == "ab_flip":
        if a is None or b is None or a < 0 or b < 0:
            raise InvalidArgumentError("ab_flip needs non-negative sizes a and b")
    comp_id = None
    if kind == "local_double_flip":
        comp_id = [0] * graph.n
        for i, mask in enumerate(_component_masks(graph._adj, (1 << graph.n) - 1)):
            while mask:
                bit = mask & -mask
                mask &= mask - 1
                comp_id[bit.bit_length() - 1] = i
    orientations = enumerate_acyclic(graph, edge_cap=edge_cap)
    assigned: dict[int, int] = {}
    classes: list[tuple[Orientation, ...]] = []
    for start in orientations:
        if start.bits in assigned:
            continue
        label = len(classes)
        members = {start.bits: start}
        assigned[start.bits] = label
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for nxt in _legal_moves(cur, kind, a, b, comp_id):
                assert nxt.is_acyclic(), "flip move broke acyclicity"
                if nxt.bits not in members:
                    members[nxt.bits] = nxt
                    assigned[nxt.bits] = label
                    queue.append(nxt)
        classes.append(tuple(members[bits] for bits in sorted(members)))
    classes.sort(key=lambda cls: cls[0].bits)
    return OrientationPartition(graph, kind, tuple(classes), a=a, b=b)


def linear_extensions(
    o: Orientation, n_cap: int = DEFAULT_EXTENSION_VERTEX_CAP
) -> frozenset[Permutation]:
    """All vertex orders compatible with every directed reachability of o."""
    n = o.graph.n
    if n > n_cap:
        raise ResourceLimitError(f"linear extension listing capped at n <= {n_cap}")
    if not o.is_acyclic():
        raise InvalidArgumentError("cyclic orientations have no linear extensions")
    pred = [0] * n
    for tail, head in o.directed_edges():
        pred[head - 1] |= 1 << (tail - 1)
    out: list[Permutation] = []
    word = bytearray(n)

    def place(depth: int, used: int):
        if depth == n:
            out.append(Permutation._from_word(bytes(word)))
            return
        for v in range(n):
            bit = 1 << v
            if used & bit or (pred[v] & ~used):
                continue
            word[depth] = v + 1
            place(depth + 1, used | bit)

    place(0, 0)
    return frozenset(out)


def linear_extensions_of_class(
    orientations, n_cap: int = DEFAULT_EXTENSION_VERTEX_CAP
) -> frozenset[Permutation]:
    """Union of the linear extensions over a class of orientations.  The
    union is disjoint: each permutation extends exactly one orientation."""
    result: set[Permutation] = set()
    for o in orientations:
        result.update(linear_extensions(o, n_cap=n_cap))
    return frozenset(result)


def toggle(o: Orientation, sigma: Permutation, i: int) -> Permutation:
    """Swap positions i, i+1 when the two entries are order-incomparable in
    o's reachability order; otherwise return sigma unchanged."""
    n = o.graph.n
    if sigma.n != n:
        raise InvalidArgumentError("permutation length does not match the graph")
    if not 1 <= i <= n - 1:
        raise InvalidArgumentError(f"toggle position must be in 1..{n - 1}, got {i}")
    position = [0] * n
    for pos, value in enumerate(sigma.word):
        position[value - 1] = pos
    for tail, head in o.directed_edges():
        if position[tail - 1] > position[head - 1]:
            raise InvalidArgumentError("permutation is not a linear extension of the orientation")
    reach = o.reachability()
    x = sigma.word[i - 1] - 1
    y = sigma.word[i] - 1
    if reach[x] >> y & 1:
        return sigma
    return sigma.apply_transposition(i, i + 1)


def phi(partition: OrientationPartition, class_id: int, verify: bool = False) -> int:
    """Advance a double-flip class by turning one source into a sink.

    Well-defined on double-flip classes: the landing class does not depend
    on the member or the source chosen, which ``verify=True`` rechecks
    exhaustively.
    """
    if partition.kind != "double_flip":
        raise InvalidArgumentError("phi acts on double-flip partitions")
    if not 0 <= class_id < partition.class_count:
        raise InvalidArgumentError(f"class id {class_id} out of range")
    cls = partition.classes[class_id]
    rep = cls[0]
    target = partition.class_index(rep.flip(rep.sources()[0]))
    if verify:
        for member in cls:
            for s in member.sources():
                if partition.class_index(member.flip(s)) != target:
                    raise AssertionError("phi image depended on the flipped source")
    return target
