"""Exact structural results about the components of FS(X, Y).

Each operation here is a fast path whose answer is pinned down by a
structure theorem: the path case counts acyclic orientations of the
complement, the cycle case counts double-flip classes (equivalently,
flip classes times the gcd of the complement's component sizes), the
star case applies the classical puzzle classification for biconnected
partners, and a battery of certificates decides connectivity for broad
families.  Every route is cross-validated against the brute-force search
in :mod:`fsgraph.fscore` by the test suite; nothing here ever invents a
count the theorems do not force.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import (
    DEFAULT_CONFIG,
    DEFAULT_EXTENSION_VERTEX_CAP,
    DEFAULT_HEREDITARY_BASE,
    RunConfig,
)
from .errors import InvalidArgumentError
from .fscore import FSInstance, component_count, is_connected, iter_component_states
from .graphs import (
    Graph,
    delete_vertex,
    has_hamiltonian_path,
    induced_subgraph,
    iter_hamiltonian_paths,
    structure_report,
)
from .iso import (
    canonical_form,
    is_cycle_graph,
    is_dynkin_graph,
    is_lollipop_graph,
    is_path_graph,
    is_star_graph,
    is_theta0_graph,
)
from .orientations import (
    Orientation,
    enumerate_acyclic,
    linear_extensions,
    partition_by_moves,
)
from .perms import Permutation
from .tutte import tutte_eval

__all__ = [
    "ConnectivityVerdict",
    "PathStructure",
    "CycleStructure",
    "StarStructure",
    "CutPathCertificate",
    "HereditaryResult",
    "tutte_eval",
    "path_fs_structure",
    "cycle_fs_structure",
    "cycle_is_connected",
    "star_fs_structure",
    "cut_path_certificate",
    "decide_connectivity",
    "hereditary_sufficiency",
    "hereditary_component_bound",
]


# -- path case -----------------------------------------------------------------


@dataclass(frozen=True)
class PathStructure:
    component_count: int
    # One entry per acyclic orientation of the complement: the orientation
    # together with the set of permutations forming that component.
    classes: tuple[tuple[Orientation, frozenset[Permutation]], ...] | None
    listing_error: str | None = None


def path_fs_structure(
    y: Graph, include_classes: bool = False, config: RunConfig = DEFAULT_CONFIG
) -> PathStructure:
    """Components of FS(Path_n, Y): one per acyclic orientation of the
    complement of Y, with vertex set the orientation's linear extensions."""
    comp = y.complement()
    count = tutte_eval(comp, 2, 0)
    if not include_classes:
        return PathStructure(count, None)
    error = _listing_error(y.n, config)
    if error is not None:
        return PathStructure(count, None, error)
    orientations = enumerate_acyclic(comp)
    if len(orientations) != count:
        raise AssertionError(
            f"orientation count {len(orientations)} disagrees with T(2,0) = {count}"
        )
    classes = tuple((o, linear_extensions(o)) for o in orientations)
    return PathStructure(count, classes)


def _listing_error(n: int, config: RunConfig) -> str | None:
    if n > DEFAULT_EXTENSION_VERTEX_CAP:
        return f"listing capped at n <= {DEFAULT_EXTENSION_VERTEX_CAP}"
    if math.factorial(n) > config.listing_cap:
        return f"{n}! exceeds the listing cap of {config.listing_cap}"
    return None


# -- cycle case ----------------------------------------------------------------


@dataclass(frozen=True)
class CycleStructure:
    component_count: int
    nu: int
    toric_count: int
    # One entry per double-flip class of the complement's acyclic
    # orientations: the class members and their pooled linear extensions.
    classes: tuple[tuple[tuple[Orientation, ...], frozenset[Permutation]], ...] | None
    listing_error: str | None = None


def cycle_fs_structure(
    y: Graph, include_classes: bool = False, config: RunConfig = DEFAULT_CONFIG
) -> CycleStructure:
    """Components of FS(Cycle_n, Y): one per double-flip class of the
    complement's acyclic orientations; their number is the flip-class
    count T(1, 0) times the gcd of the complement's component sizes."""
    if y.n < 3:
        raise InvalidArgumentError(f"the cycle case needs n >= 3, got {y.n}")
    comp = y.complement()
    report = structure_report(comp)
    nu = report.gcd_of_component_sizes
    toric_count = tutte_eval(comp, 1, 0)
    count = toric_count * nu
    if not include_classes:
        return CycleStructure(count, nu, toric_count, None)
    error = _listing_error(y.n, config)
    if error is not None:
        return CycleStructure(count, nu, toric_count, None, error)
    partition = partition_by_moves(comp, "double_flip")
    if partition.class_count != count:
        raise AssertionError(
            f"double-flip classes ({partition.class_count}) disagree with "
            f"T(1,0) * nu = {toric_count} * {nu}"
        )
    classes = tuple(
        (cls, _pooled_extensions(cls)) for cls in partition.classes
    )
    return CycleStructure(count, nu, toric_count, classes)


def _pooled_extensions(cls: tuple[Orientation, ...]) -> frozenset[Permutation]:
    pooled: set[Permutation] = set()
    for o in cls:
        pooled.update(linear_extensions(o))
    return frozenset(pooled)


def cycle_is_connected(y: Graph) -> bool:
    """FS(Cycle_n, Y) is connected iff the complement of Y is a forest whose
    tree sizes are setwise coprime."""
    if y.n < 3:
        raise InvalidArgumentError(f"the cycle case needs n >= 3, got {y.n}")
    report = structure_report(y.complement())
    return report.is_forest and report.gcd_of_component_sizes == 1


# -- star case -----------------------------------------------------------------


@dataclass(frozen=True)
class StarStructure:
    component_count: int
    sizes: tuple[int, ...] | None   # None when the classification fixes only the count


def star_fs_structure(y: Graph, config: RunConfig = DEFAULT_CONFIG) -> StarStructure | None:
    """Components of FS(Star_n, Y) for biconnected Y; None when Y is not
    biconnected (callers fall back to brute force).

    Classification: a cycle partner splits into (n-2)! components of size
    n(n-1); the 7-vertex theta exception has exactly 6 components (the
    classification does not fix their sizes); otherwise 2 halves of size
    n!/2 when Y is bipartite and a single component when it is not.
    """
    n = y.n
    if n < 3:
        raise InvalidArgumentError(f"the star case needs n >= 3, got {n}")
    report = structure_report(y)
    if not report.is_biconnected:
        return None
    if is_cycle_graph(y):
        count = math.factorial(n - 2)
        return StarStructure(count, (n * (n - 1),) * count)
    if n == 7 and is_theta0_graph(y):
        return StarStructure(6, None)
    if report.is_bipartite:
        half = math.factorial(n) // 2
        return StarStructure(2, (half, half))
    return StarStructure(1, (math.factorial(n),))


# -- disconnection certificates --------------------------------------------------


@dataclass(frozen=True)
class CutPathCertificate:
    d: int
    path: tuple[int, ...] | None


def _vertex_components(x: Graph, removed: int) -> list[frozenset[int]]:
    from .graphs import _component_masks, _mask_to_vertices

    mask = ((1 << x.n) - 1) & ~(1 << (removed - 1))
    return [frozenset(_mask_to_vertices(m)) for m in _component_masks(x._adj, mask)]


def _separating_path(x: Graph, path: tuple[int, ...]) -> bool:
    """Check the trapping conditions that make a candidate cut path usable:
    some start-side component R (off the path) exists at the first vertex,
    and deleting each later path vertex leaves R plus the traversed prefix
    as a union of whole components.  A plain chord or a detour around the
    path breaks this and the label-trapping argument with it."""
    d = len(path)
    if d == 1:
        return True
    first_parts = _vertex_components(x, path[0])
    candidates = [part for part in first_parts if path[1] not in part]
    for start_side in candidates:
        ok = True
        for i in range(2, d + 1):
            trapped = start_side | frozenset(path[: i - 1])
            for part in _vertex_components(x, path[i - 1]):
                overlap = len(part & trapped)
                if overlap and overlap != len(part):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return True
    return False


def cut_path_certificate(x: Graph) -> CutPathCertificate:
    """Longest usable cut path: endpoints are cut vertices, interior
    vertices have degree exactly 2, and every prefix of the path separates
    the start side from the rest (d = 0 when X has no cut vertex).

    Interior vertices have a forced continuation, so walking from every
    cut vertex through every neighbor enumerates all candidates; each
    candidate is then vetted by the separation check above.
    """
    report = structure_report(x)
    cuts = sorted(report.cut_vertices)
    if not cuts:
        return CutPathCertificate(0, None)
    cut_set = set(cuts)
    best = (1, (cuts[0],))
    for s in cuts:
        for u in x.neighbors(s):
            path = [s, u]
            prev, cur = s, u
            while True:
                if (
                    cur in cut_set
                    and len(path) > best[0]
                    and _separating_path(x, tuple(path))
                ):
                    best = (len(path), tuple(path))
                if x.degree(cur) != 2:
                    break
                a, b = x.neighbors(cur)
                nxt = b if a == prev else a
                if nxt in path:
                    break
                path.append(nxt)
                prev, cur = cur, nxt
    return CutPathCertificate(best[0], best[1])


def bipartite_disconnection(x: Graph, y: Graph) -> dict | None:
    """Both graphs bipartite on n >= 3 vertices forces a parity invariant
    that splits FS(X, Y)."""
    if x.n < 3:
        return None
    rx = structure_report(x)
    ry = structure_report(y)
    if rx.is_bipartite and ry.is_bipartite:
        return {
            "x_bipartition": [list(part) for part in rx.bipartition],
            "y_bipartition": [list(part) for part in ry.bipartition],
        }
    return None


def cut_path_disconnection(x: Graph, y: Graph) -> dict | None:
    """A cut path of length d in X plus a vertex of degree <= d in Y pins
    that vertex's label, splitting FS(X, Y)."""
    cert = cut_path_certificate(x)
    if cert.d < 1:
        return None
    ry = structure_report(y)
    if ry.min_degree > cert.d:
        return None
    y0 = next(v for v in range(1, y.n + 1) if y.degree(v) == ry.min_degree)
    return {"d": cert.d, "path": list(cert.path), "low_degree_vertex": y0}


def cut_vertex_disconnection(x: Graph, y: Graph) -> dict | None:
    """Cut vertices on both sides force at least the margin-matrix count of
    components (always >= 2)."""
    if x.n < 3:
        return None
    rx = structure_report(x)
    ry = structure_report(y)
    if not (rx.is_connected and ry.is_connected and rx.cut_vertices and ry.cut_vertices):
        return None
    x0 = min(rx.cut_vertices)
    y0 = min(ry.cut_vertices)
    from .fscore import incidence_matrix_count

    bound = incidence_matrix_count(x, y, x0, y0)
    return {"x_cut_vertex": x0, "y_cut_vertex": y0, "component_lower_bound": bound}


# -- connectivity decision -------------------------------------------------------


@dataclass(frozen=True)
class ConnectivityVerdict:
    status: str                    # "connected" | "disconnected" | "unknown"
    theorem: str | None = None
    witness: dict | None = None

    def to_json_dict(self) -> dict:
        return {"status": self.status, "theorem": self.theorem, "witness": self.witness}


def _family_verdict(a: Graph, b: Graph, side: str) -> ConnectivityVerdict | None:
    """Exact characterizations when the position graph `a` is a named family."""
    n = a.n
    if is_path_graph(a):
        missing = b.complement().edge_count
        return ConnectivityVerdict(
            "connected" if missing == 0 else "disconnected",
            "path-needs-complete",
            {"side": side, "complement_edges": missing},
        )
    if n >= 3 and is_cycle_graph(a):
        report = structure_report(b.complement())
        ok = report.is_forest and report.gcd_of_component_sizes == 1
        return ConnectivityVerdict(
            "connected" if ok else "disconnected",
            "cycle-complement-forest",
            {
                "side": side,
                "complement_is_forest": report.is_forest,
                "component_size_gcd": report.gcd_of_component_sizes,
            },
        )
    if n >= 3 and is_star_graph(a):
        structure = star_fs_structure(b)
        if structure is not None:
            return ConnectivityVerdict(
                "connected" if structure.component_count == 1 else "disconnected",
                "star-biconnected",
                {"side": side, "component_count": structure.component_count},
            )
        return None
    if n >= 4 and is_lollipop_graph(a, 3):
        min_deg = structure_report(b).min_degree
        return ConnectivityVerdict(
            "connected" if min_deg >= n - 2 else "disconnected",
            "lollipop-min-degree",
            {"side": side, "min_degree": min_deg, "threshold": n - 2},
        )
    # The n = 4 spindle is the star on 4 vertices and is handled above; the
    # min-degree characterization for this family is applied from n = 5 up.
    if n >= 5 and is_dynkin_graph(a):
        min_deg = structure_report(b).min_degree
        return ConnectivityVerdict(
            "connected" if min_deg >= n - 2 else "disconnected",
            "dynkin-min-degree",
            {"side": side, "min_degree": min_deg, "threshold": n - 2},
        )
    return None


def decide_connectivity(
    x: Graph, y: Graph, config: RunConfig = DEFAULT_CONFIG
) -> ConnectivityVerdict:
    """Decide connectivity of FS(X, Y) without brute force where a theorem
    applies; returns status "unknown" when no certificate fires.

    Certificate order is fixed: tiny cases, exact families on either side,
    disconnection certificates (disconnected factor, double bipartite, cut
    path + low degree, cut vertices on both sides), then the hereditary
    sufficiency recursion.
    """
    if x.n != y.n:
        raise InvalidArgumentError("X and Y must have the same number of vertices")
    n = x.n
    if n == 1:
        return ConnectivityVerdict("connected", "tiny", {"n": 1})
    if n == 2:
        ok = x.edge_count == 1 and y.edge_count == 1
        return ConnectivityVerdict(
            "connected" if ok else "disconnected", "tiny", {"n": 2}
        )

    for a, b, side in ((x, y, "x"), (y, x, "y")):
        verdict = _family_verdict(a, b, side)
        if verdict is not None:
            return verdict

    rx = structure_report(x)
    ry = structure_report(y)
    if not rx.is_connected or not ry.is_connected:
        return ConnectivityVerdict(
            "disconnected",
            "disconnected-factor",
            {"x_connected": rx.is_connected, "y_connected": ry.is_connected},
        )
    witness = bipartite_disconnection(x, y)
    if witness is not None:
        return ConnectivityVerdict("disconnected", "bipartite-parity", witness)
    witness = cut_path_disconnection(x, y)
    if witness is not None:
        witness = dict(witness, side="x")
        return ConnectivityVerdict("disconnected", "cut-path-degree", witness)
    witness = cut_path_disconnection(y, x)
    if witness is not None:
        witness = dict(witness, side="y")
        return ConnectivityVerdict("disconnected", "cut-path-degree", witness)
    witness = cut_vertex_disconnection(x, y)
    if witness is not None:
        return ConnectivityVerdict("disconnected", "cut-vertex-margins", witness)

    for a, b, side in ((x, y, "x"), (y, x, "y")):
        if has_hamiltonian_path(a) is None:
            continue
        result = hereditary_sufficiency(a, b, config=config)
        if result.proven_connected:
            return ConnectivityVerdict(
                "connected",
                "hereditary-extension",
                {"side": side, "trace": list(result.trace)},
            )

    return ConnectivityVerdict("unknown")


# -- hereditary recursion ---------------------------------------------------------


@dataclass(frozen=True)
class HereditaryResult:
    proven_connected: bool
    trace: tuple[str, ...]


def hereditary_sufficiency(
    x: Graph,
    y: Graph,
    base_size: int = DEFAULT_HEREDITARY_BASE,
    config: RunConfig = DEFAULT_CONFIG,
    max_labelings: int = 24,
) -> HereditaryResult:
    """Prove FS(X, Y) connected by peeling Hamiltonian-path endpoints.

    A relabeling of X along one of its Hamiltonian paths certifies
    connectivity provided Y is connected and deleting any single vertex of
    Y leaves an instance that recurses successfully on (X minus the path's
    last vertex); at ``base_size`` vertices the recursion bottoms out in a
    brute-force search.  Failure to certify proves nothing.
    """
    if x.n != y.n:
        raise InvalidArgumentError("X and Y must have the same number of vertices")
    if has_hamiltonian_path(x) is None:
        raise InvalidArgumentError("the recursion needs X to have a Hamiltonian path")
    memo: dict = {}
    trace: list[str] = []

    def prove(xg: Graph, yg: Graph) -> bool:
        n = xg.n
        if n <= base_size:
            ok = is_connected(FSInstance(xg, yg), config)
            if len(trace) < 200:
                trace.append(f"base n={n}: brute force says {'connected' if ok else 'disconnected'}")
            return ok
        if not structure_report(yg).is_connected:
            if len(trace) < 200:
                trace.append(f"n={n}: partner graph disconnected, branch fails")
            return False
        key = (canonical_form(xg), canonical_form(yg))
        if key in memo:
            return memo[key]
        memo[key] = False
        ok = False
        tried: set = set()
        labelings = 0
        for path in iter_hamiltonian_paths(xg):
            labelings += 1
            if labelings > max_labelings:
                break
            relabel = {v: i for i, v in enumerate(path, start=1)}
            xr = xg.relabel(relabel)
            x_sub, _ = induced_subgraph(xr, range(1, n))
            sub_form = canonical_form(x_sub)
            if sub_form in tried:
                continue
            tried.add(sub_form)
            if all(prove(x_sub, delete_vertex(yg, v)[0]) for v in range(1, n + 1)):
                ok = True
                if len(trace) < 200:
                    trace.append(f"n={n}: certified via Hamiltonian relabeling #{labelings}")
                break
        if not ok and len(trace) < 200:
            trace.append(f"n={n}: no Hamiltonian relabeling certified the instance")
        memo[key] = ok
        return ok

    proven = prove(x, y)
    return HereditaryResult(proven, tuple(trace))


def hereditary_component_bound(
    x: Graph, y: Graph, config: RunConfig = DEFAULT_CONFIG
) -> int | None:
    """Upper bound for the component count of FS(X, Y) by deleting the last
    vertex of a Hamiltonian-path relabeling of X, valid when every
    component contains a permutation whose final-vertex label is a sink of
    the complement orientation.  The hypothesis is checked by brute force;
    None when it fails."""
    if x.n != y.n:
        raise InvalidArgumentError("X and Y must have the same number of vertices")
    n = x.n
    if n < 2:
        return 1
    path = has_hamiltonian_path(x)
    if path is None:
        raise InvalidArgumentError("the bound needs X to have a Hamiltonian path")
    relabel = {v: i for i, v in enumerate(path, start=1)}
    xr = x.relabel(relabel)
    comp_y = y.complement()
    # 0-indexed mask of complement neighbors of the vertex n.
    late_mask = comp_y._adj[n - 1]
    inst = FSInstance(xr, y)
    for _, states in iter_component_states(inst, config):
        if not any(_vertex_n_is_sink(s, n, late_mask) for s in states):
            return None
    x_sub, _ = induced_subgraph(xr, range(1, n))
    y_sub, _ = induced_subgraph(y, range(1, n))
    return component_count(FSInstance(x_sub, y_sub), config)


def _vertex_n_is_sink(state: bytes, n: int, late_mask: int) -> bool:
    """In the orientation induced by this word, vertex n is a sink iff every
    complement-neighbor of n occurs before n in the word."""
    pos = state.index(n - 1)
    for v in state[pos + 1 :]:
        if late_mask >> v & 1:
            return False
    return True
