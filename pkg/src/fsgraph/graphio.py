"""Graph serialization: JSON edge lists, graph6 strings, and DOT export.

The JSON schema is ``{"n": int, "edges": [[i, j], ...]}`` with 1-indexed
endpoints.  graph6 follows the standard 6-bit encoding and is accepted
only in its single-byte size form (n <= 62), which is plenty at desk
scale.
"""

from __future__ import annotations

import json

from .errors import InvalidArgumentError
from .graphs import Graph

GRAPH6_MAX_N = 62


def graph_to_json_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [[a, b] for a, b in g.edges]}


def graph_from_json_dict(data: object) -> Graph:
    if not isinstance(data, dict):
        raise InvalidArgumentError(f"graph JSON must be an object, got {type(data).__name__}")
    extra = set(data) - {"n", "edges"}
    if extra:
        raise InvalidArgumentError(f"unexpected graph JSON keys: {sorted(extra)}")
    if "n" not in data:
        raise InvalidArgumentError('graph JSON needs an "n" field')
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidArgumentError(f'"n" must be an integer, got {n!r}')
    edges = data.get("edges", [])
    if not isinstance(edges, list):
        raise InvalidArgumentError('"edges" must be a list of pairs')
    pairs = []
    for e in edges:
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in e)
        ):
            raise InvalidArgumentError(f"bad edge entry {e!r}")
        pairs.append((e[0], e[1]))
    return Graph(n, pairs)


def parse_graph_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidArgumentError(f"invalid JSON: {exc}") from exc
    return graph_from_json_dict(data)


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise InvalidArgumentError(f"graph6 export limited to n <= {GRAPH6_MAX_N}")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g._adj[i] >> j & 1 else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(63 + g.n)]
    for t in range(0, len(bits), 6):
        value = 0
        for b in bits[t : t + 6]:
            value = value << 1 | b
        chars.append(chr(63 + value))
    return "".join(chars)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise InvalidArgumentError("empty graph6 string")
    vals = [ord(c) - 63 for c in s]
    if any(v < 0 or v > 63 for v in vals):
        raise InvalidArgumentError(f"invalid graph6 characters in {text!r}")
    n = vals[0]
    if n > GRAPH6_MAX_N:
        raise InvalidArgumentError(f"only the short graph6 size form (n <= {GRAPH6_MAX_N}) is supported")
    if n == 0:
        raise InvalidArgumentError("graph6 string encodes an empty vertex set")
    need = (n * (n - 1) // 2 + 5) // 6
    body = vals[1:]
    if len(body) != need:
        raise InvalidArgumentError(
            f"graph6 body has {len(body)} groups, expected {need} for n={n}"
        )
    bits = []
    for v in body:
        for t in range(5, -1, -1):
            bits.append(v >> t & 1)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i + 1, j + 1))
            idx += 1
    return Graph(n, edges)


def parse_graph(text: str) -> Graph:
    """Accept either the JSON object form or a graph6 string."""
    stripped = text.strip()
    if stripped.startswith("{"):
        return parse_graph_json(stripped)
    return from_graph6(stripped)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(1, g.n + 1):
        lines.append(f"  {v};")
    for a, b in g.edges:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
