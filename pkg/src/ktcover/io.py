"""Text formats: edge lists, 3-uniform hypergraphs, weight files and orderings.

Edge list::

    p <n> <m>
    <u> <v>        (m lines, 0-based ids)

Hypergraph: ``h3 <n> <m>`` followed by ``<u> <v> <w>`` lines.  Weight file:
``w <t> <default>`` followed by ``<v1> ... <vt> <weight>`` lines.  In every
format blank lines and lines starting with ``#`` are ignored.
"""

from __future__ import annotations

from typing import Iterable, TextIO

from .cliques import WeightMap
from .graph import Graph, Hypergraph3


class FormatError(ValueError):
    pass


def _lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for i, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((i, line.split()))
    return out


def _ints(lineno: int, fields: Iterable[str]) -> list[int]:
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {' '.join(fields)!r}") from None


def _header(rows, tag: str, arity: int):
    if not rows:
        raise FormatError(f"missing '{tag}' header")
    lineno, fields = rows[0]
    if fields[0] != tag or len(fields) != arity + 1:
        raise FormatError(f"line {lineno}: expected '{tag}' header with {arity} fields")
    return lineno, _ints(lineno, fields[1:])


def parse_edge_list(text: str) -> Graph:
    rows = _lines(text)
    _, (n, m) = _header(rows, "p", 2)
    edges = []
    for lineno, fields in rows[1:]:
        if len(fields) != 2:
            raise FormatError(f"line {lineno}: expected '<u> <v>'")
        u, v = _ints(lineno, fields)
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise FormatError(f"line {lineno}: bad edge {u} {v} for n={n}")
        edges.append((u, v))
    if len(edges) != m:
        raise FormatError(f"header promises {m} edges, found {len(edges)}")
    g = Graph(n, edges)
    if g.num_edges != m:
        raise FormatError("duplicate edges in edge list")
    return g


def format_edge_list(g: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"p {g.n} {g.num_edges}")
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph3:
    rows = _lines(text)
    _, (n, m) = _header(rows, "h3", 2)
    edges = []
    for lineno, fields in rows[1:]:
        if len(fields) != 3:
            raise FormatError(f"line {lineno}: expected '<u> <v> <w>'")
        edges.append(tuple(sorted(_ints(lineno, fields))))
    if len(edges) != m:
        raise FormatError(f"header promises {m} hyperedges, found {len(edges)}")
    try:
        return Hypergraph3(n, tuple(edges))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_hypergraph(h: Hypergraph3) -> str:
    lines = [f"h3 {h.n} {h.num_hyperedges}"] + [" ".join(map(str, e)) for e in h.hyperedges]
    return "\n".join(lines) + "\n"


def parse_weights(text: str) -> WeightMap:
    rows = _lines(text)
    _, (t, default) = _header(rows, "w", 2)
    weights = {}
    for lineno, fields in rows[1:]:
        if len(fields) != t + 1:
            raise FormatError(f"line {lineno}: expected {t} vertex ids and a weight")
        vals = _ints(lineno, fields)
        key = tuple(vals[:t])
        if list(key) != sorted(set(key)):
            raise FormatError(f"line {lineno}: vertex ids must be sorted and distinct")
        if key in weights:
            raise FormatError(f"line {lineno}: repeated clique {key}")
        weights[key] = vals[t]
    try:
        return WeightMap(t, default, weights)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def format_weights(w: WeightMap) -> str:
    lines = [f"w {w.t} {w.default}"]
    lines += [" ".join(map(str, k + (wt,))) for k, wt in sorted(w.weights.items())]
    return "\n".join(lines) + "\n"


def parse_ordering(text: str) -> list[int]:
    fields = [f for _, row in _lines(text) for f in row]
    return _ints(0, fields)


def read_text(path: str, stdin: TextIO) -> str:
    if path == "-":
        return stdin.read()
    with open(path) as fh:
        return fh.read()
