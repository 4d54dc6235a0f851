"""Elimination orderings: {P3}-elimination (semichordal), simplicial (chordal), 3-wheels."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graph import Graph, SizeLimitError, iter_bits

P3 = "P3"
SIMPLICIAL = "simplicial"


@dataclass(frozen=True)
class EliminationOrdering:
    order: tuple[int, ...]
    family: str = P3

    def __iter__(self):
        return iter(self.order)

    def __len__(self):
        return len(self.order)

    def to_text(self) -> str:
        return " ".join(map(str, self.order))


def _is_cluster_mask(g: Graph, s: int) -> bool:
    # every edge uv inside s needs N[u] and N[v] to agree on s
    for v in iter_bits(s):
        closed_v = (g.masks[v] | (1 << v)) & s
        for u in iter_bits(g.masks[v] & s):
            if (g.masks[u] | (1 << u)) & s != closed_v:
                return False
    return True


def _is_clique_mask(g: Graph, s: int) -> bool:
    return all((g.masks[v] | (1 << v)) & s == s for v in iter_bits(s))


def is_cluster(g: Graph) -> bool:
    """True iff g has no induced P3, i.e. every component is complete."""
    return _is_cluster_mask(g, (1 << g.n) - 1)


def _check_permutation(g: Graph, order) -> tuple[int, ...]:
    order = tuple(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError(f"{list(order)} is not a permutation of the {g.n} vertices")
    return order


def verify_p3_ordering(g: Graph, order) -> bool:
    order = _check_permutation(g, order)
    later = (1 << g.n) - 1
    for v in order:
        later &= ~(1 << v)
        if not _is_cluster_mask(g, g.masks[v] & later):
            return False
    return True


def verify_simplicial_ordering(g: Graph, order) -> bool:
    order = _check_permutation(g, order)
    later = (1 << g.n) - 1
    for v in order:
        later &= ~(1 << v)
        if not _is_clique_mask(g, g.masks[v] & later):
            return False
    return True


def find_p3_elimination(g: Graph) -> EliminationOrdering | None:
    """A {P3}-elimination ordering of g, or None if g is not semichordal.

    Takes the lowest-id eliminable vertex first and backtracks on failure.
    Remaining-vertex sets already known to be dead ends are memoised, so the
    search visits each subset at most once.
    """
    dead: set[int] = set()
    order: list[int] = []

    def extend(remaining: int) -> bool:
        if not remaining:
            return True
        if remaining in dead:
            return False
        for v in iter_bits(remaining):
            rest = remaining & ~(1 << v)
            if _is_cluster_mask(g, g.masks[v] & rest):
                order.append(v)
                if extend(rest):
                    return True
                order.pop()
        dead.add(remaining)
        return False

    if extend((1 << g.n) - 1):
        return EliminationOrdering(tuple(order), P3)
    return None


def is_semichordal(g: Graph) -> bool:
    return find_p3_elimination(g) is not None


def maximum_cardinality_search(g: Graph) -> list[int]:
    """Visit order of MCS (ties to the smallest id); its reverse is a PEO when g is chordal."""
    weight = [0] * g.n
    unvisited = set(range(g.n))
    visit = []
    while unvisited:
        v = max(unvisited, key=lambda u: (weight[u], -u))
        unvisited.remove(v)
        visit.append(v)
        for u in g.adj[v]:
            if u in unvisited:
                weight[u] += 1
    return visit


def is_chordal(g: Graph) -> tuple[bool, EliminationOrdering | None]:
    order = tuple(reversed(maximum_cardinality_search(g)))
    if verify_simplicial_ordering(g, order):
        return True, EliminationOrdering(order, SIMPLICIAL)
    return False, None


# -- 3-wheels ----------------------------------------------------------------

WHEEL_MAX_N = 12


def induced_cycles(g: Graph, vertices: int | None = None):
    """Yield each induced cycle (length >= 3) of g[vertices] once, as a vertex list.

    A cycle is reported starting at its smallest vertex, with the second
    vertex smaller than the last one.
    """
    if vertices is None:
        vertices = (1 << g.n) - 1
    masks = [m & vertices for m in g.masks]

    def walk(path: list[int], path_mask: int, start: int):
        last = path[-1]
        allowed = vertices & ~((1 << (start + 1)) - 1)
        for w in iter_bits(masks[last] & allowed & ~path_mask):
            # chordless: w may touch only the last vertex and (when closing) start
            inner = path_mask & ~(1 << last) & ~(1 << start)
            if masks[w] & inner:
                continue
            closes = (masks[w] >> start) & 1
            if closes:
                if len(path) >= 2 and path[1] < w:
                    yield path + [w]
                continue
            path.append(w)
            yield from walk(path, path_mask | (1 << w), start)
            path.pop()

    for s in iter_bits(vertices):
        for first in iter_bits(masks[s] & ~((1 << (s + 1)) - 1)):
            yield from walk([s, first], (1 << s) | (1 << first), s)


def contains_induced_3wheel(g: Graph, max_n: int | None = WHEEL_MAX_N) -> bool:
    """True iff some induced subgraph is a wheel whose centre sees three consecutive rim vertices.

    Rims of length 3 are included (a K4 then counts as a 3-wheel).
    """
    if max_n is not None and g.n > max_n:
        raise SizeLimitError(f"3-wheel search limited to n <= {max_n}")
    full = (1 << g.n) - 1
    for c in range(g.n):
        nc = g.masks[c]
        if nc.bit_count() < 3:
            continue
        for cyc in induced_cycles(g, full & ~(1 << c)):
            hits = [(nc >> v) & 1 for v in cyc]
            if sum(hits) < 3:
                continue
            k = len(cyc)
            if any(hits[i] and hits[(i + 1) % k] and hits[(i + 2) % k] for i in range(k)):
                return True
    return False


# -- brute-force oracle --------------------------------------------------------

BRUTE_FORCE_MAX_N = 8


@lru_cache(maxsize=None)
def _orderings(n: int) -> tuple[np.ndarray, np.ndarray]:
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    later = ((1 << n) - 1) - np.cumsum(1 << perms, axis=1)
    return perms, later


def brute_force_p3_orderable(g: Graph, max_n: int | None = BRUTE_FORCE_MAX_N) -> bool:
    """Try all n! orderings; independent of :func:`find_p3_elimination`.

    A vertex set is P3-free iff it contains no induced path a-b-c, which is
    tested against an explicit list of the graph's induced P3s.
    """
    if max_n is not None and g.n > max_n:
        raise SizeLimitError(f"brute-force ordering search limited to n <= {max_n}")
    n = g.n
    if n == 0:
        return True
    paths = [
        (1 << a) | (1 << b) | (1 << c)
        for b in range(n)
        for a, c in itertools.combinations(sorted(g.adj[b]), 2)
        if not g.has_edge(a, c)
    ]
    subsets = np.arange(1 << n, dtype=np.int64)
    if paths:
        p = np.array(paths, dtype=np.int64)
        p3_free = ~np.any((subsets[:, None] & p[None, :]) == p[None, :], axis=1)
    else:
        p3_free = np.ones(1 << n, dtype=bool)
    perms, later = _orderings(n)
    nbr = np.array(g.masks, dtype=np.int64)
    ok = p3_free[nbr[perms] & later]
    return bool(ok.all(axis=1).any())
