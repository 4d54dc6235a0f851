"""Simple undirected graphs on dense 0-based vertex ids, plus generators.

Adjacency is kept twice: as frozensets (for readable code) and as integer
bitmasks (for the clique searches, which do a lot of set intersection).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class SizeLimitError(ValueError):
    """Raised when an exhaustive routine is asked to handle a too-large input."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable simple graph with vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "masks", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._set_masks(n, masks)

    def _set_masks(self, n: int, masks: Sequence[int]) -> None:
        self.n = n
        self.masks = tuple(masks)
        self.adj = tuple(frozenset(iter_bits(m)) for m in self.masks)
        self._hash = None

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> Graph:
        n = len(masks)
        full = (1 << n) - 1
        for v, m in enumerate(masks):
            if m & ~full or (m >> v) & 1:
                raise ValueError(f"bad neighbourhood mask for vertex {v}")
            for u in iter_bits(m):
                if not (masks[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        g = cls.__new__(cls)
        g._set_masks(n, masks)
        return g

    @classmethod
    def from_edge_code(cls, n: int, code: int) -> Graph:
        """Decode bit ``i`` of ``code`` as the i-th pair of ``combinations(range(n), 2)``."""
        edges = [p for i, p in enumerate(itertools.combinations(range(n), 2)) if (code >> i) & 1]
        return cls(n, edges)

    # -- queries -----------------------------------------------------------

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.masks[u] >> v) & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.masks]

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("empty graph has no minimum degree")
        return min(self.degrees())

    def min_degree_vertex(self) -> int:
        """Vertex of minimum degree; ties go to the smallest id."""
        degs = self.degrees()
        return degs.index(min(degs))

    def edge_code(self) -> int:
        code = 0
        for i, (u, v) in enumerate(itertools.combinations(range(self.n), 2)):
            if self.has_edge(u, v):
                code |= 1 << i
        return code

    def check_invariants(self) -> None:
        for v in range(self.n):
            if v in self.adj[v]:
                raise AssertionError(f"loop at {v}")
            for u in self.adj[v]:
                if not 0 <= u < self.n or v not in self.adj[u]:
                    raise AssertionError(f"bad adjacency {v}-{u}")

    # -- derived graphs ----------------------------------------------------

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
        """Subgraph induced by ``vertices``, renumbered in increasing old-id order.

        Returns the new graph and the old->new id map.
        """
        keep = sorted(set(vertices))
        old_to_new = {old: new for new, old in enumerate(keep)}
        edges = [
            (old_to_new[u], old_to_new[v])
            for u in keep
            for v in self.adj[u]
            if u < v and v in old_to_new
        ]
        return Graph(len(keep), edges), old_to_new

    def remove_vertex(self, v: int) -> tuple[Graph, dict[int, int]]:
        if not 0 <= v < self.n:
            raise ValueError(f"no vertex {v}")
        return self.induced_subgraph(u for u in range(self.n) if u != v)

    def complement(self) -> Graph:
        full = (1 << self.n) - 1
        return Graph.from_masks([full & ~m & ~(1 << v) for v, m in enumerate(self.masks)])

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.masks))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class Hypergraph3:
    """3-uniform hypergraph; hyperedges are sorted vertex triples."""

    n: int
    hyperedges: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        seen = set()
        for e in self.hyperedges:
            if len(e) != 3 or len(set(e)) != 3 or tuple(sorted(e)) != tuple(e):
                raise ValueError(f"bad hyperedge {e}")
            if not all(0 <= x < self.n for x in e):
                raise ValueError(f"hyperedge {e} out of range")
            if e in seen:
                raise ValueError(f"duplicate hyperedge {e}")
            seen.add(e)

    @property
    def num_hyperedges(self) -> int:
        return len(self.hyperedges)


# -- generators -------------------------------------------------------------


def turan_parts(n: int, k: int) -> list[list[int]]:
    """Contiguous blocks of sizes ceil/floor(n/k), larger blocks first."""
    q, r = divmod(n, k)
    parts, start = [], 0
    for i in range(k):
        size = q + 1 if i < r else q
        parts.append(list(range(start, start + size)))
        start += size
    return parts


def turan_graph(n: int, k: int) -> Graph:
    if n < 1 or k < 1:
        raise ValueError("turan_graph needs n >= 1 and k >= 1")
    part_of = {}
    for i, part in enumerate(turan_parts(n, k)):
        for v in part:
            part_of[v] = i
    return Graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if part_of[u] != part_of[v]])


def complete_multipartite(*sizes: int) -> Graph:
    part_of = [i for i, s in enumerate(sizes) for _ in range(s)]
    n = len(part_of)
    return Graph(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if part_of[u] != part_of[v]])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle_graph needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    if n < 0:
        raise ValueError("complete_graph needs n >= 0")
    return Graph(n, itertools.combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def wheel_graph(rim: int) -> Graph:
    """Cycle on ``0..rim-1`` plus a centre ``rim`` adjacent to every rim vertex."""
    c = cycle_graph(rim)
    return Graph(rim + 1, c.edges() + [(i, rim) for i in range(rim)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return Graph(offset, edges)


def turan_hypergraph(n: int) -> Hypergraph3:
    """Turan's K_4^(3)-free construction on three almost equal classes.

    Hyperedges are the transversal triples plus every triple with two
    vertices in class i and one in class i+1 (cyclically).
    """
    if n < 3:
        raise ValueError("turan_hypergraph needs n >= 3")
    sizes = [n // 3, (n + 1) // 3, (n + 2) // 3]
    classes, start = [], 0
    for s in sizes:
        classes.append(range(start, start + s))
        start += s
    edges = [tuple(sorted(t)) for t in itertools.product(*classes)]
    for i in range(3):
        nxt = classes[(i + 1) % 3]
        for u, v in itertools.combinations(classes[i], 2):
            edges += [tuple(sorted((u, v, w))) for w in nxt]
    return Hypergraph3(n, tuple(sorted(edges)))


def _check_probability(p: float, name: str = "p") -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {p}")


def random_gnp(n: int, p: float, seed: int) -> Graph:
    _check_probability(p)
    rng = random.Random(seed)
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def random_chordal(n: int, density: float, seed: int) -> Graph:
    """Random chordal graph grown by adding simplicial vertices.

    Each new vertex picks a random existing bag (a clique) and attaches to a
    random subset of it, keeping each bag member with probability
    ``density``; the attachment set plus the new vertex becomes a new bag.
    """
    _check_probability(density, "density")
    rng = random.Random(seed)
    bags: list[tuple[int, ...]] = []
    edges = []
    for v in range(n):
        if bags:
            bag = rng.choice(bags)
            attach = tuple(u for u in bag if rng.random() < density)
        else:
            attach = ()
        edges += [(u, v) for u in attach]
        bags.append(attach + (v,))
    return Graph(n, edges)


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices, ordered by edge code."""
    m = n * (n - 1) // 2
    for code in range(1 << m):
        yield Graph.from_edge_code(n, code)


def sample_graphs(n: int, count: int, seed: int) -> list[Graph]:
    """``count`` distinct labeled graphs on ``n`` vertices (all of them if fewer exist)."""
    m = n * (n - 1) // 2
    total = 1 << m
    if total <= count:
        return list(all_graphs(n))
    rng = random.Random(seed)
    codes = sorted(rng.sample(range(total), count))
    return [Graph.from_edge_code(n, c) for c in codes]


# -- isomorphism ------------------------------------------------------------

ISO_MAX_N = 10


def isomorphic_small(g1: Graph, g2: Graph, max_n: int | None = ISO_MAX_N) -> bool:
    """Backtracking isomorphism test for small graphs (n <= 10 by default)."""
    if max_n is not None and max(g1.n, g2.n) > max_n:
        raise SizeLimitError(f"isomorphism test limited to n <= {max_n}")
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return False
    d1, d2 = g1.degrees(), g2.degrees()
    if sorted(d1) != sorted(d2):
        return False
    order = sorted(range(g1.n), key=lambda v: (-d1[v], v))
    image = [-1] * g1.n
    used = [False] * g2.n

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in range(g2.n):
            if used[w] or d2[w] != d1[v]:
                continue
            if all(g1.has_edge(v, order[j]) == g2.has_edge(w, image[order[j]]) for j in range(i)):
                image[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                used[w] = False
        image[v] = -1
        return False

    return extend(0)
