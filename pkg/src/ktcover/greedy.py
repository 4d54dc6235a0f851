"""Cover builders that follow the constructive bound proofs.

``greedy_lovasz_edge_cover`` peels off maximum cliques A_1, A_2, ... and
joins each later vertex to its neighbourhood inside every earlier A_j.
``recursive_triangle_cover`` removes a minimum-degree vertex v, covers the
rest recursively, and extends an edge clique cover of G[N(v)] by v.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum

from .cliques import Clique, CoverSolution, maximum_clique
from .exact import EXACT_MAX_N, exact_cover_number
from .graph import Graph

log = logging.getLogger(__name__)


class Subsolver(str, Enum):
    GREEDY = "greedy"
    EXACT = "exact"


@dataclass
class GreedyTrace:
    blocks: list[Clique] = field(default_factory=list)
    side: list[Clique] = field(default_factory=list)

    @property
    def p(self) -> int:
        return len(self.blocks)

    @property
    def ledger(self) -> int:
        """p + sum_i (i-1) |A_i|, counting every side clique including trivial ones."""
        return self.p + sum(i * len(a) for i, a in enumerate(self.blocks))


def greedy_lovasz_edge_cover(g: Graph) -> tuple[CoverSolution, GreedyTrace]:
    trace = GreedyTrace()
    remaining = set(range(g.n))
    while remaining:
        sub, old_to_new = g.induced_subgraph(remaining)
        new_to_old = sorted(remaining)
        block = tuple(new_to_old[v] for v in maximum_clique(sub))
        for v in block:
            for earlier in trace.blocks:
                trace.side.append(tuple(sorted({v} | (g.adj[v] & set(earlier)))))
        trace.blocks.append(block)
        remaining -= set(block)
    # cliques with fewer than two vertices cover no edge
    cover = CoverSolution.of(c for c in trace.blocks + trace.side if len(c) >= 2)
    return cover, trace


def _vertex_cover_by_blocks(g: Graph) -> CoverSolution:
    _, trace = greedy_lovasz_edge_cover(g)
    return CoverSolution.of(trace.blocks)


def _subcover(h: Graph, s: int, subsolver: Subsolver, max_n: int | None) -> CoverSolution:
    if subsolver == Subsolver.EXACT:
        return exact_cover_number(h, s, max_n=max_n)[1]
    if s == 1:
        return _vertex_cover_by_blocks(h)
    if s == 2:
        return greedy_lovasz_edge_cover(h)[0]
    return recursive_kt_cover(h, s, subsolver, max_n)


def recursive_kt_cover(
    g: Graph,
    t: int,
    subsolver: Subsolver | str = Subsolver.EXACT,
    max_n: int | None = EXACT_MAX_N,
) -> CoverSolution:
    """K_t clique cover by minimum-degree vertex elimination.

    Always feasible.  For t = 3 with the exact subsolver the size is at most
    k3(T(n,3)); for t >= 4 no bound is known and the result is a heuristic.
    """
    if t < 2:
        raise ValueError("t must be >= 2")
    subsolver = Subsolver(subsolver)
    cover = CoverSolution()
    labels = list(range(g.n))
    cur = g
    while cur.n > t:
        v = cur.min_degree_vertex()
        nbrs = sorted(cur.adj[v])
        h, _ = cur.induced_subgraph(nbrs)
        for c in _subcover(h, t - 1, subsolver, max_n).cliques():
            cover.add([labels[v]] + [labels[nbrs[i]] for i in c], 1)
        cur, old_to_new = cur.remove_vertex(v)
        labels = [labels[old] for old in sorted(old_to_new, key=old_to_new.get)]
    if cur.n == t and cur.num_edges == t * (t - 1) // 2:
        cover.add(labels)
    return cover


def recursive_triangle_cover(
    g: Graph, subsolver: Subsolver | str = Subsolver.EXACT, max_n: int | None = EXACT_MAX_N
) -> CoverSolution:
    return recursive_kt_cover(g, 3, subsolver, max_n)
