"""Optimal weighted K_t cover / packing pair on semichordal graphs.

Given a {P3}-elimination ordering v_1, ..., v_n, the first vertex's
neighbourhood splits into cliques Q_1..Q_h.  Each Q_i* = {v_1} + Q_i is
bought t_i times, where t_i is the heaviest demand among the t-cliques
through v_1 inside Q_i*; the t-cliques inside Q_i get their demand reduced
by t_i and the rest of the graph is solved recursively.  A t-clique through
v_1 is then packed for every Q_i whose slot the recursion left empty.  The
cover cost always equals the packing value, which certifies both optimal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .cliques import (
    Clique,
    CoverSolution,
    PackingSolution,
    WeightMap,
    cover_violations,
    is_clique,
    packing_violations,
)
from .elimination import EliminationOrdering, verify_p3_ordering
from .graph import Graph, iter_bits


@dataclass
class Level:
    vertex: int
    components: list[Clique]
    chosen: list[Clique]
    amounts: list[int]
    reduced: dict[Clique, int]

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex,
            "components": [list(q) for q in self.components],
            "chosen": [list(z) for z in self.chosen],
            "amounts": self.amounts,
            "reduced": [{"vertices": list(k), "weight": w} for k, w in sorted(self.reduced.items())],
        }


@dataclass
class OptpairResult:
    cover: CoverSolution
    packing: PackingSolution
    cost: int
    value: int
    trace: list[Level] = field(default_factory=list)

    def to_json(self, with_trace: bool = True) -> dict:
        out = {
            "cost": self.cost,
            "value": self.value,
            "cover": self.cover.to_json(),
            "packing": self.packing.to_json(),
        }
        if with_trace:
            out["trace"] = [lvl.to_json() for lvl in self.trace]
        return out


def _components(g: Graph, s: int) -> list[int]:
    comps = []
    while s:
        comp = frontier = s & -s
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= g.masks[v]
            frontier = reach & s & ~comp
            comp |= frontier
        comps.append(comp)
        s &= ~comp
    return comps


def optpair(g: Graph, t: int, w: WeightMap, ordering) -> OptpairResult:
    if t < 2:
        raise ValueError("optpair needs t >= 2 (an edgeless graph still has 1-cliques to cover)")
    if w.t != t:
        raise ValueError(f"weight map is for t={w.t}, asked for t={t}")
    w.validate(g)
    order = tuple(ordering.order if isinstance(ordering, EliminationOrdering) else ordering)
    if not verify_p3_ordering(g, order):
        raise ValueError("ordering is not a {P3}-elimination ordering of the graph")

    residual: dict[Clique, int] = {}  # overlay on w for touched t-cliques

    def weight(k: Clique) -> int:
        return residual[k] if k in residual else w[k]

    cover = CoverSolution()
    selected: set[Clique] = set()
    trace: list[Level] = []
    # frames are resolved after the recursive call, i.e. in reverse order
    pending: list[tuple[int, list[Clique], list[Clique], list[int]]] = []

    alive = (1 << g.n) - 1
    for v in order:
        if not any(g.masks[u] & alive for u in iter_bits(alive)):
            break  # no edges left: both functions are empty from here on
        alive &= ~(1 << v)
        comps = []
        for c in _components(g, g.masks[v] & alive):
            q = tuple(iter_bits(c))
            if len(q) < t - 1:
                continue
            if not is_clique(g, q):
                raise AssertionError(f"component {q} of N({v}) is not a clique")
            comps.append(q)
        chosen, amounts = [], []
        for q in comps:
            # heaviest t-clique through v inside Q*; lexicographically first among ties
            best = max(itertools.combinations(q, t - 1), key=lambda z: (weight(_join(v, z)), _neg(z)))
            chosen.append(best)
            amounts.append(weight(_join(v, best)))
        reduced = {}
        for q, ti in zip(comps, amounts):
            for k in itertools.combinations(q, t):
                new = max(0, weight(k) - ti)
                residual[k] = reduced[k] = new
        trace.append(Level(v, comps, chosen, amounts, reduced))
        pending.append((v, comps, chosen, amounts))

    for v, comps, chosen, amounts in reversed(pending):
        new_sel = []
        for q, z, ti in zip(comps, chosen, amounts):
            cover.add((v, *q), ti)
            inner = any(len(k) == t and set(k) <= set(q) for k in selected)
            if ti > 0 and not inner:
                new_sel.append(_join(v, z))
        selected.update(new_sel)

    packing = PackingSolution(frozenset(selected))
    return OptpairResult(cover, packing, cover.cost, packing.value(w), trace)


def _join(v: int, z: Clique) -> Clique:
    return tuple(sorted((v, *z)))


def _neg(z: Clique) -> tuple:
    # max() with this key prefers the lexicographically smallest z among ties
    return tuple(-x for x in z)


def certificate_problems(result: OptpairResult, g: Graph, t: int, w: WeightMap) -> list[str]:
    """Reasons the pair fails as a duality certificate; empty when it holds."""
    problems = cover_violations(g, t, w, result.cover)
    problems += packing_violations(g, t, result.packing)
    cost, value = result.cover.cost, result.packing.value(w)
    if cost != value:
        problems.append(f"cost {cost} != value {value}")
    if result.cost != cost or result.value != value:
        problems.append("reported cost/value disagree with the solutions")
    for k in result.packing.selected:
        if w[k] <= 0:
            problems.append(f"{list(k)} packed with zero weight")
    return problems


def certify(result: OptpairResult, g: Graph, t: int, w: WeightMap) -> bool:
    """Both solutions feasible, cost == value, and only positive-weight t-cliques packed."""
    return not certificate_problems(result, g, t, w)
