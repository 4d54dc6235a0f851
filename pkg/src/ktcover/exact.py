"""Exact optimal covers and packings for small instances.

The cover search only ever uses maximal cliques: growing a member of a cover
to a maximal clique containing it keeps the cover feasible at the same cost.
Both searches are plain branch and bound over bitmasks, with component
splitting on the cover side.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .cliques import (
    Clique,
    CoverSolution,
    PackingSolution,
    WeightMap,
    enumerate_maximal_cliques,
    enumerate_t_cliques,
)
from .graph import Graph, SizeLimitError, all_graphs, iter_bits, isomorphic_small, mask_of, turan_graph

EXACT_MAX_N = 14


def _guard(g: Graph, max_n: int | None) -> None:
    if max_n is not None and g.n > max_n:
        raise SizeLimitError(f"exact solver limited to n <= {max_n} (got {g.n})")


def _check_weights(g: Graph, t: int, w: WeightMap | None) -> WeightMap:
    if t < 1:
        raise ValueError("t must be >= 1")
    if w is None:
        return WeightMap.unit(t)
    if w.t != t:
        raise ValueError(f"weight map is for t={w.t}, asked for t={t}")
    w.validate(g)
    return w


class _Multicover:
    """min sum(x) s.t. every element e is hit >= demand[e] times; x integer >= 0."""

    def __init__(self, set_elems: list[int], elem_sets: list[int]):
        self.set_elems = set_elems
        self.elem_sets = elem_sets

    def greedy(self, demand: list[int]) -> list[int]:
        demand = list(demand)
        picks = []
        while any(demand):
            best = max(
                range(len(self.set_elems)),
                key=lambda s: sum(1 for e in iter_bits(self.set_elems[s]) if demand[e] > 0),
            )
            for e in iter_bits(self.set_elems[best]):
                if demand[e] > 0:
                    demand[e] -= 1
            picks.append(best)
        return picks

    def lower_bound(self, demand, active: int, avail: int) -> int:
        # elements sharing no available set need disjoint picks
        es = self.elem_sets
        order = sorted(iter_bits(active), key=lambda e: (-demand[e], (es[e] & avail).bit_count()))
        blocked = lb = 0
        for e in order:
            c = es[e] & avail
            if not c & blocked:
                lb += demand[e]
                blocked |= c
        return lb

    def components(self, active: int, avail: int) -> list[int]:
        comps = []
        rest = active
        while rest:
            comp = frontier = rest & -rest
            while frontier:
                sets = 0
                for e in iter_bits(frontier):
                    sets |= self.elem_sets[e]
                reach = 0
                for s in iter_bits(sets & avail):
                    reach |= self.set_elems[s]
                frontier = reach & rest & ~comp
                comp |= frontier
            comps.append(comp)
            rest &= ~comp
        return comps

    def solve(self, demand: tuple, scope: int, avail: int, ub: int):
        """Cheapest solution for the elements in ``scope`` costing < ``ub``, or None."""
        active = 0
        for e in iter_bits(scope):
            if demand[e] > 0:
                active |= 1 << e
        if not active:
            return 0, ()
        comps = self.components(active, avail)
        if len(comps) == 1:
            return self._solve_connected(demand, active, avail, ub)
        lbs = [self.lower_bound(demand, c, avail) for c in comps]
        rest = sum(lbs)
        if rest >= ub:
            return None
        total, picks = 0, ()
        for comp, lb in sorted(zip(comps, lbs), key=lambda p: p[1]):
            rest -= lb
            found = self._solve_connected(demand, comp, avail, ub - total - rest)
            if found is None:
                return None
            total += found[0]
            picks += found[1]
        return total, picks

    def _solve_connected(self, demand, active: int, avail: int, ub: int):
        es, se = self.elem_sets, self.set_elems
        touching = 0
        for e in iter_bits(active):
            touching |= es[e]
        avail &= touching
        # drop sets whose useful part is inside another available set
        useful = {s: se[s] & active for s in iter_bits(avail)}
        for a in list(useful):
            ua = useful[a]
            for b, ub_ in useful.items():
                if b != a and ua & ub_ == ua and (ua != ub_ or b < a):
                    avail &= ~(1 << a)
                    del useful[a]
                    break
        if self.lower_bound(demand, active, avail) >= ub:
            return None
        branch = min(iter_bits(active), key=lambda e: ((es[e] & avail).bit_count(), -demand[e], e))
        cands = sorted(iter_bits(es[branch] & avail), key=lambda s: (-useful[s].bit_count(), s))
        best = None
        excluded = 0
        for s in cands:
            nd = list(demand)
            for e in iter_bits(useful[s]):
                nd[e] -= 1
            found = self.solve(tuple(nd), active, avail & ~excluded, ub - 1)
            if found is not None:
                best = (found[0] + 1, found[1] + (s,))
                ub = best[0]
            excluded |= 1 << s
        return best


def _cover_search(g: Graph, t: int, demands: dict[Clique, int]) -> CoverSolution:
    elems = [k for k, d in demands.items() if d > 0]
    if not elems:
        return CoverSolution()
    sets = enumerate_maximal_cliques(g)
    set_masks = [mask_of(c) for c in sets]
    elem_masks = [mask_of(k) for k in elems]
    set_elems = [0] * len(sets)
    elem_sets = [0] * len(elems)
    for i, km in enumerate(elem_masks):
        for j, cm in enumerate(set_masks):
            if cm & km == km:
                set_elems[j] |= 1 << i
                elem_sets[i] |= 1 << j
    demand = tuple(demands[k] for k in elems)
    mc = _Multicover(set_elems, elem_sets)
    incumbent = mc.greedy(list(demand))
    found = mc.solve(demand, (1 << len(elems)) - 1, (1 << len(sets)) - 1, len(incumbent))
    picks = found[1] if found is not None else incumbent
    sol = CoverSolution()
    for s in picks:
        sol.add(sets[s])
    return sol


@lru_cache(maxsize=1 << 16)
def _unit_cover(g: Graph, t: int) -> CoverSolution:
    return _cover_search(g, t, {k: 1 for k in enumerate_t_cliques(g, t)})


def exact_cover_number(
    g: Graph, t: int, w: WeightMap | None = None, max_n: int | None = EXACT_MAX_N
) -> tuple[int, CoverSolution]:
    """Minimum-cost (w, K_t)-cover and one optimal witness.

    ``w=None`` means every t-clique has demand 1, i.e. the K_t clique cover
    number.
    """
    _guard(g, max_n)
    if w is None:
        if t < 1:
            raise ValueError("t must be >= 1")
        sol = _unit_cover(g, t)
        sol = CoverSolution(dict(sol.mult))
    else:
        w = _check_weights(g, t, w)
        sol = _cover_search(g, t, w.demands(g))
    return sol.cost, sol


def cover_number(g: Graph, t: int, max_n: int | None = EXACT_MAX_N) -> int:
    """theta_{K_t}(g)."""
    return exact_cover_number(g, t, None, max_n)[0]


def exact_packing_number(
    g: Graph, t: int, w: WeightMap | None = None, max_n: int | None = EXACT_MAX_N
) -> tuple[int, PackingSolution]:
    """Maximum-value (w, K_t)-packing and one optimal witness.

    Two selected t-cliques conflict when some clique contains both, i.e. when
    their union is a clique, so this is a weighted independent set problem.
    Zero-weight t-cliques are never selected.
    """
    _guard(g, max_n)
    w = _check_weights(g, t, w)
    elems = [(k, wt) for k, wt in w.demands(g).items() if wt > 0]
    if not elems:
        return 0, PackingSolution()
    weight = [wt for _, wt in elems]
    elem_masks = [mask_of(k) for k, _ in elems]
    # conflict classes: the t-cliques inside one maximal clique pairwise conflict
    groups = []
    for c in enumerate_maximal_cliques(g):
        cm = mask_of(c)
        grp = 0
        for i, km in enumerate(elem_masks):
            if cm & km == km:
                grp |= 1 << i
        if grp:
            groups.append(grp)
    conflict = [0] * len(elems)
    member_of = [[] for _ in elems]
    for grp in groups:
        for i in iter_bits(grp):
            conflict[i] |= grp
            member_of[i].append(grp)
    for i in range(len(elems)):
        conflict[i] &= ~(1 << i)
    by_weight = sorted(range(len(elems)), key=lambda i: (-weight[i], i))

    def upper_bound(cand: int) -> int:
        covered = bound = 0
        for i in by_weight:
            if not (cand >> i) & 1 or (covered >> i) & 1:
                continue
            bound += weight[i]
            covered |= max(member_of[i], key=lambda grp: (grp & cand).bit_count())
        return bound

    best_val = 0
    best_set = 0

    def search(cand: int, chosen: int, val: int) -> None:
        nonlocal best_val, best_set
        if val > best_val:
            best_val, best_set = val, chosen
        if not cand or val + upper_bound(cand) <= best_val:
            return
        i = next(j for j in by_weight if (cand >> j) & 1)
        search(cand & ~conflict[i] & ~(1 << i), chosen | (1 << i), val + weight[i])
        search(cand & ~(1 << i), chosen, val)

    search((1 << len(elems)) - 1, 0, 0)
    return best_val, PackingSolution(frozenset(elems[i][0] for i in iter_bits(best_set)))


# -- conjecture checker ---------------------------------------------------------

CONJECTURE_EXHAUSTIVE_MAX_N = 6
CONJECTURE_MAX_N = 7


def verify_conjecture(
    n: int, t: int, sample: int = 2000, seed: int = 0, max_n: int | None = CONJECTURE_MAX_N
) -> list[Graph]:
    """Graphs on n vertices beating the Turan graph T(n, t), or tying it without being isomorphic.

    Every labeled graph is checked for n <= 6; above that a seeded sample of
    ``sample`` graphs is drawn instead.
    """
    if max_n is not None and n > max_n:
        raise SizeLimitError(f"conjecture check limited to n <= {max_n}")
    if n < 1 or t < 1:
        raise ValueError("need n >= 1 and t >= 1")
    turan = turan_graph(n, t)
    target = cover_number(turan, t, max_n=None)
    if n <= CONJECTURE_EXHAUSTIVE_MAX_N:
        graphs = all_graphs(n)
    else:
        rng = random.Random(seed)
        m = n * (n - 1) // 2
        graphs = (Graph.from_edge_code(n, rng.getrandbits(m)) for _ in range(sample))
    bad = []
    for g in graphs:
        theta = cover_number(g, t, max_n=None)
        if theta > target or (theta == target and not isomorphic_small(g, turan, max_n=None)):
            bad.append(g)
    return bad
