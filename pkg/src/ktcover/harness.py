"""Batch verification suites.

Each suite returns a report dict with ``suite``, ``passed``, ``checked``,
``violations`` (a short list of human-readable failures), per-suite
``details`` and ``seconds``.  ``KTCOVER_THREADS`` caps the worker
processes used for the per-graph checks; results are gathered in input
order so reports do not depend on scheduling.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from math import comb
from typing import Callable

from . import bounds
from .cliques import WeightMap, count_kt, enumerate_t_cliques, is_cover_feasible, is_packing_feasible
from .elimination import (
    brute_force_p3_orderable,
    contains_induced_3wheel,
    find_p3_elimination,
    is_chordal,
    verify_p3_ordering,
)
from .exact import cover_number, exact_cover_number, exact_packing_number, verify_conjecture
from .graph import (
    Graph,
    all_graphs,
    cycle_graph,
    isomorphic_small,
    random_chordal,
    random_gnp,
    sample_graphs,
    turan_graph,
    turan_hypergraph,
    wheel_graph,
)
from .greedy import greedy_lovasz_edge_cover, recursive_triangle_cover
from .optpair import certificate_problems, optpair
from .reduction import build_gadget, lift_cover, project_cover, verify_reduction

MAX_REPORTED = 20


def threads() -> int:
    try:
        return max(1, int(os.environ.get("KTCOVER_THREADS", "1")))
    except ValueError:
        return 1


def pmap(fn: Callable, items: list, chunksize: int = 64) -> list:
    workers = min(threads(), max(1, len(items) // chunksize))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunksize))


def _report(suite: str, checked: int, violations: list[str], start: float, **details) -> dict:
    return {
        "suite": suite,
        "passed": not violations,
        "checked": checked,
        "violations": violations[:MAX_REPORTED],
        "num_violations": len(violations),
        "details": details,
        "seconds": round(time.perf_counter() - start, 3),
    }


def _label(g: Graph) -> str:
    return f"n={g.n} edges={g.edges()}"


# -- duality (optpair) -----------------------------------------------------------


def duality_instances(count: int = 500, max_n: int = 12, seed: int = 0) -> list[tuple[Graph, int, WeightMap]]:
    """Random chordal graphs and cycles C_4..C_max_n, t in {2, 3}, weights uniform in [0, 5]."""
    rng = random.Random(seed)
    out = []
    cycles = list(range(4, max_n + 1))
    for i in range(count):
        t = 2 + i % 2
        if i % 8 == 0 and cycles:
            g = cycle_graph(cycles[(i // 8) % len(cycles)])
        else:
            g = random_chordal(rng.randint(2, max_n), rng.uniform(0.3, 1.0), rng.getrandbits(32))
        w = WeightMap(t, 0, {k: rng.randint(0, 5) for k in enumerate_t_cliques(g, t)})
        out.append((g, t, w))
    return out


def _alternative_orderings(g: Graph) -> list[tuple[int, ...]]:
    orders = []
    ok, peo = is_chordal(g)
    if ok:
        orders.append(peo.order)
    rotated = tuple(range(1, g.n)) + (0,) if g.n else ()
    if verify_p3_ordering(g, rotated):
        orders.append(rotated)
    return orders


def _duality_check(item) -> list[str]:
    g, t, w = item
    order = find_p3_elimination(g)
    if order is None:
        return [f"no P3-elimination ordering for semichordal instance {_label(g)}"]
    res = optpair(g, t, w, order)
    problems = certificate_problems(res, g, t, w)
    cover_opt, _ = exact_cover_number(g, t, w)
    pack_opt, _ = exact_packing_number(g, t, w)
    if not res.cost == res.value == cover_opt == pack_opt:
        problems.append(f"cost {res.cost} value {res.value} exact cover {cover_opt} exact packing {pack_opt}")
    for alt in _alternative_orderings(g):
        other = optpair(g, t, w, alt)
        if other.cost != res.cost:
            problems.append(f"ordering {alt} gives cost {other.cost} instead of {res.cost}")
    return [f"t={t} {_label(g)} w={w.weights}: {p}" for p in problems]


def suite_duality(count: int = 500, max_n: int = 12, seed: int = 0) -> dict:
    start = time.perf_counter()
    items = duality_instances(count, max_n, seed)
    violations = [v for vs in pmap(_duality_check, items, 16) for v in vs]
    return _report("duality", len(items), violations, start, max_n=max_n, seed=seed)


# -- extremal suites ----------------------------------------------------------


def _theorem8_check(args) -> tuple[int, int, list[str]]:
    n, code = args
    g = Graph.from_edge_code(n, code)
    bound = bounds.k3_turan3(n)
    theta = cover_number(g, 3)
    problems = []
    if theta > bound:
        problems.append(f"theta_3 = {theta} > {bound} for {_label(g)}")
    rec = recursive_triangle_cover(g, "exact")
    if rec.cost > bound or not is_cover_feasible(g, 3, WeightMap.unit(3), rec):
        problems.append(f"recursive cover size {rec.cost} (bound {bound}) for {_label(g)}")
    return code, theta, problems


def suite_theorem8(n: int = 6) -> dict:
    start = time.perf_counter()
    turan = turan_graph(n, 3)
    bound = bounds.k3_turan3(n)
    results = pmap(_theorem8_check, [(n, c) for c in range(1 << comb(n, 2))], 256)
    violations = [p for _, _, ps in results for p in ps]
    extremal = 0
    for code, theta, _ in results:
        g = Graph.from_edge_code(n, code)
        iso = isomorphic_small(g, turan)
        if theta == bound:
            extremal += 1
        if (theta == bound) != iso:
            violations.append(f"theta_3 = {theta}, isomorphic to T({n},3): {iso}, {_label(g)}")
    return _report("theorem8", len(results), violations, start, n=n, bound=bound, extremal_graphs=extremal)


def suite_egp(n: int = 5) -> dict:
    start = time.perf_counter()
    violations, checked, extremal = [], 0, {}
    for m in range(1, n + 1):
        bound = bounds.egp_bound(m)
        turan = turan_graph(m, 2)
        extremal[m] = 0
        for g in all_graphs(m):
            checked += 1
            theta = cover_number(g, 2)
            if theta > bound:
                violations.append(f"theta_e = {theta} > {bound} for {_label(g)}")
            elif theta == bound:
                extremal[m] += 1
                if not isomorphic_small(g, turan):
                    violations.append(f"equality on non-Turan graph {_label(g)}")
    return _report("egp", checked, violations, start, n=n, extremal_graphs=extremal)


def suite_conjecture(n: int = 5, t: tuple[int, ...] = (1, 2, 3), sample: int = 2000, seed: int = 0) -> dict:
    """Conjecture check for every 1 <= m <= n and each t.

    For m < t no graph has a t-clique, so every graph ties with T(m, t) and
    the uniqueness clause fails trivially; those ties are reported in
    ``details`` rather than as violations.
    """
    start = time.perf_counter()
    violations, checked, degenerate = [], 0, {}
    for m in range(1, n + 1):
        for tt in t:
            checked += 1
            found = verify_conjecture(m, tt, sample=sample, seed=seed)
            if m < tt:
                degenerate[f"n={m},t={tt}"] = len(found)
                continue
            violations += [f"t={tt} counterexample {_label(g)}" for g in found]
    return _report("conjecture", checked, violations, start, n=n, t=list(t), degenerate_ties=degenerate)


# -- formulas -----------------------------------------------------------------


def suite_formulas(n_max: int = 30, kt_n: int = 12, kt_t: int = 4) -> dict:
    start = time.perf_counter()
    violations, checked = [], 0
    for n in range(0, n_max + 1):
        checked += 1
        counted = count_kt(turan_graph(n, 3), 3) if n else 0
        if bounds.k3_turan3(n) != counted:
            violations.append(f"k3_turan3({n}) = {bounds.k3_turan3(n)}, enumeration gives {counted}")
        if n >= 3:
            diff = bounds.k3_turan3(n) - bounds.k3_turan3(n - 1)
            if not bounds.k3_turan3_diff(n) == bounds.k3_turan3_diff_cases(n) == diff:
                violations.append(f"k3 difference mismatch at n={n}")
            if 9 * diff < (n - 1) ** 2:
                violations.append(f"difference {diff} below (n-1)^2/9 at n={n}")
        if n >= 1:
            if bounds.egp_bound(n) != bounds.kt_turan(n, 2) or bounds.k3_turan3(n) != bounds.kt_turan(n, 3):
                violations.append(f"kt_turan disagrees with egp/k3 formulas at n={n}")
    for n in range(1, kt_n + 1):
        for t in range(1, kt_t + 1):
            checked += 1
            counted = count_kt(turan_graph(n, t), t)
            if bounds.kt_turan(n, t) != counted:
                violations.append(f"kt_turan({n},{t}) = {bounds.kt_turan(n, t)}, enumeration gives {counted}")
    return _report("formulas", checked, violations, start, n_max=n_max)


# -- Lovasz / minimum degree ------------------------------------------------------


def _lovasz_check(args) -> list[str]:
    n, p, seed = args
    g = random_gnp(n, p, seed)
    problems = []
    cover, trace = greedy_lovasz_edge_cover(g)
    if not is_cover_feasible(g, 2, WeightMap.unit(2), cover):
        problems.append("greedy cover infeasible")
    if cover.cost > trace.ledger:
        problems.append(f"greedy size {cover.cost} > ledger {trace.ledger}")
    if 2 * trace.ledger > 2 * trace.p + n * (trace.p - 1):
        problems.append(f"ledger {trace.ledger} > p + n(p-1)/2 with p={trace.p}")
    delta = g.min_degree()
    if trace.p > n - delta:
        problems.append(f"p = {trace.p} > n - delta = {n - delta}")
    theta = cover_number(g, 2)
    limits = {"lovasz": bounds.lovasz_bound(n, g.num_edges), "mindeg": bounds.mindeg_bound(n, delta)}
    plus = bounds.mindeg_bound_plus(n, delta)
    if plus is not None:
        limits["mindeg_plus"] = plus
    for name, value in limits.items():
        if theta > value:
            problems.append(f"theta_e = {theta} > {name} bound {value}")
    return [f"G({n},{p:.3f}) seed {seed}: {x}" for x in problems]


def lovasz_instances(count: int = 1000, max_n: int = 14, seed: int = 0) -> list[tuple[int, float, int]]:
    rng = random.Random(seed)
    return [(rng.randint(1, max_n), rng.uniform(0.05, 0.95), rng.getrandbits(32)) for _ in range(count)]


def suite_lovasz(count: int = 1000, max_n: int = 14, seed: int = 0) -> dict:
    start = time.perf_counter()
    items = lovasz_instances(count, max_n, seed)
    violations = [v for vs in pmap(_lovasz_check, items, 16) for v in vs]
    spot = {"lovasz(12, 54)": bounds.lovasz_bound(12, 54), "mindeg(12, 9)": bounds.mindeg_bound(12, 9)}
    if spot != {"lovasz(12, 54)": 16, "mindeg(12, 9)": 15}:
        violations.append(f"spot values {spot}")
    return _report("lovasz", len(items), violations, start, spot_values=spot)


# -- reduction -------------------------------------------------------------------


def _reduction_check(args) -> list[str]:
    code, n, t, k_max = args
    g = Graph.from_edge_code(n, code)
    problems = [f"k={k}: biconditional fails" for k in range(k_max + 1) if not verify_reduction(g, t, k)]
    gadget = build_gadget(g, t)
    unit_prev = WeightMap.unit(t - 1)
    size, a = exact_cover_number(g, t - 1)
    lifted = lift_cover(gadget, a)
    if not is_cover_feasible(gadget.augmented, t, WeightMap.unit(t), lifted):
        problems.append("lifted cover infeasible")
    if lifted.cost > gadget.budget(size):
        problems.append(f"lifted size {lifted.cost} > budget {gadget.budget(size)}")
    back = project_cover(gadget, lifted)
    if not is_cover_feasible(g, t - 1, unit_prev, back) or back.cost > size:
        problems.append(f"round trip gives size {back.cost} from {size}")
    theta_aug, d = exact_cover_number(gadget.augmented, t, max_n=None)
    proj = project_cover(gadget, d)
    if not is_cover_feasible(g, t - 1, unit_prev, proj) or proj.cost > theta_aug // gadget.s:
        problems.append(f"projection of optimal G' cover has size {proj.cost}")
    return [f"t={t} {_label(g)}: {p}" for p in problems]


def suite_reduction(max_n: int = 5, per_n: int = 200, t: tuple[int, ...] = (2, 3), k_max: int = 10, seed: int = 0) -> dict:
    start = time.perf_counter()
    items = []
    for n in range(1, max_n + 1):
        for g in sample_graphs(n, per_n, seed + n):
            items += [(g.edge_code(), n, tt, k_max) for tt in t]
    violations = [v for vs in pmap(_reduction_check, items, 8) for v in vs]
    return _report("reduction", len(items), violations, start, max_n=max_n, per_n=per_n, k_max=k_max)


# -- semichordal recognition --------------------------------------------------------


def _semichordal_check(args) -> list[str]:
    n, code = args
    g = Graph.from_edge_code(n, code)
    found = find_p3_elimination(g)
    if found is not None and not verify_p3_ordering(g, found.order):
        return [f"returned ordering fails verification for {_label(g)}"]
    if (found is not None) != brute_force_p3_orderable(g):
        return [f"search says {found is not None}, brute force disagrees for {_label(g)}"]
    return []


def suite_semichordal(n: int = 6, chordal: int = 300, wheel_n: int = 10, wheel_sample: int = 300, seed: int = 0) -> dict:
    start = time.perf_counter()
    items = [(m, c) for m in range(1, n + 1) for c in range(1 << comb(m, 2))]
    violations = [v for vs in pmap(_semichordal_check, items, 512) for v in vs]
    checked = len(items)
    if find_p3_elimination(wheel_graph(5)) is not None:
        violations.append("W5 accepted")
    rng = random.Random(seed)
    for _ in range(chordal):
        g = random_chordal(rng.randint(1, 12), rng.random(), rng.getrandbits(32))
        checked += 1
        if not is_chordal(g)[0] or find_p3_elimination(g) is None:
            violations.append(f"chordal instance rejected: {_label(g)}")
    wheel_free = 0
    for _ in range(wheel_sample):
        g = random_gnp(rng.randint(1, wheel_n), rng.uniform(0.1, 0.6), rng.getrandbits(32))
        if contains_induced_3wheel(g):
            continue
        wheel_free += 1
        checked += 1
        if find_p3_elimination(g) is None:
            violations.append(f"3-wheel-free graph rejected: {_label(g)}")
    return _report("semichordal", checked, violations, start, n=n, wheel_free_sampled=wheel_free)


# -- hypergraph and counting -------------------------------------------------------


def suite_hypergraph() -> dict:
    start = time.perf_counter()
    violations = []
    printed = {}
    for n in (6, 9, 12, 7, 10):
        m = n // 3
        value = m * m * (5 * m - 3) // 2 if n % 3 == 0 else m * (5 * m * m + 2 * m - 1) // 2
        count = turan_hypergraph(n).num_hyperedges
        printed[n] = count
        if count != value:
            violations.append(f"n={n}: construction has {count} hyperedges, formula {value}")
    derived = {n: turan_hypergraph(n).num_hyperedges for n in (5, 8, 11, 14)}
    return _report("hypergraph", len(printed) + len(derived), violations, start, printed=printed, derived_2_mod_3=derived)


def suite_remark5() -> dict:
    start = time.perf_counter()
    violations = []
    threshold = bounds.remark5_counting_threshold()
    if threshold != 26:
        violations.append(f"threshold {threshold}, expected 26")
    if bounds.k4_triangle_cover_impossible(18):
        violations.append("naive count unexpectedly succeeds at n=18")
    bad = [n for n in range(26, 101) if not bounds.k4_triangle_cover_impossible(n)]
    if bad:
        violations.append(f"naive count fails at {bad}")
    return _report("remark5", 77, violations, start, threshold=threshold, naive_count_holds_at_18=bounds.k4_triangle_cover_impossible(18))


SUITES: dict[str, Callable[..., dict]] = {
    "duality": suite_duality,
    "theorem8": suite_theorem8,
    "egp": suite_egp,
    "conjecture": suite_conjecture,
    "formulas": suite_formulas,
    "lovasz": suite_lovasz,
    "reduction": suite_reduction,
    "semichordal": suite_semichordal,
    "hypergraph": suite_hypergraph,
    "remark5": suite_remark5,
}


def verify_suite(name: str, **budget) -> dict:
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}") from None
    return suite(**budget)
