import itertools
import random

import numpy as np
import pytest
from scipy.optimize import Bounds, LinearConstraint, milp

from ktcover.cliques import (
    WeightMap,
    enumerate_maximal_cliques,
    enumerate_t_cliques,
    is_cover_feasible,
    is_packing_feasible,
)
from ktcover.exact import cover_number, exact_cover_number, exact_packing_number, verify_conjecture
from ktcover.graph import (
    Graph,
    SizeLimitError,
    complete_graph,
    cycle_graph,
    empty_graph,
    random_chordal,
    random_gnp,
    turan_graph,
)


def _incidence(g, t, w):
    ks = [k for k in enumerate_t_cliques(g, t) if w[k] > 0]
    cs = enumerate_maximal_cliques(g)
    a = np.array([[1 if set(k) <= set(c) else 0 for c in cs] for k in ks], dtype=float).reshape(len(ks), len(cs))
    return ks, cs, a


def milp_cover(g, t, w):
    ks, cs, a = _incidence(g, t, w)
    if not ks:
        return 0
    demand = np.array([w[k] for k in ks], dtype=float)
    res = milp(np.ones(len(cs)), constraints=LinearConstraint(a, lb=demand), integrality=np.ones(len(cs)), bounds=Bounds(0, np.inf))
    return round(res.fun)


def milp_packing(g, t, w):
    ks, cs, a = _incidence(g, t, w)
    if not ks:
        return 0
    value = np.array([w[k] for k in ks], dtype=float)
    res = milp(-value, constraints=LinearConstraint(a.T, ub=1), integrality=np.ones(len(ks)), bounds=Bounds(0, 1))
    return round(-res.fun)


def test_k4_triangles_need_one_clique():
    cost, f = exact_cover_number(complete_graph(4), 3)
    assert cost == 1 and f.cliques() == [(0, 1, 2, 3)]


def test_turan_6_3_needs_every_triangle():
    assert cover_number(turan_graph(6, 3), 3) == 8


def test_weighted_triangle():
    g = complete_graph(3)
    w = WeightMap(2, 0, {(0, 1): 2, (1, 2): 3, (0, 2): 5})
    cost, f = exact_cover_number(g, 2, w)
    assert cost == 5
    assert is_cover_feasible(g, 2, w, f)


def test_packing_examples():
    assert exact_packing_number(complete_graph(3), 2)[0] == 1
    value, y = exact_packing_number(cycle_graph(4), 2)
    assert value == 4 and is_packing_feasible(cycle_graph(4), 2, y)


def test_degenerate_instances():
    assert cover_number(empty_graph(3), 2) == 0
    assert cover_number(empty_graph(3), 1) == 3
    assert exact_packing_number(empty_graph(3), 3)[0] == 0
    assert cover_number(Graph(0), 2) == 0


def test_size_guard():
    with pytest.raises(SizeLimitError):
        cover_number(empty_graph(15), 2)
    assert exact_cover_number(empty_graph(15), 2, max_n=None)[0] == 0


def test_rejects_mismatched_weights():
    with pytest.raises(ValueError):
        exact_cover_number(complete_graph(3), 3, WeightMap.unit(2))


def test_cover_against_milp():
    rng = random.Random(1)
    for i in range(60):
        g = random_gnp(rng.randint(3, 9), rng.uniform(0.3, 0.9), i)
        t = rng.choice((1, 2, 3))
        w = WeightMap(t, 0, {k: rng.randint(0, 3) for k in enumerate_t_cliques(g, t)})
        cost, f = exact_cover_number(g, t, w)
        assert is_cover_feasible(g, t, w, f)
        assert cost == f.cost == milp_cover(g, t, w)


def test_packing_against_milp():
    rng = random.Random(2)
    for i in range(60):
        g = random_gnp(rng.randint(3, 9), rng.uniform(0.3, 0.9), 100 + i)
        t = rng.choice((2, 3))
        w = WeightMap(t, 0, {k: rng.randint(0, 3) for k in enumerate_t_cliques(g, t)})
        value, y = exact_packing_number(g, t, w)
        assert is_packing_feasible(g, t, y)
        assert value == y.value(w) == milp_packing(g, t, w)


def test_weak_duality():
    for seed in range(40):
        g = random_gnp(8, 0.6, seed)
        for t in (2, 3):
            assert exact_packing_number(g, t)[0] <= cover_number(g, t)


def test_unit_cover_against_brute_force_subsets():
    # smallest family of maximal cliques covering every edge
    for seed in range(15):
        g = random_gnp(6, 0.5, seed)
        cs = enumerate_maximal_cliques(g)
        edges = g.edges()
        best = next(
            r
            for r in range(len(cs) + 1)
            if any(all(any(set(e) <= set(c) for c in sub) for e in edges) for sub in itertools.combinations(cs, r))
        )
        assert cover_number(g, 2) == best


def test_cover_on_chordal_graphs_matches_milp():
    for seed in range(20):
        g = random_chordal(10, 0.7, seed)
        w = WeightMap.unit(3)
        assert cover_number(g, 3) == milp_cover(g, 3, w)


@pytest.mark.parametrize("n,t", [(4, 2), (5, 2), (5, 3), (4, 1)])
def test_conjecture_small(n, t):
    assert verify_conjecture(n, t) == []


def test_conjecture_degenerate_range():
    # below t vertices every graph has cover number 0, so uniqueness cannot hold
    assert len(verify_conjecture(2, 3)) == 1
