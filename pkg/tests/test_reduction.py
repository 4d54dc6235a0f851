import pytest

from ktcover.cliques import CoverSolution, WeightMap, is_cover_feasible
from ktcover.exact import exact_cover_number
from ktcover.graph import SizeLimitError, all_graphs, complete_graph, empty_graph, path_graph
from ktcover.reduction import build_gadget, lift_cover, project_cover, verify_reduction


def test_p3_gadget():
    gadget = build_gadget(path_graph(3), 2)
    assert (gadget.e, gadget.s) == (2, 3)
    assert gadget.augmented.n == 6 and gadget.augmented.num_edges == 11
    assert gadget.budget(2) == 8
    assert list(gadget.new_vertices) == [3, 4, 5]


def test_edgeless_gadget():
    gadget = build_gadget(empty_graph(3), 2)
    assert (gadget.e, gadget.s) == (0, 1)
    assert gadget.augmented.degree(3) == 3


def test_triangle_gadget():
    gadget = build_gadget(complete_graph(3), 3)
    assert (gadget.e, gadget.s) == (1, 2)
    assert not gadget.augmented.has_edge(3, 4)
    assert gadget.budget(1) == 3


def test_lift_p3_vertex_cover():
    g = path_graph(3)
    gadget = build_gadget(g, 2)
    lifted = lift_cover(gadget, CoverSolution.of([(0, 1), (2,)]))
    assert lifted.cost == 7 and lifted.mult[(1, 2)] == 1
    assert is_cover_feasible(gadget.augmented, 2, WeightMap.unit(2), lifted)


def test_lift_without_leftovers():
    g = complete_graph(3)
    gadget = build_gadget(g, 2)
    lifted = lift_cover(gadget, CoverSolution.of([(0, 1, 2)]))
    assert lifted.cost == gadget.s


def test_lift_rejects_infeasible_input():
    gadget = build_gadget(path_graph(3), 2)
    with pytest.raises(ValueError):
        lift_cover(gadget, CoverSolution.of([(0, 1)]))


def test_project_round_trip():
    for g in all_graphs(4):
        for t in (2, 3):
            gadget = build_gadget(g, t)
            size, a = exact_cover_number(g, t - 1)
            back = project_cover(gadget, lift_cover(gadget, a))
            assert is_cover_feasible(g, t - 1, WeightMap.unit(t - 1), back)
            assert back.cost <= size


def test_project_optimal_gadget_cover():
    g = path_graph(3)
    gadget = build_gadget(g, 2)
    theta, d = exact_cover_number(gadget.augmented, 2)
    proj = project_cover(gadget, d)
    assert is_cover_feasible(g, 1, WeightMap.unit(1), proj)
    assert proj.cost <= theta // gadget.s


def test_verify_reduction():
    for g in all_graphs(3):
        for t in (2, 3):
            assert all(verify_reduction(g, t, k) for k in range(5))
    with pytest.raises(SizeLimitError):
        verify_reduction(empty_graph(6), 2, 1)


def test_rejects_small_t():
    with pytest.raises(ValueError):
        build_gadget(path_graph(3), 1)
