import pytest

from ktcover import harness


def test_unknown_suite():
    with pytest.raises(ValueError):
        harness.verify_suite("nope")


@pytest.mark.parametrize(
    "name,budget",
    [
        ("duality", {"count": 60, "max_n": 9}),
        ("egp", {"n": 4}),
        ("conjecture", {"n": 4}),
        ("formulas", {"n_max": 12, "kt_n": 6}),
        ("lovasz", {"count": 60, "max_n": 10}),
        ("reduction", {"max_n": 3, "per_n": 10, "k_max": 4}),
        ("semichordal", {"n": 4, "chordal": 20, "wheel_sample": 20}),
        ("theorem8", {"n": 5}),
        ("hypergraph", {}),
        ("remark5", {}),
    ],
)
def test_small_budgets_pass(name, budget):
    report = harness.verify_suite(name, **budget)
    assert report["suite"] == name
    assert report["passed"], report["violations"]
    assert report["checked"] > 0 and report["num_violations"] == 0


def test_conjecture_reports_degenerate_ties():
    report = harness.verify_suite("conjecture", n=3, t=(3, 4))
    assert report["passed"]
    assert report["details"]["degenerate_ties"]["n=2,t=3"] == 1


def test_thread_env(monkeypatch):
    monkeypatch.setenv("KTCOVER_THREADS", "2")
    assert harness.threads() == 2
    monkeypatch.setenv("KTCOVER_THREADS", "x")
    assert harness.threads() == 1


def test_parallel_matches_serial(monkeypatch):
    serial = harness.verify_suite("lovasz", count=64, max_n=8)
    monkeypatch.setenv("KTCOVER_THREADS", "2")
    parallel = harness.verify_suite("lovasz", count=64, max_n=8)
    serial.pop("seconds")
    parallel.pop("seconds")
    assert serial == parallel
