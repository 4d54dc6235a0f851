"""Acceptance criteria, each run at its full stated budget.

Every test records one PASS/FAIL line, echoed in the terminal summary.
"""

import pytest

from ktcover import harness
from ktcover.bounds import lovasz_bound, mindeg_bound

# (criterion, suite, budget, time limit in seconds, extra check on the report)
CRITERIA = [
    ("1 strong duality", "duality", {"count": 500, "max_n": 12}, 120, lambda r: r["checked"] >= 500),
    ("2 triangle cover bound on n=6", "theorem8", {"n": 6}, 300, lambda r: r["checked"] == 1 << 15 and r["details"]["extremal_graphs"] == 15),
    ("3 EGP on n=4,5", "egp", {"n": 5}, 60, lambda r: r["details"]["extremal_graphs"][4] == 3 and r["details"]["extremal_graphs"][5] == 10),
    ("4 formula consistency", "formulas", {"n_max": 30, "kt_n": 12, "kt_t": 4}, 60, lambda r: True),
    ("5 Lovasz and min-degree bounds", "lovasz", {"count": 1000, "max_n": 14}, 120, lambda r: r["checked"] == 1000),
    ("6 reduction gadget", "reduction", {"max_n": 5, "per_n": 200, "t": (2, 3), "k_max": 10}, 300, lambda r: r["checked"] > 0),
    ("7 semichordal recognition", "semichordal", {"n": 6, "wheel_n": 10}, 300, lambda r: r["details"]["wheel_free_sampled"] > 0),
    ("8 Turan hypergraph counts", "hypergraph", {}, 60, lambda r: r["details"]["printed"] == {6: 14, 9: 54, 12: 136, 7: 23, 10: 75}),
    ("9 naive counting threshold", "remark5", {}, 60, lambda r: r["details"]["threshold"] == 26),
]


@pytest.mark.parametrize("label,suite,budget,limit,extra", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_criterion(label, suite, budget, limit, extra, acceptance_log):
    report = harness.verify_suite(suite, **budget)
    ok = report["passed"] and extra(report) and report["seconds"] <= limit
    summary = f"checked={report['checked']} violations={report['num_violations']} seconds={report['seconds']}"
    acceptance_log.append(f"criterion {label}: {'PASS' if ok else 'FAIL'} ({summary})")
    assert report["passed"], report["violations"]
    assert extra(report), report["details"]
    assert report["seconds"] <= limit


def test_spot_values_n12():
    # part of criterion 5: sparser bound 15 beats the general bound 16 at n=12, delta=9
    assert (mindeg_bound(12, 9), lovasz_bound(12, 54)) == (15, 16)
