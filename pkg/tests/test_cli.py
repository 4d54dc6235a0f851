import io
import json

import pytest

from ktcover.cli import RunConfig, bound_rows, build_parser, config_from_args, main, run
from ktcover.cliques import CoverSolution, WeightMap, is_cover_feasible
from ktcover.graph import cycle_graph, turan_graph, wheel_graph
from ktcover.io import format_edge_list, parse_edge_list


def call(argv, stdin_text=""):
    cfg = config_from_args(build_parser().parse_args(argv))
    out, err = io.StringIO(), io.StringIO()
    code = run(cfg, io.StringIO(stdin_text), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def c5_file(tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text(format_edge_list(cycle_graph(5)))
    return str(path)


def test_gen_turan():
    code, out, _ = call(["gen", "turan", "--n", "7"])
    assert code == 0 and parse_edge_list(out) == turan_graph(7, 3)


def test_gen_random_needs_seed():
    code, _, err = call(["gen", "gnp", "--n", "5"])
    assert code == 2 and "--seed" in err
    a = call(["gen", "chordal", "--n", "8", "--seed", "4"])[1]
    assert a == call(["gen", "chordal", "--n", "8", "--seed", "4"])[1]


def test_gen_hyperturan():
    code, out, _ = call(["gen", "hyperturan", "--n", "7"])
    assert code == 0 and out.startswith("h3 7 23\n")


def test_cover_optpair(c5_file):
    code, out, _ = call(["cover", c5_file, "--t", "2"])
    data = json.loads(out)
    assert code == 0 and data["cost"] == data["value"] == 5 and "trace" in data
    code, out, _ = call(["cover", c5_file, "--t", "2", "--quiet"])
    assert "trace" not in json.loads(out)


def test_cover_optpair_weights_and_order(tmp_path, c5_file):
    wfile = tmp_path / "w.txt"
    wfile.write_text("w 2 1\n0 1 4\n")
    ofile = tmp_path / "o.txt"
    ofile.write_text("0 1 2 3 4\n")
    code, out, _ = call(["cover", c5_file, "--t", "2", "--weights", str(wfile), "--order", str(ofile)])
    data = json.loads(out)
    assert code == 0 and data["cost"] == data["value"] == 8
    ofile.write_text("0 1 2 3\n")
    assert call(["cover", c5_file, "--t", "2", "--order", str(ofile)])[0] == 2


def test_cover_optpair_non_semichordal():
    code, out, _ = call(["cover", "-", "--t", "3"], format_edge_list(wheel_graph(5)))
    assert code == 3 and out.strip() == "NONE: no P3-elimination ordering"


@pytest.mark.parametrize("alg,t", [("exact", "3"), ("recursive-k3", "3"), ("recursive-kt", "4"), ("greedy-egp", "2")])
def test_cover_algorithms_emit_feasible_covers(alg, t):
    g = turan_graph(7, 3)
    code, out, _ = call(["cover", "-", "--alg", alg, "--t", t], format_edge_list(g))
    assert code == 0
    cover = CoverSolution.from_json(json.loads(out))
    assert is_cover_feasible(g, int(t), WeightMap.unit(int(t)), cover)


def test_cover_greedy_ledger(c5_file):
    data = json.loads(call(["cover", c5_file, "--alg", "greedy-egp"])[1])
    assert data["bound_ledger"]["ledger"] == 7
    assert data["cost"] <= data["bound_ledger"]["ledger"]


def test_cover_human_output(c5_file):
    code, out, _ = call(["cover", c5_file, "--alg", "exact", "--t", "2", "--output", "human"])
    assert code == 0 and out.startswith("cost 5\n")


def test_size_guard_and_override():
    text = "p 15 0\n"
    assert call(["cover", "-", "--alg", "exact", "--t", "2"], text)[0] == 4
    assert call(["cover", "-", "--alg", "exact", "--t", "2", "--unsafe-limits"], text)[0] == 0


def test_bad_input():
    assert call(["cover", "-", "--t", "2"], "p 3 2\n0 1\n")[0] == 2
    assert call(["cover", "/nonexistent/file", "--t", "2"])[0] == 2
    assert call(["cover", "-", "--alg", "greedy-egp", "--t", "3"], "p 2 1\n0 1\n")[0] == 2


def test_pack(c5_file):
    code, out, _ = call(["pack", c5_file, "--t", "2"])
    assert code == 0 and json.loads(out)["value"] == 5


def test_order(c5_file):
    code, out, _ = call(["order", "p3", c5_file])
    assert code == 0 and sorted(map(int, out.split())) == list(range(5))
    code, out, _ = call(["order", "simplicial", c5_file])
    assert code == 3 and out.startswith("NONE")


def test_bounds_row():
    code, out, _ = call(["bounds", "--n", "12"])
    lines = out.splitlines()
    header = lines[0].split("\t")
    rows = [dict(zip(header, line.split("\t"))) for line in lines[1:]]
    row = next(r for r in rows if r["delta"] == "9")
    assert (row["m_min"], row["lovasz"], row["mindeg"]) == ("54", "16", "15")
    assert len(rows) == 12


def test_bounds_range_and_delta():
    rows = bound_rows(5, 8, 3)
    assert [r["n"] for r in rows] == [5, 6, 7, 8]
    assert call(["bounds", "--n", "3", "--delta", "3"])[0] == 2


def test_reduce(tmp_path):
    side = tmp_path / "side.json"
    code, out, _ = call(["reduce", "-", "--t", "2", "--k", "2", "--sidecar", str(side)], "p 3 2\n0 1\n1 2\n")
    assert code == 0
    g = parse_edge_list(out)
    assert (g.n, g.num_edges) == (6, 11)
    meta = json.loads(side.read_text())
    assert meta["s"] == 3 and meta["e"] == 2 and meta["k_prime"] == 8
    assert out.startswith("# gadget {")


def test_verify_egp():
    code, out, _ = call(["verify", "egp", "--n", "5"])
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["details"]["extremal_graphs"]["5"] == 10
    assert "seconds" not in data


def test_verify_is_deterministic():
    argv = ["verify", "duality", "--n", "8", "--count", "40", "--seed", "3"]
    assert call(argv)[1] == call(argv)[1]


def test_verify_guards():
    assert call(["verify", "theorem8", "--n", "7"])[0] == 4
    assert call(["verify", "hypergraph", "--n", "7"])[0] == 2


def test_main_entry(capsys):
    assert main(["gen", "cycle", "--n", "4"]) == 0
    assert capsys.readouterr().out.startswith("p 4 4")


def test_run_config_defaults():
    cfg = RunConfig("bounds", n=4)
    assert run(cfg, io.StringIO(), io.StringIO(), io.StringIO()) == 0
