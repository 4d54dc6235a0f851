"""Command-line entry point.

Exit codes: 0 success, 1 a verification suite failed, 2 bad input,
3 infeasible or NONE result, 4 size guard tripped.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys
from dataclasses import dataclass, field
from typing import TextIO

from . import bounds, harness
from .cliques import WeightMap, cover_violations, packing_violations
from .elimination import find_p3_elimination, is_chordal, verify_p3_ordering
from .exact import EXACT_MAX_N, exact_cover_number, exact_packing_number
from .graph import (
    SizeLimitError,
    complete_graph,
    cycle_graph,
    random_chordal,
    random_gnp,
    turan_graph,
    turan_hypergraph,
)
from .greedy import greedy_lovasz_edge_cover, recursive_kt_cover, recursive_triangle_cover
from .io import (
    FormatError,
    format_edge_list,
    format_hypergraph,
    parse_edge_list,
    parse_ordering,
    parse_weights,
    read_text,
)
from .optpair import certificate_problems, optpair
from .reduction import build_gadget

EXIT_OK, EXIT_FAILED, EXIT_BAD_INPUT, EXIT_NONE, EXIT_SIZE = 0, 1, 2, 3, 4

GENERATORS = ("turan", "cycle", "complete", "gnp", "chordal", "hyperturan")
RANDOM_GENERATORS = ("gnp", "chordal")
ALGORITHMS = ("optpair", "greedy-egp", "recursive-k3", "recursive-kt", "exact")

# exhaustive suites grow as 2^C(n,2); these caps keep a run under a few minutes
VERIFY_MAX_N = {"theorem8": 6, "egp": 6, "semichordal": 6, "conjecture": 7, "reduction": 5, "duality": 14, "lovasz": 14}
# which suite keyword the generic --n / --count flags bind to
N_PARAM = {"duality": "max_n", "lovasz": "max_n", "reduction": "max_n", "formulas": "n_max"}
COUNT_PARAM = {"duality": "count", "lovasz": "count", "reduction": "per_n", "conjecture": "sample"}


class UsageError(ValueError):
    pass


class NoResult(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    target: str | None = None  # generator family, order family or suite name
    inputs: list[str] = field(default_factory=list)
    t: int | None = None
    alg: str = "optpair"
    subsolver: str = "exact"
    seed: int | None = None
    n: int | None = None
    n_max: int | None = None
    k: int | None = None
    p: float | None = None
    delta: int | None = None
    count: int | None = None
    weights: str | None = None
    order: str | None = None
    sidecar: str | None = None
    quiet: bool = False
    timings: bool = False
    unsafe_limits: bool = False
    output: str = "json"

    def validate(self) -> None:
        if self.command == "gen":
            if self.target in RANDOM_GENERATORS and self.seed is None:
                raise UsageError(f"gen {self.target} needs --seed")
            if self.n is None or self.n < 0:
                raise UsageError("gen needs --n >= 0")
        if self.command in ("cover", "pack", "reduce") and self.t is not None and self.t < 1:
            raise UsageError("--t must be >= 1")
        if self.command == "bounds" and (self.n is None or self.n < 1):
            raise UsageError("bounds needs --n >= 1")

    @property
    def max_n(self) -> int | None:
        return None if self.unsafe_limits else EXACT_MAX_N


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _graph(cfg: RunConfig, stdin: TextIO):
    if len(cfg.inputs) != 1:
        raise UsageError("expected exactly one graph file (use - for stdin)")
    return parse_edge_list(read_text(cfg.inputs[0], stdin))


def _weights(cfg: RunConfig, stdin: TextIO, t: int) -> WeightMap:
    if cfg.weights is None:
        return WeightMap.unit(t)
    w = parse_weights(read_text(cfg.weights, stdin))
    if w.t != t:
        raise UsageError(f"weight file is for t={w.t}, but --t is {t}")
    return w


# -- commands ---------------------------------------------------------------------


def cmd_gen(cfg: RunConfig, stdin, out) -> int:
    n = cfg.n
    kind = cfg.target
    if kind == "hyperturan":
        out.write(format_hypergraph(turan_hypergraph(n)))
        return EXIT_OK
    if kind == "turan":
        g = turan_graph(n, cfg.k if cfg.k is not None else 3)
    elif kind == "cycle":
        g = cycle_graph(n)
    elif kind == "complete":
        g = complete_graph(n)
    elif kind == "gnp":
        g = random_gnp(n, 0.5 if cfg.p is None else cfg.p, cfg.seed)
    else:
        g = random_chordal(n, 0.5 if cfg.p is None else cfg.p, cfg.seed)
    out.write(format_edge_list(g))
    return EXIT_OK


def _emit_cover(cfg, out, g, t, w, cover, extra: dict) -> int:
    problems = cover_violations(g, t, w, cover)
    if problems:
        raise NoResult(f"infeasible cover: {problems[0]}")
    if cfg.output == "human":
        out.write(f"cost {cover.cost}\n")
        for c in cover.cliques():
            out.write(f"{' '.join(map(str, c))} x{cover.mult[c]}\n")
        return EXIT_OK
    out.write(_dump({**cover.to_json(), **extra}))
    return EXIT_OK


def cmd_cover(cfg: RunConfig, stdin, out) -> int:
    g = _graph(cfg, stdin)
    alg = cfg.alg
    if alg == "greedy-egp":
        if cfg.t not in (None, 2):
            raise UsageError("greedy-egp builds edge clique covers (t = 2)")
        cover, trace = greedy_lovasz_edge_cover(g)
        ledger = {
            "blocks": [list(a) for a in trace.blocks],
            "p": trace.p,
            "ledger": trace.ledger,
            "lovasz_bound": bounds.lovasz_bound(g.n, g.num_edges),
        }
        return _emit_cover(cfg, out, g, 2, WeightMap.unit(2), cover, {"algorithm": alg, "bound_ledger": ledger})
    if alg == "recursive-k3":
        if cfg.t not in (None, 3):
            raise UsageError("recursive-k3 builds triangle covers (t = 3)")
        cover = recursive_triangle_cover(g, cfg.subsolver, cfg.max_n)
        ledger = {"k3_turan3": bounds.k3_turan3(g.n), "subsolver": cfg.subsolver}
        return _emit_cover(cfg, out, g, 3, WeightMap.unit(3), cover, {"algorithm": alg, "bound_ledger": ledger})

    t = cfg.t if cfg.t is not None else 3
    if alg == "recursive-kt":
        cover = recursive_kt_cover(g, t, cfg.subsolver, cfg.max_n)
        extra = {"algorithm": alg, "bound_ledger": {"subsolver": cfg.subsolver, "heuristic": t >= 4}}
        return _emit_cover(cfg, out, g, t, WeightMap.unit(t), cover, extra)
    w = _weights(cfg, stdin, t)
    if alg == "exact":
        _, cover = exact_cover_number(g, t, w, cfg.max_n)
        return _emit_cover(cfg, out, g, t, w, cover, {"algorithm": alg})

    # optpair
    if cfg.order is not None:
        order = parse_ordering(read_text(cfg.order, stdin))
        if not verify_p3_ordering(g, order):
            raise UsageError("the given ordering is not a P3-elimination ordering")
    else:
        found = find_p3_elimination(g)
        if found is None:
            raise NoResult("NONE: no P3-elimination ordering")
        order = found.order
    res = optpair(g, t, w, order)
    problems = certificate_problems(res, g, t, w)
    if problems:
        raise NoResult(f"certificate check failed: {problems[0]}")
    if cfg.output == "human":
        out.write(f"cost {res.cost} value {res.value}\n")
        return EXIT_OK
    report = res.to_json(with_trace=not cfg.quiet)
    report["ordering"] = list(order)
    out.write(_dump(report))
    return EXIT_OK


def cmd_pack(cfg: RunConfig, stdin, out) -> int:
    g = _graph(cfg, stdin)
    t = cfg.t if cfg.t is not None else 3
    w = _weights(cfg, stdin, t)
    value, y = exact_packing_number(g, t, w, cfg.max_n)
    problems = packing_violations(g, t, y)
    if problems:
        raise NoResult(f"infeasible packing: {problems[0]}")
    out.write(_dump(y.to_json(w)))
    return EXIT_OK


def cmd_order(cfg: RunConfig, stdin, out) -> int:
    g = _graph(cfg, stdin)
    if cfg.target == "p3":
        found = find_p3_elimination(g)
        if found is None:
            raise NoResult("NONE: no P3-elimination ordering")
    else:
        ok, found = is_chordal(g)
        if not ok:
            raise NoResult("NONE: no simplicial elimination ordering")
    out.write(found.to_text() + "\n")
    return EXIT_OK


BOUND_COLUMNS = ("n", "delta", "m_min", "lovasz", "mindeg", "mindeg_plus", "egp", "k3_turan3", "k3_diff", "remark5")


def bound_rows(n_min: int, n_max: int, delta: int | None = None) -> list[dict]:
    """One row per (n, delta); m_min is the fewest edges a graph with that minimum degree can have."""
    rows = []
    for n in range(n_min, n_max + 1):
        deltas = [delta] if delta is not None else range(n)
        for d in deltas:
            if not 0 <= d <= n - 1:
                raise UsageError(f"--delta {d} out of range for n={n}")
            m_min = -(-n * d // 2)
            plus = bounds.mindeg_bound_plus(n, d)
            rows.append({
                "n": n,
                "delta": d,
                "m_min": m_min,
                "lovasz": bounds.lovasz_bound(n, m_min),
                "mindeg": bounds.mindeg_bound(n, d),
                "mindeg_plus": "-" if plus is None else plus,
                "egp": bounds.egp_bound(n),
                "k3_turan3": bounds.k3_turan3(n),
                "k3_diff": bounds.k3_turan3_diff(n) if n >= 3 else "-",
                "remark5": int(bounds.k4_triangle_cover_impossible(n)),
            })
    return rows


def cmd_bounds(cfg: RunConfig, stdin, out) -> int:
    n_max = cfg.n_max if cfg.n_max is not None else cfg.n
    rows = bound_rows(cfg.n, n_max, cfg.delta)
    out.write("\t".join(BOUND_COLUMNS) + "\n")
    for row in rows:
        out.write("\t".join(str(row[c]) for c in BOUND_COLUMNS) + "\n")
    return EXIT_OK


def cmd_reduce(cfg: RunConfig, stdin, out) -> int:
    g = _graph(cfg, stdin)
    if cfg.t is None or cfg.t < 2:
        raise UsageError("reduce needs --t >= 2")
    gadget = build_gadget(g, cfg.t)
    meta = gadget.sidecar()
    if cfg.k is not None:
        meta["k"] = cfg.k
        meta["k_prime"] = gadget.budget(cfg.k)
    if cfg.sidecar:
        with open(cfg.sidecar, "w") as fh:
            fh.write(_dump(meta))
    out.write(format_edge_list(gadget.augmented, [f"gadget {json.dumps(meta, sort_keys=True)}"]))
    return EXIT_OK


def cmd_verify(cfg: RunConfig, stdin, out) -> int:
    name = cfg.target
    if name not in harness.SUITES:
        raise UsageError(f"unknown suite {name!r}; choose from {sorted(harness.SUITES)}")
    params = inspect.signature(harness.SUITES[name]).parameters
    budget = {}
    if cfg.n is not None:
        key = N_PARAM.get(name, "n")
        if key not in params:
            raise UsageError(f"suite {name} takes no --n")
        limit = VERIFY_MAX_N.get(name)
        if limit is not None and cfg.n > limit and not cfg.unsafe_limits:
            raise SizeLimitError(f"verify {name} limited to --n <= {limit} (pass --unsafe-limits to override)")
        budget[key] = cfg.n
    if cfg.count is not None:
        if name not in COUNT_PARAM:
            raise UsageError(f"suite {name} takes no --count")
        budget[COUNT_PARAM[name]] = cfg.count
    if cfg.seed is not None:
        if "seed" not in params:
            raise UsageError(f"suite {name} takes no --seed")
        budget["seed"] = cfg.seed
    report = harness.verify_suite(name, **budget)
    if not cfg.timings:
        report.pop("seconds", None)
    out.write(_dump(report))
    return EXIT_OK if report["passed"] else EXIT_FAILED


COMMANDS = {
    "gen": cmd_gen,
    "cover": cmd_cover,
    "pack": cmd_pack,
    "order": cmd_order,
    "bounds": cmd_bounds,
    "reduce": cmd_reduce,
    "verify": cmd_verify,
}


def run(cfg: RunConfig, stdin: TextIO | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        cfg.validate()
        return COMMANDS[cfg.command](cfg, stdin, stdout)
    except NoResult as exc:
        stdout.write(f"{exc}\n")
        return EXIT_NONE
    except SizeLimitError as exc:
        stderr.write(f"size guard: {exc}\n")
        return EXIT_SIZE
    except (FormatError, UsageError, ValueError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_BAD_INPUT


# -- argument parsing ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ktcover", description="K_t clique cover toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, help: str, *choices: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        if choices:
            p.add_argument("target", choices=choices)
        p.add_argument("inputs", nargs=1, metavar="GRAPH", help="edge-list file, or - for stdin")
        p.add_argument("--unsafe-limits", action="store_true", help="lift the exact-solver size guard")
        return p

    p = sub.add_parser("gen", help="write a generated graph")
    p.add_argument("target", choices=GENERATORS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, help="number of parts for turan (default 3)")
    p.add_argument("--p", type=float, help="edge probability (gnp) or bag density (chordal)")
    p.add_argument("--seed", type=int)

    p = graph_cmd("cover", "compute a K_t clique cover")
    p.add_argument("--alg", choices=ALGORITHMS, default="optpair")
    p.add_argument("--t", type=int)
    p.add_argument("--subsolver", choices=("exact", "greedy"), default="exact")
    p.add_argument("--weights", help="weight file (w t default)")
    p.add_argument("--order", help="P3-elimination ordering file (optpair)")
    p.add_argument("--quiet", action="store_true", help="omit the optpair trace")
    p.add_argument("--output", choices=("json", "human"), default="json")

    p = graph_cmd("pack", "compute a maximum weighted K_t packing")
    p.add_argument("--t", type=int)
    p.add_argument("--weights")

    graph_cmd("order", "find an elimination ordering", "p3", "simplicial")

    p = sub.add_parser("bounds", help="print a TSV table of bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--n-max", type=int)
    p.add_argument("--delta", type=int)

    p = graph_cmd("reduce", "build the K_{t-1} to K_t reduction gadget")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--sidecar", help="also write the gadget JSON to this path")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("target", metavar="SUITE", choices=sorted(harness.SUITES))
    p.add_argument("--n", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--timings", action="store_true")
    p.add_argument("--unsafe-limits", action="store_true")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    known = {f for f in RunConfig.__dataclass_fields__}
    return RunConfig(**{k: v for k, v in vars(ns).items() if k in known})


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    return run(config_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
