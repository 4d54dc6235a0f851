"""Gadget reducing K_{t-1} clique cover on G to K_t clique cover on G'.

G' is G plus s = 1 + e pairwise non-adjacent new vertices u_1..u_s, each
joined to every vertex of G, where e is the number of t-cliques of G.
Then theta_{t-1}(G) <= k  iff  theta_t(G') <= s*k + e.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cliques import CoverSolution, WeightMap, cover_violations, enumerate_t_cliques
from .exact import cover_number
from .graph import Graph, SizeLimitError

REDUCTION_MAX_N = 5
REDUCTION_MAX_T = 3


@dataclass(frozen=True)
class Gadget:
    graph: Graph
    t: int
    augmented: Graph
    s: int
    e: int

    @property
    def new_vertices(self) -> range:
        return range(self.graph.n, self.graph.n + self.s)

    def budget(self, k: int) -> int:
        return self.s * k + self.e

    def sidecar(self) -> dict:
        return {"t": self.t, "n": self.graph.n, "s": self.s, "e": self.e, "budget": "k' = s*k + e"}


def build_gadget(g: Graph, t: int) -> Gadget:
    if t < 2:
        raise ValueError("the gadget needs t >= 2")
    e = len(enumerate_t_cliques(g, t))
    s = 1 + e
    new = range(g.n, g.n + s)
    aug = Graph(g.n + s, g.edges() + [(v, u) for u in new for v in range(g.n)])
    return Gadget(g, t, aug, s, e)


def _require_feasible(g: Graph, t: int, cover: CoverSolution, what: str) -> None:
    problems = cover_violations(g, t, WeightMap.unit(t), cover)
    if problems:
        raise ValueError(f"{what} is not a K_{t} clique cover: {problems[0]}")


def lift_cover(gadget: Gadget, cover: CoverSolution) -> CoverSolution:
    """K_t cover of G' from a K_{t-1} cover A of G: every S+u_i, plus each t-clique of G missed."""
    g, t = gadget.graph, gadget.t
    _require_feasible(g, t - 1, cover, "input")
    out = CoverSolution()
    for u in gadget.new_vertices:
        for c, m in cover.mult.items():
            out.add(c + (u,), m)
    for k in enumerate_t_cliques(g, t):
        if not any(set(k) <= set(c) for c in cover.mult):
            out.add(k)
    return out


def project_cover(gadget: Gadget, cover: CoverSolution) -> CoverSolution:
    """K_{t-1} cover of G from a K_t cover D of G'.

    D_i (members containing u_i) are disjoint because the u_i are pairwise
    non-adjacent; strip u_i from the smallest D_i.
    """
    g, t = gadget.graph, gadget.t
    _require_feasible(gadget.augmented, t, cover, "input")
    new = set(gadget.new_vertices)
    parts: dict[int, list[tuple]] = {u: [] for u in gadget.new_vertices}
    for c, m in cover.mult.items():
        hit = new.intersection(c)
        if len(hit) > 1:
            raise AssertionError(f"clique {c} holds two gadget vertices")
        if hit:
            parts[hit.pop()].append((c, m))
    u_min = min(gadget.new_vertices, key=lambda u: (sum(m for _, m in parts[u]), u))
    out = CoverSolution()
    for c, m in parts[u_min]:
        rest = tuple(v for v in c if v != u_min)
        # residues too small to hold a (t-1)-clique cover nothing
        if len(rest) >= max(1, t - 1):
            out.add(rest, m)
    return out


def verify_reduction(g: Graph, t: int, k: int, max_n: int | None = REDUCTION_MAX_N) -> bool:
    """Whether theta_{t-1}(G) <= k agrees with theta_t(G') <= s*k + e, using exact solvers."""
    if max_n is not None and (g.n > max_n or t > REDUCTION_MAX_T):
        raise SizeLimitError(f"reduction check limited to n <= {max_n}, t <= {REDUCTION_MAX_T}")
    gadget = build_gadget(g, t)
    left = cover_number(g, t - 1, max_n=None) <= k
    right = cover_number(gadget.augmented, t, max_n=None) <= gadget.budget(k)
    return left == right
