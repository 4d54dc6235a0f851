"""Clique enumeration, weight maps, cover/packing containers and checkers.

Cliques are always stored in canonical form: a strictly increasing tuple of
vertex ids.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graph import Graph, iter_bits, mask_of

Clique = tuple[int, ...]


def canonical(vertices: Iterable[int]) -> Clique:
    c = tuple(sorted(vertices))
    if len(set(c)) != len(c):
        raise ValueError(f"repeated vertex in {c}")
    return c


def is_clique(g: Graph, vertices: Iterable[int]) -> bool:
    vs = list(vertices)
    if len(set(vs)) != len(vs) or not all(0 <= v < g.n for v in vs):
        return False
    m = mask_of(vs)
    return all((g.masks[v] | (1 << v)) & m == m for v in vs)


def enumerate_t_cliques(g: Graph, t: int) -> list[Clique]:
    """All t-cliques of ``g`` in lexicographic order."""
    if t < 1:
        raise ValueError("t must be >= 1")
    out: list[Clique] = []
    # forward neighbourhoods keep every clique generated once, in order
    fwd = [m & ~((1 << (v + 1)) - 1) for v, m in enumerate(g.masks)]

    def grow(prefix: list[int], cand: int) -> None:
        if len(prefix) == t:
            out.append(tuple(prefix))
            return
        for v in iter_bits(cand):
            prefix.append(v)
            grow(prefix, cand & fwd[v])
            prefix.pop()

    grow([], (1 << g.n) - 1)
    return out


def count_kt(g: Graph, t: int) -> int:
    return len(enumerate_t_cliques(g, t))


def enumerate_maximal_cliques(g: Graph) -> list[Clique]:
    """Inclusion-maximal cliques (Bron-Kerbosch with Tomita pivoting), sorted."""
    out: list[Clique] = []
    masks = g.masks

    def expand(r: int, p: int, x: int) -> None:
        if not p:
            if not x:
                out.append(tuple(iter_bits(r)))
            return
        pivot = max(iter_bits(p | x), key=lambda u: (p & masks[u]).bit_count())
        for v in iter_bits(p & ~masks[pivot]):
            expand(r | (1 << v), p & masks[v], x & masks[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand(0, (1 << g.n) - 1, 0)
    out.sort()
    return out


def maximum_clique(g: Graph) -> Clique:
    """A maximum clique; the lexicographically smallest one among ties."""
    if g.n == 0:
        return ()
    return min(enumerate_maximal_cliques(g), key=lambda c: (-len(c), c))


# -- weights and solutions ----------------------------------------------------


@dataclass
class WeightMap:
    """Nonnegative integer demands on t-cliques.

    Cliques not listed get ``default``: use 1 for the unweighted problem and
    0 for residual subproblems.
    """

    t: int
    default: int = 1
    weights: dict[Clique, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.default < 0:
            raise ValueError("default weight must be >= 0")
        clean = {}
        for k, w in self.weights.items():
            k = canonical(k)
            if len(k) != self.t:
                raise ValueError(f"weight key {k} is not a {self.t}-set")
            if w < 0:
                raise ValueError(f"negative weight on {k}")
            clean[k] = int(w)
        self.weights = clean

    @classmethod
    def unit(cls, t: int) -> WeightMap:
        return cls(t, 1)

    def __getitem__(self, k: Iterable[int]) -> int:
        return self.weights.get(canonical(k), self.default)

    def validate(self, g: Graph) -> None:
        for k in self.weights:
            if not is_clique(g, k):
                raise ValueError(f"weight given on {k}, which is not a {self.t}-clique")

    def demands(self, g: Graph) -> dict[Clique, int]:
        """Weight of every t-clique of ``g`` (zero weights included)."""
        return {k: self[k] for k in enumerate_t_cliques(g, self.t)}

    @property
    def max_weight(self) -> int:
        return max([self.default, *self.weights.values()])


@dataclass
class CoverSolution:
    """Multiset of cliques; ``mult`` holds positive multiplicities only."""

    mult: dict[Clique, int] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[Clique, int] = {}
        for c, m in self.mult.items():
            if m < 0:
                raise ValueError(f"negative multiplicity on {c}")
            if m:
                c = canonical(c)
                clean[c] = clean.get(c, 0) + int(m)
        self.mult = clean

    @classmethod
    def of(cls, cliques: Iterable[Iterable[int]]) -> CoverSolution:
        sol = cls()
        for c in cliques:
            sol.add(c)
        return sol

    def add(self, clique: Iterable[int], times: int = 1) -> None:
        if times < 0:
            raise ValueError("times must be >= 0")
        if times:
            c = canonical(clique)
            self.mult[c] = self.mult.get(c, 0) + times

    @property
    def cost(self) -> int:
        return sum(self.mult.values())

    def cliques(self) -> list[Clique]:
        return sorted(self.mult)

    def __len__(self) -> int:
        return self.cost

    def to_json(self) -> dict:
        return {
            "cost": self.cost,
            "cliques": [{"vertices": list(c), "mult": self.mult[c]} for c in self.cliques()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> CoverSolution:
        return cls({tuple(item["vertices"]): int(item.get("mult", 1)) for item in data["cliques"]})


@dataclass
class PackingSolution:
    """Selected t-cliques (the 0/1 indicator ``y``)."""

    selected: frozenset[Clique] = frozenset()

    def __post_init__(self):
        self.selected = frozenset(canonical(k) for k in self.selected)

    def value(self, w: WeightMap) -> int:
        return sum(w[k] for k in self.selected)

    def cliques(self) -> list[Clique]:
        return sorted(self.selected)

    def __len__(self) -> int:
        return len(self.selected)

    def to_json(self, w: WeightMap | None = None) -> dict:
        out: dict = {}
        if w is not None:
            out["value"] = self.value(w)
        out["cliques"] = [{"vertices": list(k), "mult": 1} for k in self.cliques()]
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> PackingSolution:
        return cls(frozenset(tuple(item["vertices"]) for item in data["cliques"]))


# -- feasibility ---------------------------------------------------------------


def cover_violations(g: Graph, t: int, w: WeightMap, f: CoverSolution) -> list[str]:
    """Every reason ``f`` fails to be a (w, K_t)-cover of ``g``; empty if feasible."""
    problems = []
    for c in f.mult:
        if not is_clique(g, c):
            problems.append(f"{list(c)} is not a clique of the graph")
    for k in w.weights:
        if not is_clique(g, k):
            problems.append(f"weight on {list(k)}, which is not a clique of the graph")
    if problems:
        return problems
    members = [(mask_of(c), m) for c, m in f.mult.items()]
    for k in enumerate_t_cliques(g, t):
        need = w[k]
        if need <= 0:
            continue
        km = mask_of(k)
        got = sum(m for cm, m in members if cm & km == km)
        if got < need:
            problems.append(f"{list(k)} covered {got} times, needs {need}")
    return problems


def is_cover_feasible(g: Graph, t: int, w: WeightMap, f: CoverSolution) -> bool:
    return not cover_violations(g, t, w, f)


def packing_violations(g: Graph, t: int, y: PackingSolution) -> list[str]:
    problems = []
    chosen = y.cliques()
    for k in chosen:
        if len(k) != t or not is_clique(g, k):
            problems.append(f"{list(k)} is not a {t}-clique of the graph")
    if problems:
        return problems
    # some clique holds both iff their union is itself a clique
    for a, b in itertools.combinations(chosen, 2):
        if is_clique(g, set(a) | set(b)):
            problems.append(f"{list(a)} and {list(b)} lie in a common clique")
    return problems


def is_packing_feasible(g: Graph, t: int, y: PackingSolution) -> bool:
    return not packing_violations(g, t, y)
