"""Closed-form clique cover bounds and Turan-type counts, in exact integer arithmetic."""

from __future__ import annotations

from math import comb, isqrt, prod

from .graph import turan_hypergraph


def lovasz_bound(n: int, m: int) -> int:
    """k + s with k = C(n,2) - m missing edges and s the largest integer with s^2 - s <= k."""
    if n < 0 or not 0 <= m <= comb(n, 2):
        raise ValueError(f"edge count {m} out of range for n={n}")
    k = comb(n, 2) - m
    s = (1 + isqrt(1 + 4 * k)) // 2
    while s * s - s > k:
        s -= 1
    while (s + 1) * (s + 1) - (s + 1) <= k:
        s += 1
    return k + s


def mindeg_bound(n: int, delta: int) -> int:
    """(n - delta) + n(n - delta - 1)/2, rounded down when the half is not integral."""
    if n < 1 or not 0 <= delta <= n - 1:
        raise ValueError(f"minimum degree {delta} out of range for n={n}")
    return (n - delta) + n * (n - delta - 1) // 2


def mindeg_bound_plus(n: int, delta: int) -> int | None:
    """Sharper edge clique cover bound just above delta = n/2; None where it does not apply.

    n odd, delta = (n+1)/2:  n^2/4 - n/2 + 1/4 = (n-1)^2 / 4
    n even, delta = n/2 + 1: n^2/4 - n + 2
    """
    if n < 1 or not 0 <= delta <= n - 1:
        return None
    if n % 2 == 1 and 2 * delta == n + 1:
        return (n - 1) ** 2 // 4
    if n % 2 == 0 and delta == n // 2 + 1:
        return n * n // 4 - n + 2
    return None


def egp_bound(n: int) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    return n * n // 4


def k3_turan3(n: int) -> int:
    """Triangles in T(n, 3), by the residue-class cubic."""
    if n < 0:
        raise ValueError("n must be >= 0")
    r = n % 3
    if r == 0:
        return n**3 // 27
    if r == 1:
        return (n - 1) ** 3 // 27 + (n - 1) ** 2 // 9
    return (n + 1) ** 3 // 27 - (n + 1) ** 2 // 9


def k3_turan3_diff(n: int) -> int:
    """k3(T(n,3)) - k3(T(n-1,3)) = floor(floor(2n/3)^2 / 4)."""
    if n < 3:
        raise ValueError("n must be >= 3")
    return (2 * n // 3) ** 2 // 4


def k3_turan3_diff_cases(n: int) -> int:
    """Same difference, via its per-residue closed forms."""
    if n < 3:
        raise ValueError("n must be >= 3")
    r = n % 3
    if r == 0:
        return n * n // 9
    if r == 1:
        return (n - 1) ** 2 // 9
    return (n * n - n - 2) // 9


def kt_turan(n: int, t: int) -> int:
    """Number of t-cliques in T(n, t): the product of its t part sizes."""
    if n < 1 or t < 1:
        raise ValueError("need n >= 1 and t >= 1")
    q, r = divmod(n, t)
    return prod([q + 1] * r + [q] * (t - r))


def turan_hyper_lower(n: int) -> int:
    """Hyperedge count of Turan's K_4^(3)-free 3-graph on n vertices.

    n = 3m: m^2(5m-3)/2;  n = 3m+1: m(5m^2+2m-1)/2.  For n = 3m+2 the
    published closed form is garbled, so the construction is counted directly.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    m, r = divmod(n, 3)
    if r == 0:
        return m * m * (5 * m - 3) // 2
    if r == 1:
        return m * (5 * m * m + 2 * m - 1) // 2
    return turan_hypergraph(n).num_hyperedges


def k4_triangle_cover_impossible(n: int) -> bool:
    """Naive count: k3(T(n,3)) cliques of size <= 4 hold at most 4 * k3 triangles, fewer than C(n,3)."""
    return 4 * k3_turan3(n) < comb(n, 3)


def remark5_counting_threshold(limit: int = 1000) -> int:
    """Smallest n for which the naive count already rules out covering K_n's triangles."""
    for n in range(limit + 1):
        if k4_triangle_cover_impossible(n):
            return n
    raise ValueError(f"no threshold found below {limit}")
