"""Cycle counts from edge spectra, plus oracles and cross-checks.

The spectral route turns an edge spectrum into counts via
N_k = sum_i eta_i^k / (2k). The brute-force oracle enumerates cycles by
canonical-rooted DFS and is valid for any length. The (g+4) cross-check
recomputes one count from the adjacency spectrum alone, using closed
cycle-free walk counts on the bi-regular covering tree.
"""

from __future__ import annotations

from math import comb

from .counts import CycleCounts, Route
from .edge_matrix import EdgeSpectrum
from .errors import NumericalError, RouteInapplicableError, SizeCapError
from .graph_core import BipartiteGraph, profile
from .spectra import AdjacencySpectrum

__all__ = [
    "CycleCounts",
    "Route",
    "counts_from_spectrum",
    "brute_force_counts",
    "complete_bipartite_closed_form",
    "tree_walk_count",
    "g_plus_4_cross_check",
]

RESIDUAL_TOL = 1e-4
IMAG_RTOL = 1e-6


def counts_from_spectrum(es: EdgeSpectrum, girth: int, max_k: int | None = None,
                         route: Route = Route.SPECTRAL_TRANSFER) -> CycleCounts:
    """N_k = sum eta_i^k / (2k) for even k in [girth, max_k].

    The raw value must land within RESIDUAL_TOL of an integer and its
    imaginary part must be relatively tiny; anything else is reported as a
    numerical failure rather than rounded over.
    """
    if max_k is None:
        max_k = 2 * girth - 2
    if max_k % 2 or max_k < girth or girth % 2:
        raise RouteInapplicableError(f"need even girth <= max_k, got g={girth}, "
                                     f"max_k={max_k}")
    if max_k > 2 * girth - 2:
        raise RouteInapplicableError(
            f"max_k={max_k} exceeds 2g-2={2 * girth - 2}")
    if es.total % 2:
        raise NumericalError("edge spectrum size must be even (2|E|)")

    counts: dict[int, int] = {}
    residuals: dict[int, float] = {}
    for k in range(girth, max_k + 1, 2):
        s = es.power_sum(k)
        if abs(s.imag) > IMAG_RTOL * max(1.0, abs(s)):
            raise NumericalError(
                f"power sum for k={k} has imaginary part {s.imag}")
        raw = s.real / (2 * k)
        nearest = round(raw)
        residual = abs(raw - nearest)
        if residual > RESIDUAL_TOL:
            raise NumericalError(
                f"N_{k} residual {residual:.3g} exceeds {RESIDUAL_TOL}: "
                "numerically corrupted spectrum")
        if nearest < 0:
            raise NumericalError(f"N_{k} rounded to a negative value {nearest}")
        counts[k] = int(nearest)
        residuals[k] = residual
    return CycleCounts(girth=girth, counts=counts, route=route,
                       residuals=residuals)


def brute_force_counts(g: BipartiteGraph, max_k: int,
                       edge_cap: int = 200) -> CycleCounts:
    """Exact cycle counts by canonical-rooted DFS enumeration.

    Paths grow from each root s through nodes with larger combined id only,
    and close back to s; every cycle is visited exactly twice (once per
    direction) from its minimum node. Valid for any k, unlike the spectral
    routes.
    """
    if g.edge_count > edge_cap:
        raise SizeCapError(f"|E| = {g.edge_count} exceeds brute-force cap {edge_cap}")
    if max_k < 4 or max_k % 2:
        raise RouteInapplicableError(f"max_k={max_k} must be an even integer >= 4")
    prof = profile(g)
    if prof.girth is None:
        raise RouteInapplicableError("forest input: no cycles to count")

    adj = g.global_adjacency
    raw = {k: 0 for k in range(4, max_k + 1, 2)}
    on_path = [False] * g.node_count

    def extend(s: int, u: int, depth: int) -> None:
        for v in adj[u]:
            if v == s:
                if depth + 1 >= 4:
                    raw[depth + 1] += 1
            elif v > s and not on_path[v] and depth + 1 < max_k:
                on_path[v] = True
                extend(s, v, depth + 1)
                on_path[v] = False

    for s in range(g.node_count):
        on_path[s] = True
        extend(s, s, 0)
        on_path[s] = False

    counts: dict[int, int] = {}
    for k in range(prof.girth, max_k + 1, 2):
        if raw[k] % 2:
            raise NumericalError("cycle enumeration parity broken")
        counts[k] = raw[k] // 2
    return CycleCounts(girth=prof.girth, counts=counts, route=Route.BRUTE_FORCE)


def complete_bipartite_closed_form(m: int, n: int, k: int) -> int:
    """Exact N_4 or N_6 of K_{m,n}."""
    if m < 1 or n < 1:
        raise ValueError("side sizes must be positive")
    if k == 4:
        num = (m - 1) * (n - 1) * m * n
        assert num % 4 == 0
        return num // 4
    if k == 6:
        num = m * (m - 1) * (m - 2) * n * (n - 1) * (n - 2)
        assert num % 6 == 0
        return num // 6
    raise ValueError(f"no closed form for k={k}")


def tree_walk_count(d_root: int, d_other: int, length: int) -> int:
    """Closed walks of the given length from the root of the infinite
    bi-regular tree (root degree d_root, levels alternating d_other, d_root).

    Equals the number of closed cycle-free walks from a node of degree
    d_root in any graph whose girth is large enough. Exact integers; odd
    lengths return 0.
    """
    if length < 0:
        raise ValueError("length must be nonnegative")
    if length % 2:
        return 0
    max_depth = length // 2
    # walks[d] = number of partial walks currently at depth d
    walks = [0] * (max_depth + 1)
    walks[0] = 1
    for _ in range(length):
        nxt = [0] * (max_depth + 1)
        for d, ways in enumerate(walks):
            if not ways:
                continue
            if d > 0:
                nxt[d - 1] += ways  # the single up-edge
            if d < max_depth:
                if d == 0:
                    down = d_root
                elif d % 2:
                    down = d_other - 1
                else:
                    down = d_root - 1
                nxt[d + 1] += ways * down
        walks = nxt
    return walks[0]


def _psi_g_plus_4_over_2i(g: int, d_v: int, d_c: int, n_g: int,
                          n_g2: int) -> int:
    """Closed walks *with* a cycle, length g+4, divided by 2(g+4)."""
    h = g // 2
    term1 = n_g2 * ((g + 2) // 2 * (d_v + d_c) - (g + 2))
    term2 = n_g * (h * (d_v - 2) * (d_c - 1) + h * (d_c - 2) * (d_v - 1))
    term3 = n_g * ((comb(h, 2) + h) * (d_v - 2) ** 2
                   + (comb(h, 2) + h) * (d_c - 2) ** 2
                   + h * h * (d_v - 2) * (d_c - 2))
    term4 = n_g * (comb(g, 2) + 2 * g
                   + (g + 2) * (h * (d_v - 2) + h * (d_c - 2)))
    return term1 + term2 + term3 + term4


def g_plus_4_cross_check(g_graph: BipartiteGraph, spec: AdjacencySpectrum,
                         n4_counts: CycleCounts) -> int:
    """N_{g+4} from the adjacency power sum, tree walks, and N_g, N_{g+2}.

    Independent of the edge spectrum entirely; only defined when
    g + 4 <= 2g - 2, i.e. girth >= 6.
    """
    prof = profile(g_graph)
    if not (prof.is_biregular and prof.is_connected):
        raise RouteInapplicableError("cross-check needs a connected bi-regular graph")
    g = prof.girth
    if g is None or g < 6:
        raise RouteInapplicableError("cross-check needs girth >= 6")
    if g not in n4_counts.counts or g + 2 not in n4_counts.counts:
        raise RouteInapplicableError("cross-check needs N_g and N_{g+2}")

    i = g + 4
    d_v, d_c = prof.d_v, prof.d_c
    n, m = g_graph.left_count, g_graph.right_count
    omega = n * tree_walk_count(d_v, d_c, i) + m * tree_walk_count(d_c, d_v, i)
    psi_over_2i = _psi_g_plus_4_over_2i(g, d_v, d_c, n4_counts.counts[g],
                                        n4_counts.counts[g + 2])
    raw = (spec.power_sum(i) - omega) / (2 * i) - psi_over_2i
    nearest = round(raw)
    if abs(raw - nearest) > RESIDUAL_TOL:
        raise NumericalError(
            f"cross-check residual {abs(raw - nearest):.3g} exceeds {RESIDUAL_TOL}")
    return int(nearest)
