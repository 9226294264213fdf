"""Dense symmetric eigendecomposition of the adjacency matrix.

Raw eigenvalues are clustered into (value, multiplicity) pairs so that
downstream integer bookkeeping can rely on exact multiplicities. The rank
taken from the zero-eigenvalue count is audited against an independent
SVD-based rank of the biadjacency block; a mismatch is an error, not a
silent choice.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericalError, SizeCapError
from .graph_core import BipartiteGraph

__all__ = [
    "AdjacencySpectrum",
    "adjacency_matrix",
    "adjacency_spectrum",
    "rank_of_biadjacency",
]

DEFAULT_DENSE_CAP = 4096


@dataclass(frozen=True)
class AdjacencySpectrum:
    """Clustered real spectrum of the symmetric adjacency matrix.

    ``eigenvalues`` holds (value, multiplicity) pairs with values strictly
    decreasing; multiplicities sum to ``total`` = |V|. The spectrum is
    explicitly symmetrized about the origin (bipartite property).
    """

    eigenvalues: tuple[tuple[float, int], ...]
    total: int
    rank: int
    nullity: int
    zero_tolerance: float

    def power_sum(self, k: int) -> float:
        return float(sum(mult * value ** k for value, mult in self.eigenvalues))

    def max_abs(self) -> float:
        return max((abs(v) for v, _ in self.eigenvalues), default=0.0)


def biadjacency_matrix(g: BipartiteGraph) -> np.ndarray:
    d = np.zeros((g.left_count, g.right_count))
    for u, w in g.edges:
        d[u, w] = 1.0
    return d


def adjacency_matrix(g: BipartiteGraph) -> np.ndarray:
    """Symmetric |V| x |V| adjacency matrix, U block first."""
    n, m = g.left_count, g.right_count
    a = np.zeros((n + m, n + m))
    d = biadjacency_matrix(g)
    a[:n, n:] = d
    a[n:, :n] = d.T
    return a


def _cluster_sorted(values: np.ndarray, tol: float) -> list[tuple[float, int]]:
    """Single-linkage clustering of sorted values with gap threshold tol."""
    clusters: list[tuple[float, int]] = []
    start = 0
    for i in range(1, len(values) + 1):
        if i == len(values) or values[i] - values[i - 1] > tol:
            chunk = values[start:i]
            clusters.append((float(chunk.mean()), len(chunk)))
            start = i
    return clusters


def _symmetrize(clusters: list[tuple[float, int]], zero_tol: float,
                pair_tol: float) -> list[tuple[float, int]]:
    """Pair clusters as +/- lambda; an unpaired value is an error."""
    zero_mult = sum(m for v, m in clusters if abs(v) <= zero_tol)
    pos = [(v, m) for v, m in clusters if v > zero_tol]
    neg = [(v, m) for v, m in clusters if v < -zero_tol]
    if len(pos) != len(neg):
        raise NumericalError(
            f"spectrum not symmetric about the origin: {len(pos)} positive vs "
            f"{len(neg)} negative clusters (input not bipartite or numerics failed)")
    out: list[tuple[float, int]] = []
    for (vp, mp), (vn, mn) in zip(sorted(pos), sorted(neg, reverse=True)):
        if abs(vp + vn) > pair_tol or mp != mn:
            raise NumericalError(
                f"cannot pair eigenvalue clusters {vp}^{mp} and {vn}^{mn}")
        v = (vp - vn) / 2.0
        out.append((v, mp))
        out.append((-v, mp))
    if zero_mult:
        out.append((0.0, zero_mult))
    out.sort(key=lambda t: -t[0])
    return out


def adjacency_spectrum(g: BipartiteGraph,
                       zero_tolerance: float | None = None,
                       cluster_tolerance: float | None = None,
                       dense_cap: int = DEFAULT_DENSE_CAP) -> AdjacencySpectrum:
    """Clustered, symmetrized spectrum of the adjacency matrix.

    Defaults: zero_tolerance = 1e-7 * max(1, |lambda|_max) and
    cluster_tolerance = max(1e-8, 1e-10 * |lambda|_max).
    """
    if g.node_count > dense_cap:
        raise SizeCapError(f"|V| = {g.node_count} exceeds dense cap {dense_cap}")
    raw = np.linalg.eigvalsh(adjacency_matrix(g))
    lam_max = float(np.abs(raw).max()) if raw.size else 0.0
    if cluster_tolerance is None:
        cluster_tolerance = max(1e-8, 1e-10 * lam_max)
    if zero_tolerance is None:
        zero_tolerance = 1e-7 * max(1.0, lam_max)

    clusters = _cluster_sorted(np.sort(raw), cluster_tolerance)
    pair_tol = max(zero_tolerance, 10.0 * cluster_tolerance)
    clusters = _symmetrize(clusters, zero_tolerance, pair_tol)

    total = sum(m for _, m in clusters)
    if total != g.node_count:
        raise NumericalError("cluster multiplicities do not sum to |V|")
    rank = sum(m for v, m in clusters if abs(v) > zero_tolerance)

    audit = rank_of_biadjacency(g, zero_tolerance)
    if rank != 2 * audit:
        raise NumericalError(
            f"rank audit failed: eigenvalue count gives Rank(A)={rank} but the "
            f"biadjacency block gives 2*Rank(D)={2 * audit}; adjust tolerances")

    return AdjacencySpectrum(
        eigenvalues=tuple(clusters),
        total=total,
        rank=rank,
        nullity=total - rank,
        zero_tolerance=zero_tolerance,
    )


def rank_of_biadjacency(g: BipartiteGraph,
                        zero_tolerance: float | None = None) -> int:
    """Rank of the n x m biadjacency block via singular values.

    Independent audit route: the singular values of the block are the
    absolute values of the nonzero adjacency eigenvalues, so the same
    zero-tolerance discipline applies.
    """
    sv = np.linalg.svd(biadjacency_matrix(g), compute_uv=False)
    if zero_tolerance is None:
        s_max = float(sv.max()) if sv.size else 0.0
        zero_tolerance = 1e-7 * max(1.0, s_max)
    return int((sv > zero_tolerance).sum())
