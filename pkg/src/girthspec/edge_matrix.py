"""Directed edge (non-backtracking) matrix and the trace-power route.

Arcs are numbered so that arc i and arc |E| + i are mutual inverses, with
all U -> W arcs first; edges are taken in lexicographic (u, w) order, so
the construction is deterministic. Trace powers are computed in exact
integer arithmetic: entries grow like (d - 1)^k, so the int64 fast path is
guarded by an exact bound and falls back to Python big integers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .counts import CycleCounts, Route
from .errors import NumericalError, RouteInapplicableError, SizeCapError
from .graph_core import BipartiteGraph, profile

__all__ = [
    "DirectedEdgeMatrix",
    "EdgeSpectrum",
    "build_edge_matrix",
    "trace_power_counts",
    "edge_spectrum_direct",
    "multiset_matching_distance",
]

DEFAULT_DIRECT_CAP = 6000  # cap on 2|E| for the dense nonsymmetric eigensolve


@dataclass(frozen=True)
class DirectedEdgeMatrix:
    """Sparse 0/1 matrix over the 2|E| arcs of the symmetric digraph.

    ``arcs[i]`` is (origin, terminus) in combined node ids (left node u is
    id u, right node w is id left_count + w). ``rows[i]`` lists the arcs j
    that continue arc i without reversing it.
    """

    arc_count: int
    arcs: tuple[tuple[int, int], ...]
    rows: tuple[tuple[int, ...], ...]

    def to_dense(self) -> np.ndarray:
        a = np.zeros((self.arc_count, self.arc_count))
        for i, row in enumerate(self.rows):
            for j in row:
                a[i, j] = 1.0
        return a

    def to_sparse_int64(self) -> sp.csr_matrix:
        indptr = np.zeros(self.arc_count + 1, dtype=np.int64)
        indices = []
        for i, row in enumerate(self.rows):
            indptr[i + 1] = indptr[i] + len(row)
            indices.extend(row)
        data = np.ones(len(indices), dtype=np.int64)
        return sp.csr_matrix((data, np.array(indices, dtype=np.int64), indptr),
                             shape=(self.arc_count, self.arc_count))


@dataclass(frozen=True)
class EdgeSpectrum:
    """Clustered complex spectrum of the directed edge matrix."""

    eigenvalues: tuple[tuple[complex, int], ...]
    total: int

    def power_sum(self, k: int) -> complex:
        return sum(mult * value ** k for value, mult in self.eigenvalues)

    def expand(self) -> list[complex]:
        return [v for v, mult in self.eigenvalues for _ in range(mult)]

    def max_abs(self) -> float:
        return max((abs(v) for v, _ in self.eigenvalues), default=0.0)

    def multiplicity_of(self, value: complex, tol: float = 1e-6) -> int:
        return sum(m for v, m in self.eigenvalues if abs(v - value) <= tol)


def build_edge_matrix(g: BipartiteGraph) -> DirectedEdgeMatrix:
    """Construct the 2|E| x 2|E| directed edge matrix of the graph."""
    n = g.left_count
    edges = g.sorted_edges
    e = len(edges)
    # arc i = (u, w), arc e + i = (w, u), in combined node ids
    arcs = [(u, n + w) for u, w in edges] + [(n + w, u) for u, w in edges]
    # arcs grouped by origin node
    by_origin: dict[int, list[int]] = {}
    for i, (o, _) in enumerate(arcs):
        by_origin.setdefault(o, []).append(i)
    rows = []
    for i, (_, t) in enumerate(arcs):
        inverse = e + i if i < e else i - e
        rows.append(tuple(j for j in by_origin.get(t, ()) if j != inverse))
    return DirectedEdgeMatrix(2 * e, tuple(arcs), tuple(rows))


def _int64_safe(rows: tuple[tuple[int, ...], ...], max_k: int) -> bool:
    """True if every entry of A_e^j, j <= max_k, fits comfortably in int64.

    Entries of A_e^j are bounded by the exact big-int vector A_e^j @ 1.
    """
    bound = [1] * len(rows)
    limit = 2 ** 62
    for _ in range(max_k):
        bound = [sum(bound[j] for j in row) for row in rows]
        if max(bound, default=0) >= limit:
            return False
    return True


def _traces_int64(em: DirectedEdgeMatrix, max_k: int) -> dict[int, int]:
    a = em.to_sparse_int64()
    traces = {}
    p = a.copy()
    traces[1] = int(p.diagonal().sum())
    for k in range(2, max_k + 1):
        p = p @ a
        traces[k] = int(p.diagonal().sum())
    return traces


def _traces_bigint(em: DirectedEdgeMatrix, max_k: int) -> dict[int, int]:
    rows = em.rows
    size = em.arc_count
    traces = {k: 0 for k in range(1, max_k + 1)}
    for start in range(size):
        v = [0] * size
        v[start] = 1
        for k in range(1, max_k + 1):
            v = [sum(v[j] for j in row) for row in rows]
            traces[k] += v[start]
    return traces


def trace_powers(em: DirectedEdgeMatrix, max_k: int) -> dict[int, int]:
    """Exact tr(A_e^k) for k = 1 .. max_k."""
    if _int64_safe(em.rows, max_k):
        return _traces_int64(em, max_k)
    return _traces_bigint(em, max_k)


def trace_power_counts(g: BipartiteGraph, max_k: int | None = None) -> CycleCounts:
    """Exact N_k = tr(A_e^k) / 2k for even k in [g, max_k].

    Valid for any bipartite graph (irregular included); the window is
    capped at 2g - 2 because TBC walks and cycles part ways at length 2g.
    """
    prof = profile(g)
    if prof.girth is None:
        raise RouteInapplicableError("forest input: no cycles to count")
    girth = prof.girth
    if max_k is None:
        max_k = 2 * girth - 2
    if max_k % 2 or max_k < girth:
        raise RouteInapplicableError(f"max_k={max_k} must be even and >= girth {girth}")
    if max_k > 2 * girth - 2:
        raise RouteInapplicableError(
            f"max_k={max_k} exceeds 2g-2={2 * girth - 2}: TBC walks no longer "
            "coincide with cycles at length 2g")

    em = build_edge_matrix(g)
    traces = trace_powers(em, max_k)
    counts = {}
    for k in range(girth, max_k + 1, 2):
        t = traces[k]
        if t % (2 * k):
            raise NumericalError(f"tr(A_e^{k}) = {t} is not divisible by 2k")
        counts[k] = t // (2 * k)
    return CycleCounts(girth=girth, counts=counts, route=Route.TRACE_POWER)


def _cluster_complex(values: np.ndarray, tol: float) -> list[tuple[complex, int]]:
    """Greedy centroid clustering of complex values within distance tol."""
    order = np.lexsort((values.imag, values.real))
    centroids: list[complex] = []
    sums: list[complex] = []
    sizes: list[int] = []
    for v in values[order]:
        v = complex(v)
        placed = False
        for idx in range(len(centroids) - 1, -1, -1):
            if v.real - centroids[idx].real > tol:
                break
            if abs(v - centroids[idx]) <= tol:
                sums[idx] += v
                sizes[idx] += 1
                centroids[idx] = sums[idx] / sizes[idx]
                placed = True
                break
        if not placed:
            centroids.append(v)
            sums.append(v)
            sizes.append(1)
    return sorted(zip(centroids, sizes), key=lambda t: (t[0].real, t[0].imag))


def edge_spectrum_direct(g: BipartiteGraph,
                         cluster_tolerance: float = 1e-6,
                         dense_cap: int = DEFAULT_DIRECT_CAP) -> EdgeSpectrum:
    """Complex eigenvalues of the dense A_e; the O(|E|^3) baseline.

    Exists for verification and benchmarking of the transfer route; the
    default cluster tolerance is looser than the symmetric case because
    nonsymmetric eigenproblems are less well conditioned.
    """
    em = build_edge_matrix(g)
    if em.arc_count > dense_cap:
        raise SizeCapError(f"2|E| = {em.arc_count} exceeds dense cap {dense_cap}")
    raw = np.linalg.eigvals(em.to_dense())
    clusters = _cluster_complex(raw, cluster_tolerance)
    total = sum(m for _, m in clusters)
    if total != em.arc_count:
        raise NumericalError("edge spectrum clustering lost eigenvalues")
    return EdgeSpectrum(eigenvalues=tuple(clusters), total=total)


def multiset_matching_distance(a: EdgeSpectrum, b: EdgeSpectrum) -> float:
    """Largest pairing distance under the optimal matching of two spectra."""
    if a.total != b.total:
        raise NumericalError(
            f"spectra have different sizes: {a.total} vs {b.total}")
    from scipy.optimize import linear_sum_assignment

    xs = np.array(a.expand())
    ys = np.array(b.expand())
    cost = np.abs(xs[:, None] - ys[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max())
