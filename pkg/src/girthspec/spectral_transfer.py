"""Derive the edge-matrix spectrum from the adjacency spectrum.

For a connected (d_v, d_c)-regular bipartite graph, every eigenvalue of
the directed edge matrix comes from one of three sources:

1. each strictly negative adjacency eigenvalue lambda feeds the quadratic
   xi^2 + (-lambda^2 + q1 + q2) xi + q1 q2 = 0 with q1 = d_v - 1 and
   q2 = d_c - 1; each root xi != 1 contributes +/- sqrt(xi) at the
   multiplicity of lambda;
2. +/- i sqrt(q1) and +/- i sqrt(q2), at multiplicities n - Rank(A)/2 and
   m - Rank(A)/2 (the lambda = 0 roots);
3. +/- 1, each at the cyclomatic number |E| - (m + n) + 1.

Every step total is verified against its closed form and the grand total
must be exactly 2|E|; any mismatch fails loudly.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .edge_matrix import EdgeSpectrum
from .errors import NumericalError, RouteInapplicableError
from .graph_core import BipartiteGraph, GraphProfile, profile
from .spectra import AdjacencySpectrum

__all__ = [
    "TransferParameters",
    "XiRoots",
    "solve_transfer_quadratic",
    "derive_edge_spectrum",
    "derive_with_step_totals",
]

XI_ONE_TOL = 1e-6          # |xi - 1| below this means the excluded root
LAMBDA_MAX_TOL = 1e-5      # cross-check |lambda^2 - d_v d_c| for that root
VIETA_RTOL = 1e-9


@dataclass(frozen=True)
class TransferParameters:
    """Degree and rank bookkeeping for the transfer, sides normalized.

    ``n`` counts the side with degree q1 + 1 and ``m`` the side with degree
    q2 + 1; sides are swapped on construction when needed so that
    q2 >= q1 (the edge spectrum does not depend on which side is called U).
    """

    q1: int
    q2: int
    n: int
    m: int
    edge_count: int
    rank: int
    nullity: int

    @classmethod
    def from_graph(cls, g: BipartiteGraph, spec: AdjacencySpectrum,
                   prof: GraphProfile | None = None) -> "TransferParameters":
        if prof is None:
            prof = profile(g)
        if not prof.is_biregular:
            raise RouteInapplicableError("graph is not bi-regular")
        if not prof.is_connected:
            raise RouteInapplicableError("graph is not connected")
        d_v, d_c = prof.d_v, prof.d_c
        n, m = g.left_count, g.right_count
        if d_v > d_c:
            d_v, d_c = d_c, d_v
            n, m = m, n
        q1, q2 = d_v - 1, d_c - 1
        if q2 < 2 or q1 < 1:
            raise RouteInapplicableError(
                f"degrees (d_v={d_v}, d_c={d_c}) outside the q2 >= 2, q1 >= 1 "
                "hypothesis; use the trace route instead")
        if spec.total != n + m:
            raise NumericalError("spectrum size disagrees with |V|")
        if spec.rank % 2:
            raise NumericalError(f"Rank(A) = {spec.rank} is odd: tolerance failure")
        return cls(q1=q1, q2=q2, n=n, m=m, edge_count=g.edge_count,
                   rank=spec.rank, nullity=spec.nullity)


@dataclass(frozen=True)
class XiRoots:
    """The two roots of the transfer quadratic for one adjacency eigenvalue."""

    xi1: complex
    xi2: complex

    def check_vieta(self, lam: float, q1: int, q2: int) -> None:
        prod, tot = q1 * q2, lam * lam - q1 - q2
        if abs(self.xi1 * self.xi2 - prod) > VIETA_RTOL * max(1.0, abs(prod)):
            raise NumericalError("xi root product violates Vieta")
        if abs(self.xi1 + self.xi2 - tot) > VIETA_RTOL * max(1.0, abs(tot)):
            raise NumericalError("xi root sum violates Vieta")


def solve_transfer_quadratic(lam: float, params: TransferParameters) -> XiRoots:
    """Stable roots of xi^2 + (q1 + q2 - lambda^2) xi + q1 q2 = 0.

    The larger-magnitude root uses the sign-aware formula; the smaller one
    comes from the Vieta product, avoiding cancellation.
    """
    q1, q2 = params.q1, params.q2
    b = float(q1 + q2 - lam * lam)
    c = float(q1 * q2)
    disc = b * b - 4.0 * c
    if disc >= 0.0:
        sq = math.sqrt(disc)
        big = (-b - sq) / 2.0 if b >= 0.0 else (-b + sq) / 2.0
        roots = XiRoots(complex(big), complex(c / big))
    else:
        re, im = -b / 2.0, math.sqrt(-disc) / 2.0
        roots = XiRoots(complex(re, im), complex(re, -im))
    roots.check_vieta(lam, q1, q2)
    return roots


def derive_edge_spectrum(spec: AdjacencySpectrum,
                         params: TransferParameters) -> EdgeSpectrum:
    """Edge spectrum of a connected bi-regular graph from its adjacency spectrum.

    Integer bookkeeping throughout; the three step totals and the grand
    total 2|E| are asserted, so a corrupted input spectrum cannot pass
    silently.
    """
    return derive_with_step_totals(spec, params)[0]


def derive_with_step_totals(
        spec: AdjacencySpectrum,
        params: TransferParameters) -> tuple[EdgeSpectrum, tuple[int, int, int]]:
    """Like :func:`derive_edge_spectrum` but also reports the per-step
    eigenvalue totals (quadratic roots, lambda = 0 roots, +/- 1)."""
    d_prod = (params.q1 + 1) * (params.q2 + 1)  # d_v * d_c
    entries: list[tuple[complex, int]] = []

    # Step 1: strictly negative eigenvalues through the quadratic.
    step1 = 0
    for lam, mult in spec.eigenvalues:
        if lam >= -spec.zero_tolerance:
            continue
        roots = solve_transfer_quadratic(lam, params)
        for xi in (roots.xi1, roots.xi2):
            if abs(xi - 1.0) <= XI_ONE_TOL:
                if abs(lam * lam - d_prod) > LAMBDA_MAX_TOL * max(1.0, d_prod):
                    raise NumericalError(
                        f"root xi ~ 1 arose from lambda = {lam}, not from "
                        "+/- sqrt(d_v d_c): the input spectrum is corrupted")
                continue
            eta = cmath.sqrt(xi)
            entries.append((eta, mult))
            entries.append((-eta, mult))
            step1 += 2 * mult
    expect1 = 2 * (params.m + params.n) - 2 * params.nullity - 2
    if step1 != expect1:
        raise NumericalError(
            f"step 1 produced {step1} eigenvalues, expected {expect1}")

    # Step 2: the lambda = 0 roots +/- i sqrt(q1), +/- i sqrt(q2).
    for q, side in ((params.q1, params.n), (params.q2, params.m)):
        mult = side - params.rank // 2
        if mult < 0:
            raise NumericalError("negative step-2 multiplicity: rank too large")
        if mult:
            root = complex(0.0, math.sqrt(q))
            entries.append((root, mult))
            entries.append((-root, mult))
    step2 = sum(m for _, m in entries) - step1
    if step2 != 2 * params.nullity:
        raise NumericalError(
            f"step 2 produced {step2} eigenvalues, expected {2 * params.nullity}")

    # Step 3: +/- 1 at the cyclomatic number.
    cyclomatic = params.edge_count - (params.m + params.n) + 1
    if cyclomatic < 0:
        raise NumericalError("negative cyclomatic number: inconsistent counts")
    if cyclomatic:
        entries.append((complex(1.0), cyclomatic))
        entries.append((complex(-1.0), cyclomatic))

    total = sum(m for _, m in entries)
    if total != 2 * params.edge_count:
        raise NumericalError(
            f"derived spectrum has {total} eigenvalues, expected "
            f"{2 * params.edge_count}")

    merged = _merge_equal(entries)
    spectrum = EdgeSpectrum(eigenvalues=tuple(merged), total=total)
    return spectrum, (step1, step2, 2 * cyclomatic)


def _merge_equal(entries: list[tuple[complex, int]],
                 tol: float = 1e-12) -> list[tuple[complex, int]]:
    """Combine coincident values (e.g. q1 == q2 makes step 2 roots collide)."""
    out: list[tuple[complex, int]] = []
    for v, m in sorted(entries, key=lambda t: (t[0].real, t[0].imag)):
        if out and abs(out[-1][0] - v) <= tol:
            out[-1] = (out[-1][0], out[-1][1] + m)
        else:
            out.append((v, m))
    return out
