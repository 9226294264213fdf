"""Shared result types for cycle counting routes."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

__all__ = ["Route", "CycleCounts"]


class Route(str, Enum):
    SPECTRAL_TRANSFER = "transfer"
    TRACE_POWER = "trace"
    DIRECT_EDGE_SPECTRUM = "direct"
    BRUTE_FORCE = "brute"
    CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class CycleCounts:
    """Map from even cycle length k to the exact count N_k.

    ``residuals`` records, for spectral routes, the distance from the raw
    floating value to the rounded integer; exact routes leave it empty.
    """

    girth: int
    counts: dict[int, int]
    route: Route
    residuals: dict[int, float] = field(default_factory=dict)
