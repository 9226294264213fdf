"""Shared helpers for the test suite."""

from __future__ import annotations

import random

import pytest

from girthspec import BipartiteGraph, profile, random_biregular


def random_bipartite(rng: random.Random, max_side: int = 8,
                     require_cycle: bool = True) -> BipartiteGraph:
    """Random simple bipartite graph, resampled until it contains a cycle."""
    while True:
        n = rng.randint(2, max_side)
        m = rng.randint(2, max_side)
        p = rng.uniform(0.25, 0.7)
        edges = {(u, w) for u in range(n) for w in range(m) if rng.random() < p}
        if not edges:
            continue
        g = BipartiteGraph(n, m, frozenset(edges))
        if not require_cycle or profile(g).girth is not None:
            return g


def biregular_girth6_graphs(count: int, max_seed: int = 4000):
    """Generated connected bi-regular graphs with girth >= 6, varied sizes."""
    out = []
    families = [(9, 6, 2, 3), (12, 8, 2, 3), (15, 10, 2, 3), (18, 12, 2, 3),
                (8, 4, 2, 4), (12, 6, 2, 4), (16, 8, 2, 4)]
    seed = 0
    while len(out) < count and seed < max_seed:
        n, m, d_v, d_c = families[seed % len(families)]
        g = random_biregular(n, m, d_v, d_c, seed=seed)
        prof = profile(g)
        if prof.girth is not None and prof.girth >= 6:
            out.append((g, prof))
        seed += 1
    if len(out) < count:
        pytest.fail(f"only found {len(out)} girth>=6 bi-regular graphs")
    return out
