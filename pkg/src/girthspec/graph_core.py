"""Bipartite graph model, file ingestion, validation, and girth computation.

Node identity is 0-based dense indices per side: ``u`` indexes the left
(variable) side ``U`` and ``w`` indexes the right (check) side ``W``.
Girth is computed exactly by a BFS from every node; for bipartite graphs
the shortest non-tree-edge closure seen over all roots is the girth.
"""

from __future__ import annotations

import random
import warnings
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import GenerationError, ParseError

__all__ = [
    "BipartiteGraph",
    "GraphProfile",
    "parse_edge_list",
    "write_edge_list",
    "parse_alist",
    "write_alist",
    "profile",
    "random_biregular",
    "complete_bipartite",
    "even_cycle",
    "tesseract",
]


@dataclass(frozen=True)
class BipartiteGraph:
    """Simple bipartite graph with ``left_count`` + ``right_count`` nodes.

    Edges are (u, w) pairs with ``0 <= u < left_count`` and
    ``0 <= w < right_count``; self-loops are impossible by construction and
    parallel edges are excluded because ``edges`` is a set. Immutable after
    construction.
    """

    left_count: int
    right_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.left_count <= 0 or self.right_count <= 0:
            raise ParseError("both sides must have at least one node")
        for u, w in self.edges:
            if not (0 <= u < self.left_count and 0 <= w < self.right_count):
                raise ParseError(f"edge ({u}, {w}) out of range "
                                 f"({self.left_count} x {self.right_count})")

    @classmethod
    def from_edges(cls, left_count: int, right_count: int,
                   edges) -> "BipartiteGraph":
        return cls(left_count, right_count, frozenset(map(tuple, edges)))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def node_count(self) -> int:
        return self.left_count + self.right_count

    @cached_property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        """Edges in lexicographic (u, w) order; the canonical arc order."""
        return tuple(sorted(self.edges))

    @cached_property
    def left_adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.left_count)]
        for u, w in self.sorted_edges:
            adj[u].append(w)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def right_adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.right_count)]
        for u, w in self.sorted_edges:
            adj[w].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def global_adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor lists over combined ids: left node u -> u, right node
        w -> left_count + w."""
        n = self.left_count
        left = tuple(tuple(n + w for w in nbrs) for nbrs in self.left_adjacency)
        return left + self.right_adjacency

    def degree_sequences(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        left = tuple(sorted((len(a) for a in self.left_adjacency), reverse=True))
        right = tuple(sorted((len(a) for a in self.right_adjacency), reverse=True))
        return left, right


@dataclass(frozen=True)
class GraphProfile:
    """Structural summary of a :class:`BipartiteGraph`."""

    is_connected: bool
    is_biregular: bool
    d_v: int | None
    d_c: int | None
    girth: int | None  # None marks infinite girth (forest)
    degree_sequences: tuple[tuple[int, ...], tuple[int, ...]]


# ---------------------------------------------------------------------------
# Parsing / writing
# ---------------------------------------------------------------------------

def _as_text(data) -> str:
    if isinstance(data, (bytes, bytearray)):
        return data.decode("utf-8")
    return data


def parse_edge_list(text) -> BipartiteGraph:
    """Parse the plain edge-list format.

    First meaningful line is ``n m``; each following line is ``u w`` with
    0-based indices. ``#`` starts a comment; blank lines are skipped.
    Duplicate edges collapse to one with a warning.
    """
    lines = _as_text(text).splitlines()
    header: tuple[int, int] | None = None
    edges: set[tuple[int, int]] = set()
    dup = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: non-integer token in {raw!r}") from exc
        if header is None:
            if a <= 0 or b <= 0:
                raise ParseError(f"line {lineno}: node counts must be positive")
            header = (a, b)
            continue
        n, m = header
        if not (0 <= a < n and 0 <= b < m):
            raise ParseError(f"line {lineno}: edge ({a}, {b}) out of range")
        if (a, b) in edges:
            dup += 1
        else:
            edges.add((a, b))
    if header is None:
        raise ParseError("empty input: missing 'n m' header line")
    if dup:
        warnings.warn(f"collapsed {dup} duplicate edge line(s)", stacklevel=2)
    return BipartiteGraph(header[0], header[1], frozenset(edges))


def write_edge_list(g: BipartiteGraph) -> str:
    lines = [f"{g.left_count} {g.right_count}"]
    lines.extend(f"{u} {w}" for u, w in g.sorted_edges)
    return "\n".join(lines) + "\n"


def parse_alist(text) -> BipartiteGraph:
    """Parse the alist interchange format (1-indexed, zero padding allowed).

    The alist's column (variable) side becomes the left side ``U``.
    """
    rows = [ln.split() for ln in _as_text(text).splitlines() if ln.strip()]
    try:
        toks = [[int(t) for t in row] for row in rows]
    except ValueError as exc:
        raise ParseError("alist contains a non-integer token") from exc
    if len(toks) < 4:
        raise ParseError("alist too short: need header, max-degrees, two degree rows")
    if len(toks[0]) != 2 or len(toks[1]) != 2:
        raise ParseError("alist header lines must contain exactly two integers")
    n, m = toks[0]
    if n <= 0 or m <= 0:
        raise ParseError("alist node counts must be positive")
    max_col, max_row = toks[1]
    if len(toks) != 4 + n + m:
        raise ParseError(f"alist should have {4 + n + m} lines, found {len(toks)}")
    col_deg, row_deg = toks[2], toks[3]
    if len(col_deg) != n or len(row_deg) != m:
        raise ParseError("degree rows do not match the declared node counts")
    if col_deg and max(col_deg) > max_col or row_deg and max(row_deg) > max_row:
        raise ParseError("declared maximum degree exceeded in a degree row")

    edges: set[tuple[int, int]] = set()
    for u in range(n):
        nbrs = [t for t in toks[4 + u] if t != 0]
        if len(nbrs) != col_deg[u]:
            raise ParseError(f"column {u + 1}: {len(nbrs)} neighbors listed, "
                             f"degree header says {col_deg[u]}")
        for w in nbrs:
            if not (1 <= w <= m):
                raise ParseError(f"column {u + 1}: row index {w} out of range")
            edges.add((u, w - 1))
    for w in range(m):
        nbrs = [t for t in toks[4 + n + w] if t != 0]
        if len(nbrs) != row_deg[w]:
            raise ParseError(f"row {w + 1}: {len(nbrs)} neighbors listed, "
                             f"degree header says {row_deg[w]}")
        for u in nbrs:
            if not (1 <= u <= n):
                raise ParseError(f"row {w + 1}: column index {u} out of range")
            if (u - 1, w) not in edges:
                raise ParseError(f"row {w + 1} lists column {u} but the column "
                                 "side does not list the reverse")
    if len(edges) != sum(col_deg):
        raise ParseError("column degree total disagrees with the edge set")
    return BipartiteGraph(n, m, frozenset(edges))


def write_alist(g: BipartiteGraph) -> str:
    col_adj = [[w + 1 for w in nbrs] for nbrs in g.left_adjacency]
    row_adj = [[u + 1 for u in nbrs] for nbrs in g.right_adjacency]
    max_col = max((len(a) for a in col_adj), default=0)
    max_row = max((len(a) for a in row_adj), default=0)
    lines = [
        f"{g.left_count} {g.right_count}",
        f"{max_col} {max_row}",
        " ".join(str(len(a)) for a in col_adj),
        " ".join(str(len(a)) for a in row_adj),
    ]
    for a in col_adj:
        lines.append(" ".join(str(x) for x in a + [0] * (max_col - len(a))) or "0")
    for a in row_adj:
        lines.append(" ".join(str(x) for x in a + [0] * (max_row - len(a))) or "0")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Profiling
# ---------------------------------------------------------------------------

def _girth(adj: tuple[tuple[int, ...], ...]) -> int | None:
    """Exact girth by per-root BFS; None for forests.

    For each root, any non-tree edge (u, v) seen during BFS closes a walk of
    length dist(u) + dist(v) + 1 through the root. Minimizing over all roots
    is exact for graphs of even girth, which covers all bipartite inputs.
    """
    best: int | None = None
    n = len(adj)
    dist = [-1] * n
    parent = [-1] * n
    for root in range(n):
        if not adj[root]:
            continue
        touched = [root]
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and 2 * dist[u] >= best:
                break
            for v in adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    touched.append(v)
                    queue.append(v)
                elif v != parent[u]:
                    cand = dist[u] + dist[v] + 1
                    if best is None or cand < best:
                        best = cand
        for v in touched:
            dist[v] = -1
            parent[v] = -1
    return best


def profile(g: BipartiteGraph) -> GraphProfile:
    """Connectivity, bi-regularity, degree sequences, and exact girth."""
    adj = g.global_adjacency
    seen = [False] * g.node_count
    queue = deque([0])
    seen[0] = True
    count = 1
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    connected = count == g.node_count

    left_degs = {len(a) for a in g.left_adjacency}
    right_degs = {len(a) for a in g.right_adjacency}
    biregular = len(left_degs) == 1 and len(right_degs) == 1
    d_v = left_degs.pop() if biregular and len(g.left_adjacency) else None
    d_c = right_degs.pop() if biregular and len(g.right_adjacency) else None
    if not biregular:
        d_v = d_c = None

    return GraphProfile(
        is_connected=connected,
        is_biregular=biregular,
        d_v=d_v,
        d_c=d_c,
        girth=_girth(adj),
        degree_sequences=g.degree_sequences(),
    )


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def random_biregular(n: int, m: int, d_v: int, d_c: int, seed: int,
                     max_attempts: int = 200) -> BipartiteGraph:
    """Random simple connected (d_v, d_c)-regular bipartite graph.

    Configuration model with edge-swap repair of parallel edges; the whole
    attempt is retried with an incremented seed until the result is simple
    and connected. Deterministic given (n, m, d_v, d_c, seed).
    """
    if n <= 0 or m <= 0 or d_v <= 0 or d_c <= 0:
        raise GenerationError("all parameters must be positive")
    if n * d_v != m * d_c:
        raise GenerationError(f"infeasible degrees: {n}*{d_v} != {m}*{d_c}")
    if d_v > m or d_c > n:
        raise GenerationError("requested degree exceeds the opposite side size")

    for attempt in range(max_attempts):
        rng = random.Random(seed + attempt)
        left_stubs = [u for u in range(n) for _ in range(d_v)]
        right_stubs = [w for w in range(m) for _ in range(d_c)]
        rng.shuffle(right_stubs)
        pairs = list(zip(left_stubs, right_stubs))
        if _repair_parallel(pairs, rng, max_swaps=50 * len(pairs)):
            g = BipartiteGraph(n, m, frozenset(pairs))
            if g.edge_count == n * d_v and profile(g).is_connected:
                return g
    raise GenerationError(
        f"no simple connected graph found in {max_attempts} attempts "
        f"(n={n}, m={m}, d_v={d_v}, d_c={d_c}, seed={seed})")


def _repair_parallel(pairs: list[tuple[int, int]], rng: random.Random,
                     max_swaps: int) -> bool:
    """Swap right endpoints until no stub pairing is duplicated."""
    from collections import Counter

    counts = Counter(pairs)

    def badness(c: int) -> int:
        return c * (c - 1) // 2

    for _ in range(max_swaps):
        dups = [i for i, p in enumerate(pairs) if counts[p] > 1]
        if not dups:
            return True
        i = rng.choice(dups)
        j = rng.randrange(len(pairs))
        if i == j:
            continue
        (ui, wi), (uj, wj) = pairs[i], pairs[j]
        old_i, old_j = pairs[i], pairs[j]
        new_i, new_j = (ui, wj), (uj, wi)
        affected = {old_i, old_j, new_i, new_j}
        before = sum(badness(counts[e]) for e in affected)
        counts[old_i] -= 1
        counts[old_j] -= 1
        counts[new_i] += 1
        counts[new_j] += 1
        if sum(badness(counts[e]) for e in affected) < before:
            pairs[i], pairs[j] = new_i, new_j
        else:
            counts[new_i] -= 1
            counts[new_j] -= 1
            counts[old_i] += 1
            counts[old_j] += 1
    return all(counts[p] == 1 for p in pairs)


def complete_bipartite(n: int, m: int) -> BipartiteGraph:
    """K_{n,m} with n left and m right nodes."""
    return BipartiteGraph(n, m, frozenset((u, w) for u in range(n) for w in range(m)))


def even_cycle(length: int) -> BipartiteGraph:
    """Single cycle of the given even length as a bipartite graph."""
    if length < 4 or length % 2:
        raise ValueError("cycle length must be an even integer >= 4")
    t = length // 2
    edges = {(i, i) for i in range(t)} | {(i, (i + 1) % t) for i in range(t)}
    return BipartiteGraph(t, t, frozenset(edges))


def tesseract() -> BipartiteGraph:
    """The 4-dimensional hypercube Q4, bipartitioned by bit parity."""
    evens = [v for v in range(16) if bin(v).count("1") % 2 == 0]
    odds = [v for v in range(16) if bin(v).count("1") % 2 == 1]
    e_idx = {v: i for i, v in enumerate(evens)}
    o_idx = {v: i for i, v in enumerate(odds)}
    edges = set()
    for v in evens:
        for bit in range(4):
            edges.add((e_idx[v], o_idx[v ^ (1 << bit)]))
    return BipartiteGraph(8, 8, frozenset(edges))
