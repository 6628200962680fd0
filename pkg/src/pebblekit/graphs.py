"""Undirected simple graphs with deterministic adjacency order.

Vertices are dense integer indices 0..n-1. Neighbor lists are kept sorted,
so every traversal in this package visits vertices in ascending index order
and downstream searches produce reproducible results.
"""

from __future__ import annotations

import math
import random
from collections import deque
from typing import IO, Iterable

__all__ = [
    "Graph",
    "RetryExhaustedError",
    "complete",
    "cycle",
    "path",
    "hypercube",
    "petersen",
    "complete_bipartite",
    "random_connected_min_degree",
    "read_edge_list",
    "write_edge_list",
]


class RetryExhaustedError(RuntimeError):
    """Rejection sampling hit its retry cap without producing a valid graph."""

    def __init__(self, message: str, attempts: int):
        super().__init__(message)
        self.attempts = attempts


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1.

    Out-of-range endpoints and self-loops are rejected at construction;
    duplicate edges collapse. Adjacency is symmetric by construction.
    """

    __slots__ = ("n", "_adj", "_adjsets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            sets[u].add(v)
            sets[v].add(u)
        self.n = n
        self._adj = tuple(tuple(sorted(s)) for s in sets)
        self._adjsets = tuple(frozenset(s) for s in sets)

    # -- accessors ----------------------------------------------------------

    @property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex neighbor tuples, ascending."""
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._adjsets[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in sorted order."""
        return [(u, v) for u in range(self.n) for v in self._adj[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"

    # -- metrics ------------------------------------------------------------

    def bfs_distances(self, source: int) -> list[int]:
        """Distances from source; -1 marks unreachable vertices."""
        dist = [-1] * self.n
        dist[source] = 0
        q = deque([source])
        while q:
            u = q.popleft()
            du = dist[u] + 1
            for v in self._adj[u]:
                if dist[v] < 0:
                    dist[v] = du
                    q.append(v)
        return dist

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return all(d >= 0 for d in self.bfs_distances(0))

    def distance(self, u: int, v: int) -> int:
        """Shortest-path edge count between u and v."""
        if u == v:
            return 0
        d = self.bfs_distances(u)[v]
        if d < 0:
            raise ValueError(f"vertices {u} and {v} are in different components")
        return d

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("empty graph has no degrees")
        return min(len(a) for a in self._adj)

    def diameter(self) -> int:
        """Largest pairwise distance, by repeated single-source BFS."""
        best = 0
        for v in range(self.n):
            dist = self.bfs_distances(v)
            far = max(dist)
            if min(dist) < 0:
                raise ValueError("diameter is undefined for a disconnected graph")
            best = max(best, far)
        return best


# -- standard generators ------------------------------------------------------


def complete(n: int) -> Graph:
    """Complete graph K_n, vertices 0..n-1."""
    if n < 1:
        raise ValueError(f"complete(n) requires n >= 1, got {n}")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    """Cycle C_n: vertex i adjacent to (i+1) mod n."""
    if n < 3:
        raise ValueError(f"cycle(n) requires n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path P_n: vertex i adjacent to i+1."""
    if n < 1:
        raise ValueError(f"path(n) requires n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def hypercube(d: int) -> Graph:
    """d-cube: vertices are the bitmasks 0..2^d - 1, edges flip one bit."""
    if d < 0:
        raise ValueError(f"hypercube(d) requires d >= 0, got {d}")
    n = 1 << d
    edges = [(v, v | (1 << b)) for v in range(n) for b in range(d) if not v & (1 << b)]
    return Graph(n, edges)


def petersen() -> Graph:
    """Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((i, i + 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
    return Graph(10, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    """K_{a,b}: part A is 0..a-1, part B is a..a+b-1."""
    if a < 1 or b < 1:
        raise ValueError(f"complete_bipartite requires a, b >= 1, got ({a}, {b})")
    return Graph(a + b, [(u, v) for u in range(a) for v in range(a, a + b)])


def random_connected_min_degree(
    n: int, delta: int, seed: int, *, max_attempts: int = 10_000
) -> Graph:
    """Rejection-sample a connected graph with minimum degree >= delta.

    Binomial edge model with p = min(0.95, (delta + sqrt(n)) / n); samples
    are rejected until both the degree and connectivity constraints hold.
    Deterministic for a fixed seed.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not 0 <= delta <= n - 1:
        raise ValueError(f"need 0 <= delta <= n-1, got delta={delta}, n={n}")
    rng = random.Random(seed)
    p = min(0.95, (delta + math.sqrt(n)) / n)
    for _ in range(max_attempts):
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        g = Graph(n, edges)
        if g.min_degree() >= delta and g.is_connected():
            return g
    raise RetryExhaustedError(
        f"no connected graph with min degree >= {delta} on {n} vertices "
        f"after {max_attempts} attempts (seed={seed})",
        max_attempts,
    )


# -- edge-list text format -----------------------------------------------------
#
# Line 1: "n m"; then m lines "u v" (0-indexed). Lines starting with '#' are
# comments. The writer emits edges in canonical sorted order with LF endings,
# so write -> read -> write is bit-stable.


def write_edge_list(g: Graph, dest: str | IO[str]) -> None:
    lines = [f"{g.n} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    data = "\n".join(lines) + "\n"
    if hasattr(dest, "write"):
        dest.write(data)
    else:
        with open(dest, "w", newline="\n") as fh:
            fh.write(data)


def read_edge_list(src: str | IO[str]) -> Graph:
    if hasattr(src, "read"):
        text = src.read()
    else:
        with open(src) as fh:
            text = fh.read()
    rows = [
        line.strip()
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f"expected header 'n m', got {rows[0]!r}")
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"header promises {m} edges, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {row!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)
