"""Shared generators and oracles for the test suite."""

from __future__ import annotations

import random

from pebblekit import Configuration, Graph


def random_connected_graph(rng: random.Random, n_min: int = 2, n_max: int = 8) -> Graph:
    """Small random connected graph via rejection on edge probability 1/2."""
    n = rng.randint(n_min, n_max)
    all_edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    while True:
        g = Graph(n, [e for e in all_edges if rng.random() < 0.5])
        if g.is_connected():
            return g


def random_configuration(rng: random.Random, n: int, t_max: int = 8) -> Configuration:
    t = rng.randint(0, t_max)
    counts = [0] * n
    for _ in range(t):
        counts[rng.randrange(n)] += 1
    return Configuration(counts)


def floyd_warshall_diameter(g: Graph) -> int:
    """Independent all-pairs oracle for diameters (O(n^3), small graphs only)."""
    inf = float("inf")
    n = g.n
    dist = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        dist[u][v] = dist[v][u] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == inf:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    best = max(max(row) for row in dist)
    if best == inf:
        raise ValueError("disconnected")
    return int(best)
