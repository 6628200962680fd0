"""Greedy star partitions and the center-accumulation solvability test."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .graphs import Graph
from .pebbling import _counts_of

__all__ = [
    "Part",
    "StarPartition",
    "build_star_partition",
    "verify_star_partition",
    "star_sufficient_solvable",
]


class Part(NamedTuple):
    center: int
    members: frozenset[int]


@dataclass(frozen=True)
class StarPartition:
    """Disjoint star-shaped parts plus a leftover set.

    Every part contains its center and the center's whole neighborhood as of
    selection time, and every leftover vertex has a neighbor inside some
    part.
    """

    parts: tuple[Part, ...]
    leftover: frozenset[int]

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    def centers(self) -> tuple[int, ...]:
        return tuple(p.center for p in self.parts)


def build_star_partition(g: Graph) -> StarPartition:
    """Greedy partition: repeatedly take the lowest-index vertex whose whole
    neighborhood is still unassigned and make it a part together with that
    neighborhood; stop when no such vertex remains.

    Each part then has at least min_degree + 1 members, so the number of
    parts is at most n / (min_degree + 1), and every leftover vertex has an
    assigned neighbor (that is what ended the loop). Deterministic.
    """
    if not g.is_connected():
        raise ValueError("star partition requires a connected graph")
    unassigned = set(range(g.n))
    parts: list[Part] = []
    while True:
        pick = next(
            (u for u in sorted(unassigned) if g.neighbor_set(u) <= unassigned),
            None,
        )
        if pick is None:
            break
        members = frozenset(g.neighbor_set(pick) | {pick})
        parts.append(Part(pick, members))
        unassigned -= members
    return StarPartition(tuple(parts), frozenset(unassigned))


def verify_star_partition(g: Graph, p: StarPartition, q: int) -> bool:
    """Check that p is a valid partition of V(g) whose parts each contain a
    star on at least q vertices centered at the designated center, and whose
    leftover vertices all have assigned neighbors."""
    seen: set[int] = set()
    for center, members in p.parts:
        if not all(0 <= v < g.n for v in members):
            return False
        if center not in members:
            return False
        if members & seen:
            return False
        seen |= members
        star_size = 1 + len(g.neighbor_set(center) & members)
        if star_size < q:
            return False
    if seen & p.leftover:
        return False
    if seen | p.leftover != set(range(g.n)):
        return False
    for v in p.leftover:
        if not (g.neighbor_set(v) & seen):
            return False
    return True


def _centers_within_two(g: Graph, p: StarPartition) -> bool:
    """Every vertex within distance 2 of some center?"""
    dist = [-1] * g.n
    q = deque()
    for center in p.centers():
        dist[center] = 0
        q.append(center)
    while q:
        u = q.popleft()
        if dist[u] == 2:
            continue
        for v in g.neighbors(u):
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                q.append(v)
    return all(d >= 0 for d in dist)


def star_sufficient_solvable(g: Graph, p: StarPartition, c) -> bool:
    """One-sided solvability test: can four pebbles be gathered on every
    center?

    Each member adjacent to its center can forward floor(count/2) pebbles to
    it; with the center's own pebbles, four per center reaches any vertex
    within distance two of a center, and a valid partition puts every vertex
    that close. True therefore implies the configuration is solvable; False
    decides nothing.

    Raises ValueError if the partition does not verify against the graph.
    """
    if not verify_star_partition(g, p, 1) or not _centers_within_two(g, p):
        raise ValueError("partition does not verify against the graph")
    counts = _counts_of(c, g.n)
    return _sufficient_on_counts(g, p, counts)


def _sufficient_on_counts(g: Graph, p: StarPartition, counts) -> bool:
    """Accumulation check only; the caller vouches for the partition."""
    for center, members in p.parts:
        acc = counts[center]
        for v in g.neighbor_set(center) & members:
            acc += counts[v] // 2
        if acc < 4:
            return False
    return True
