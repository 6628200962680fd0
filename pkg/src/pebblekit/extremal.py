"""Minimum-degree extremal graphs and their certified unsolvable configurations.

Two families, each built from two nearly complete blocks tied together by a
pair of cross edges:

* ``bipartite_extremal(m)``: bipartition L, R of m vertices each, split into
  halves L1/L2 and R1/R2. The blocks L1 x R1 and L2 x R2 are complete
  bipartite minus the edges xy and wz; the cross edges wy and xz are added.
  Minimum degree floor(m/2), regular for even m.
* ``general_extremal(n)``: cliques on L (ceil(n/2) vertices) and R
  (floor(n/2) vertices) minus the edges xy (inside L) and wz (inside R),
  plus the cross edges wy and xz. Minimum degree floor(n/2) - 1, regular
  for even n.

Each family carries a companion configuration of size n(G): zeros on the
root and on w, x, y, z; piles of 3, 3, 2 on three vertices beside x; a
single pebble everywhere else. These configurations are not root-solvable,
which pins the families below Class 0; the exact solver confirms it at
small sizes.

Vertex numbering is canonical: blocks in order L1, L2, R1, R2 (or L, R),
ascending inside each block, with x, y, w, z the lowest indices of their
blocks. That keeps every emitted witness and file reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Mapping, Sequence

from .graphs import Graph
from .pebbling import Configuration

__all__ = [
    "LabeledGraph",
    "bipartite_extremal",
    "bipartite_extremal_config",
    "general_extremal",
    "general_extremal_config",
    "write_roles",
    "read_roles",
]


@dataclass(frozen=True)
class LabeledGraph:
    """A graph plus a map from role names to vertices or vertex sets."""

    graph: Graph
    roles: Mapping[str, int | frozenset[int]]

    def role_vertex(self, name: str) -> int:
        v = self.roles[name]
        if not isinstance(v, int):
            raise TypeError(f"role {name!r} is a set, not a single vertex")
        return v

    def role_set(self, name: str) -> frozenset[int]:
        s = self.roles[name]
        if isinstance(s, int):
            raise TypeError(f"role {name!r} is a single vertex, not a set")
        return s


def bipartite_extremal(m: int) -> LabeledGraph:
    """Bipartite graph with parts of size m and minimum degree floor(m/2)."""
    if m < 2:
        raise ValueError(f"bipartite_extremal requires m >= 2, got {m}")
    h = (m + 1) // 2  # |L1| = |R1| = ceil(m/2)
    l1 = range(0, h)
    l2 = range(h, m)
    r1 = range(m, m + h)
    r2 = range(m + h, 2 * m)
    x, w, y, z = 0, h, m, m + h
    edges = [(u, v) for u in l1 for v in r1 if (u, v) != (x, y)]
    edges += [(u, v) for u in l2 for v in r2 if (u, v) != (w, z)]
    edges += [(w, y), (x, z)]
    roles = {
        "L": frozenset(range(0, m)),
        "R": frozenset(range(m, 2 * m)),
        "L1": frozenset(l1),
        "L2": frozenset(l2),
        "R1": frozenset(r1),
        "R2": frozenset(r2),
        "x": x,
        "y": y,
        "w": w,
        "z": z,
    }
    return LabeledGraph(Graph(2 * m, edges), roles)


def general_extremal(n: int) -> LabeledGraph:
    """Graph on n vertices with minimum degree floor(n/2) - 1."""
    if n < 4:
        raise ValueError(f"general_extremal requires n >= 4, got {n}")
    half = (n + 1) // 2  # |L| = ceil(n/2)
    left = range(0, half)
    right = range(half, n)
    x, y = 0, 1
    w, z = half, half + 1
    edges = [
        (u, v) for u in left for v in left if u < v and (u, v) != (x, y)
    ]
    edges += [
        (u, v) for u in right for v in right if u < v and (u, v) != (w, z)
    ]
    edges += [(w, y), (x, z)]
    roles = {
        "L": frozenset(left),
        "R": frozenset(right),
        "x": x,
        "y": y,
        "w": w,
        "z": z,
    }
    return LabeledGraph(Graph(n, edges), roles)


def _pile_config(
    n: int,
    zero_vertices: Sequence[int],
    piles: Sequence[int],
) -> Configuration:
    """Ones everywhere except zeros on `zero_vertices` and 3, 3, 2 on `piles`."""
    counts = [1] * n
    for v in zero_vertices:
        counts[v] = 0
    a, b, c = piles
    counts[a] = 3
    counts[b] = 3
    counts[c] = 2
    return Configuration(counts)


def bipartite_extremal_config(
    m: int,
    *,
    piles: Sequence[int] | None = None,
    root: int | None = None,
) -> tuple[Configuration, int]:
    """Size-2m configuration that cannot reach the chosen root on
    bipartite_extremal(m).

    piles: three distinct vertices of L1 - {x} carrying 3, 3, 2 pebbles
    (lowest indices by default). root: a vertex of L2 - {w} (lowest by
    default). Any admissible choice yields an unsolvable configuration; the
    defaults make the output canonical.
    """
    if m < 7:
        raise ValueError(
            f"configuration requires m >= 7 (three pile vertices in L1 - x), got {m}"
        )
    lg = bipartite_extremal(m)
    x = lg.role_vertex("x")
    w = lg.role_vertex("w")
    y = lg.role_vertex("y")
    z = lg.role_vertex("z")
    pool = sorted(lg.role_set("L1") - {x})
    root_pool = sorted(lg.role_set("L2") - {w})
    if piles is None:
        piles = pool[:3]
    if root is None:
        root = root_pool[0]
    _validate_choice(piles, pool, root, root_pool)
    cfg = _pile_config(2 * m, (root, w, x, y, z), piles)
    assert cfg.size == 2 * m
    return cfg, root


def general_extremal_config(
    n: int,
    *,
    piles: Sequence[int] | None = None,
    root: int | None = None,
) -> tuple[Configuration, int]:
    """Size-n configuration that cannot reach the chosen root on
    general_extremal(n).

    piles: three distinct vertices of L - {x, y} carrying 3, 3, 2 pebbles
    (lowest indices by default). root: a vertex of R - {w, z} (lowest by
    default).
    """
    if n < 9:
        raise ValueError(
            f"configuration requires n >= 9 (three pile vertices in L - x - y), got {n}"
        )
    lg = general_extremal(n)
    x = lg.role_vertex("x")
    y = lg.role_vertex("y")
    w = lg.role_vertex("w")
    z = lg.role_vertex("z")
    pool = sorted(lg.role_set("L") - {x, y})
    root_pool = sorted(lg.role_set("R") - {w, z})
    if piles is None:
        piles = pool[:3]
    if root is None:
        root = root_pool[0]
    _validate_choice(piles, pool, root, root_pool)
    cfg = _pile_config(n, (root, w, x, y, z), piles)
    assert cfg.size == n
    return cfg, root


def _validate_choice(
    piles: Sequence[int], pool: Sequence[int], root: int, root_pool: Sequence[int]
) -> None:
    piles = list(piles)
    if len(piles) != 3 or len(set(piles)) != 3:
        raise ValueError(f"need three distinct pile vertices, got {piles}")
    bad = [v for v in piles if v not in pool]
    if bad:
        raise ValueError(f"pile vertices {bad} outside the admissible set {pool}")
    if root not in root_pool:
        raise ValueError(f"root {root} outside the admissible set {root_pool}")


# -- role-label sidecar format ---------------------------------------------------
#
# One "role vertex" pair per line; set-valued roles get one line per member.
# Lines are sorted by (role, vertex), so output is canonical.


def write_roles(roles: Mapping[str, int | frozenset[int]], dest: str | IO[str]) -> None:
    lines = []
    for name in sorted(roles):
        val = roles[name]
        if isinstance(val, int):
            lines.append(f"{name} {val}")
        else:
            lines.extend(f"{name} {v}" for v in sorted(val))
    data = "\n".join(lines) + "\n"
    if hasattr(dest, "write"):
        dest.write(data)
    else:
        with open(dest, "w", newline="\n") as fh:
            fh.write(data)


def read_roles(src: str | IO[str]) -> dict[str, tuple[int, ...]]:
    """Parse a role sidecar; every role maps to a tuple of vertices."""
    if hasattr(src, "read"):
        text = src.read()
    else:
        with open(src) as fh:
            text = fh.read()
    out: dict[str, list[int]] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, v = line.split()
        out.setdefault(name, []).append(int(v))
    return {name: tuple(vs) for name, vs in out.items()}
