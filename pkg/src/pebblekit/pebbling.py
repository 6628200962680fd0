"""Pebbling moves and exact solvability search.

A configuration assigns nonnegative pebble counts to the vertices of a graph.
A move removes two pebbles from a vertex and places one on a neighbor, so
every move costs one pebble overall. A root is reachable ("r-solvable") if
some move sequence lands a pebble on it.

The exact decision procedure is a depth-first search over count vectors with
a transposition table of failed states. Two certified shortcuts keep the
search small:

* a pile of at least 2^d pebbles at distance d always delivers a pebble to
  the root by repeated halving along a shortest path (instant accept);
* a move halves the weight a pebble can deliver, so once
  sum_v counts[v] / 2^dist(v, root) drops below 1 no sequence can reach the
  root (instant reject, computed in exact integer arithmetic).

Budgets are explicit. Exceeding one raises BudgetExceeded instead of ever
returning a wrong boolean.
"""

from __future__ import annotations

import sys
from collections import deque
from typing import IO, Iterable, NamedTuple, Sequence

from .graphs import Graph

__all__ = [
    "DEFAULT_STATE_BUDGET",
    "DEFAULT_CONFIG_BUDGET",
    "DEFAULT_BRUTE_BUDGET",
    "BudgetExceeded",
    "Move",
    "Configuration",
    "apply_move",
    "replay_witness",
    "is_r_solvable",
    "brute_force_r_solvable",
    "is_solvable",
    "greedy_tree_solvable",
    "find_unsolvable",
    "pebbling_number",
    "is_class0",
    "read_configuration",
    "write_configuration",
    "format_witness",
    "parse_witness",
]

DEFAULT_STATE_BUDGET = 10_000_000  # search states per solvability query
DEFAULT_CONFIG_BUDGET = 100_000_000  # enumerated configurations per level
DEFAULT_BRUTE_BUDGET = 2_000_000  # states for the brute-force oracle


class BudgetExceeded(RuntimeError):
    """A search exceeded its explicit state or configuration budget."""

    def __init__(self, message: str, *, kind: str, limit: int):
        super().__init__(message)
        self.kind = kind  # "states" or "configs"
        self.limit = limit


class Move(NamedTuple):
    src: int
    dst: int


class Configuration:
    """Immutable pebble counts indexed by vertex; total size is cached."""

    __slots__ = ("counts", "size")

    def __init__(self, counts: Iterable[int]):
        tup = tuple(int(c) for c in counts)
        for v, c in enumerate(tup):
            if c < 0:
                raise ValueError(f"negative pebble count {c} at vertex {v}")
        self.counts = tup
        self.size = sum(tup)

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, v: int) -> int:
        return self.counts[v]

    def __iter__(self):
        return iter(self.counts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        return self.counts == other.counts

    def __hash__(self) -> int:
        return hash(self.counts)

    def __repr__(self) -> str:
        return f"Configuration({list(self.counts)})"

    def with_pebble(self, v: int, k: int = 1) -> "Configuration":
        """Copy with k extra pebbles on vertex v."""
        counts = list(self.counts)
        counts[v] += k
        return Configuration(counts)


def _counts_of(c, n: int) -> list[int]:
    """Normalize a Configuration or raw sequence to a validated count list."""
    if isinstance(c, Configuration):
        counts = list(c.counts)
    else:
        counts = [int(x) for x in c]
        if any(x < 0 for x in counts):
            raise ValueError("negative pebble count")
    if len(counts) != n:
        raise ValueError(
            f"configuration length {len(counts)} does not match vertex count {n}"
        )
    return counts


def _check_vertex(g: Graph, v: int, what: str = "vertex") -> None:
    if not 0 <= v < g.n:
        raise ValueError(f"{what} {v} out of range for n={g.n}")


# -- moves ---------------------------------------------------------------------


def apply_move(g: Graph, c, move: Move) -> Configuration:
    """One pebbling step: two pebbles off move.src, one onto move.dst."""
    counts = _counts_of(c, g.n)
    src, dst = move
    _check_vertex(g, src, "move source")
    _check_vertex(g, dst, "move target")
    if not g.has_edge(src, dst):
        raise ValueError(f"({src}, {dst}) is not an edge")
    if counts[src] < 2:
        raise ValueError(f"vertex {src} holds {counts[src]} pebbles, need 2")
    counts[src] -= 2
    counts[dst] += 1
    return Configuration(counts)


def replay_witness(g: Graph, c, moves: Sequence[Move], root: int) -> bool:
    """Replay a move sequence; True iff every step is legal and the root ends
    up holding a pebble."""
    counts = _counts_of(c, g.n)
    for src, dst in moves:
        if not (0 <= src < g.n and 0 <= dst < g.n):
            return False
        if not g.has_edge(src, dst) or counts[src] < 2:
            return False
        counts[src] -= 2
        counts[dst] += 1
    return counts[root] >= 1


# -- exact solver ----------------------------------------------------------------


class _RootSolver:
    """Depth-first solvability search for one (graph, root) pair.

    The transposition table records count vectors from which the root is
    certainly unreachable. Failure is a property of the state alone, so one
    solver instance may serve any number of queries against the same root
    (level scans reuse this heavily). Budget counts accumulate across queries
    on the same instance.
    """

    def __init__(self, g: Graph, root: int, *, max_states: int = DEFAULT_STATE_BUDGET):
        self.g = g
        self.root = root
        self.max_states = max_states
        self.dist = g.bfs_distances(root)
        diam = max(self.dist)
        self.threshold = 1 << diam
        # weight[v] * counts[v] summed and compared against 2^diam gives the
        # reachability potential in exact integer arithmetic; unreachable
        # vertices weigh nothing.
        self.weight = [(1 << (diam - d)) if d >= 0 else 0 for d in self.dist]
        self.failed: set = set()
        self.states = 0
        self._small_keys = True
        self._targets_cache: dict[int, tuple[int, ...]] = {}
        self._steps_down: dict[int, int] = {}

    def _targets(self, src: int) -> tuple[int, ...]:
        """Neighbors of src ordered by (distance to root, index)."""
        cached = self._targets_cache.get(src)
        if cached is None:
            cached = tuple(sorted(self.g.neighbors(src), key=lambda u: (self.dist[u], u)))
            self._targets_cache[src] = cached
        return cached

    def _step_down(self, v: int) -> int:
        """Lowest-index neighbor one step closer to the root."""
        nxt = self._steps_down.get(v)
        if nxt is None:
            want = self.dist[v] - 1
            nxt = next(u for u in self.g.neighbors(v) if self.dist[u] == want)
            self._steps_down[v] = nxt
        return nxt

    def _pump_witness(self, v: int) -> list[Move]:
        """Halve a pile of >= 2^dist(v) down a shortest path from v to the root."""
        path = [v]
        while path[-1] != self.root:
            path.append(self._step_down(path[-1]))
        moves: list[Move] = []
        k = len(path) - 1
        for i in range(k):
            moves.extend([Move(path[i], path[i + 1])] * (1 << (k - 1 - i)))
        return moves

    def solve(self, counts: Sequence[int]) -> tuple[bool, list[Move] | None]:
        counts = list(counts)
        if counts[self.root] >= 1:
            return True, []
        for u in self.g.neighbors(self.root):
            if counts[u] >= 2:
                return True, [Move(u, self.root)]
        total = sum(counts)
        self._small_keys = total <= 255  # bytes() rejects larger entries
        if total + 50 > sys.getrecursionlimit():
            sys.setrecursionlimit(total + 1000)
        witness = self._dfs(counts)
        if witness is None:
            return False, None
        return True, witness

    def _dfs(self, counts: list[int]) -> list[Move] | None:
        """Witness from a state with no pebble on the root, or None."""
        potential = 0
        weight = self.weight
        threshold = self.threshold
        for v, cv in enumerate(counts):
            if cv:
                mass = cv * weight[v]
                potential += mass
                if mass >= threshold:
                    return self._pump_witness(v)
        if potential < threshold:
            return None
        key = bytes(counts) if self._small_keys else tuple(counts)
        if key in self.failed:
            return None
        self.states += 1
        if self.states > self.max_states:
            raise BudgetExceeded(
                f"state budget {self.max_states} exceeded solving for root {self.root}",
                kind="states",
                limit=self.max_states,
            )
        dist = self.dist
        sources = [v for v, cv in enumerate(counts) if cv >= 2 and dist[v] > 0]
        # Far sources first, big piles first: collapses periphery piles toward
        # the root early, which finds witnesses fast on solvable instances.
        sources.sort(key=lambda v: (-dist[v], -counts[v], v))
        for src in sources:
            for dst in self._targets(src):
                counts[src] -= 2
                counts[dst] += 1
                sub = [] if dst == self.root else self._dfs(counts)
                counts[src] += 2
                counts[dst] -= 1
                if sub is not None:
                    return [Move(src, dst), *sub]
        self.failed.add(key)
        return None


def is_r_solvable(
    g: Graph, c, root: int, *, max_states: int = DEFAULT_STATE_BUDGET
) -> tuple[bool, list[Move] | None]:
    """Decide whether a pebble can be moved onto root.

    Returns (True, witness) with a replayable move list, or (False, None).
    Raises BudgetExceeded when the state budget runs out.
    """
    counts = _counts_of(c, g.n)
    _check_vertex(g, root, "root")
    return _RootSolver(g, root, max_states=max_states).solve(counts)


def brute_force_r_solvable(
    g: Graph, c, root: int, *, max_states: int = DEFAULT_BRUTE_BUDGET
) -> bool:
    """Independent oracle: plain breadth-first exploration of every reachable
    configuration, no pruning of any kind. Intended for small instances
    (roughly n <= 12, |c| <= 12); raises BudgetExceeded rather than guessing.
    """
    counts = _counts_of(c, g.n)
    _check_vertex(g, root, "root")
    start = tuple(counts)
    if start[root] >= 1:
        return True
    seen = {start}
    queue = deque([start])
    adj = g.adj
    while queue:
        cur = queue.popleft()
        for u, cu in enumerate(cur):
            if cu >= 2:
                for v in adj[u]:
                    if v == root:
                        return True
                    nxt = list(cur)
                    nxt[u] -= 2
                    nxt[v] += 1
                    key = tuple(nxt)
                    if key not in seen:
                        seen.add(key)
                        if len(seen) > max_states:
                            raise BudgetExceeded(
                                f"brute-force state budget {max_states} exceeded",
                                kind="states",
                                limit=max_states,
                            )
                        queue.append(key)
    return False


def is_solvable(g: Graph, c, *, max_states: int = DEFAULT_STATE_BUDGET) -> bool:
    """True iff the configuration is r-solvable for every root.

    Roots already holding a pebble are trivially fine; a root with a 2-pile
    neighbor is reachable in one move. Only the remaining roots go to the
    full search.
    """
    counts = _counts_of(c, g.n)
    zeros = [v for v, cv in enumerate(counts) if cv == 0]
    if not zeros:
        return True
    hot = [v for v, cv in enumerate(counts) if cv >= 2]
    if not hot:
        return False  # no legal move exists anywhere, empty roots stay empty
    for r in zeros:
        adjr = g.neighbor_set(r)
        if any(h in adjr for h in hot):
            continue
        ok, _ = is_r_solvable(g, counts, r, max_states=max_states)
        if not ok:
            return False
    return True


def greedy_tree_solvable(g: Graph, c) -> bool:
    """Cheap one-sided check: push floor(count/2) down BFS trees toward each
    root. True implies solvable (the pushes are legal moves); False decides
    nothing.
    """
    counts = _counts_of(c, g.n)
    for r, cr in enumerate(counts):
        if cr >= 1:
            continue
        dist = g.bfs_distances(r)
        work = list(counts)
        order = sorted(
            (v for v in range(g.n) if v != r and dist[v] > 0),
            key=lambda v: (-dist[v], v),
        )
        for v in order:
            k = work[v] // 2
            if k:
                want = dist[v] - 1
                parent = next(u for u in g.neighbors(v) if dist[u] == want)
                work[parent] += k
        if work[r] == 0:
            return False
    return True


# -- level scans -----------------------------------------------------------------


def _capped_vector_count(caps: Sequence[int], total: int) -> int:
    """Number of count vectors with sum `total` and counts[i] <= caps[i]."""
    ways = [0] * (total + 1)
    ways[0] = 1
    for cap in caps:
        prefix = [0] * (total + 2)
        for j in range(total + 1):
            prefix[j + 1] = prefix[j] + ways[j]
        for j in range(total, -1, -1):
            lo = max(0, j - cap)
            ways[j] = prefix[j + 1] - prefix[lo]
    return ways[total]


def _iter_capped_lex(caps: Sequence[int], total: int):
    """Yield count vectors with the given sum and per-vertex caps in ascending
    lexicographic order. The same list object is yielded each time; copy it
    before keeping it."""
    n = len(caps)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + caps[i]
    if total > suffix[0]:
        return
    counts = [0] * n

    def rec(i: int, rem: int):
        if i == n - 1:
            counts[i] = rem
            yield counts
            counts[i] = 0
            return
        lo = max(0, rem - suffix[i + 1])
        hi = min(caps[i], rem)
        for v in range(lo, hi + 1):
            counts[i] = v
            yield from rec(i + 1, rem - v)
        counts[i] = 0

    yield from rec(0, total)


def find_unsolvable(
    g: Graph,
    t: int,
    *,
    roots: Sequence[int] | None = None,
    max_configs: int = DEFAULT_CONFIG_BUDGET,
    max_states: int = DEFAULT_STATE_BUDGET,
) -> tuple[Configuration, int] | None:
    """First unsolvable (configuration, root) among size-t configurations, or
    None when every configuration of size t is solvable.

    Scans roots in ascending order and, per root, count vectors in ascending
    lexicographic order. Configurations with a pebble on the root, or with
    any pile of at least 2^dist(v, root) pebbles, are solvable outright and
    are skipped; skipping them cannot change the first hit.

    The state budget applies per root across the whole level (the solver's
    transposition table is shared within a root scan).
    """
    if t < 0:
        raise ValueError(f"level size must be nonnegative, got {t}")
    if not g.is_connected():
        raise ValueError("find_unsolvable requires a connected graph")
    root_list = list(range(g.n)) if roots is None else [int(r) for r in roots]
    for r in root_list:
        _check_vertex(g, r, "root")

    plans = []
    total = 0
    for r in root_list:
        dist = g.bfs_distances(r)
        caps = [(1 << d) - 1 for d in dist]
        total += _capped_vector_count(caps, t)
        plans.append((r, caps))
    if total > max_configs:
        raise BudgetExceeded(
            f"level {t} would enumerate {total} candidate configurations "
            f"(budget {max_configs})",
            kind="configs",
            limit=max_configs,
        )

    for r, caps in plans:
        solver = _RootSolver(g, r, max_states=max_states)
        for counts in _iter_capped_lex(caps, t):
            ok, _ = solver.solve(counts)
            if not ok:
                return Configuration(counts), r
    return None


def pebbling_number(
    g: Graph,
    *,
    symmetric: bool = False,
    max_configs: int = DEFAULT_CONFIG_BUDGET,
    max_states: int = DEFAULT_STATE_BUDGET,
) -> int:
    """Least t such that every configuration of t pebbles is solvable.

    Scans levels upward from max(n, 2^diameter): n-1 ones avoiding a root is
    unsolvable, as is a single pile of 2^D - 1 at distance D, so both are
    true lower bounds; and solvability survives adding pebbles, so clean
    levels are upward-closed and the first clean level is the answer.

    symmetric=True checks root 0 only. That is sound exactly when the graph
    is vertex-transitive; the caller vouches for it.
    """
    if not g.is_connected():
        raise ValueError("pebbling number requires a connected graph")
    roots = [0] if symmetric else None
    t = max(g.n, 1 << g.diameter())
    while True:
        hit = find_unsolvable(
            g, t, roots=roots, max_configs=max_configs, max_states=max_states
        )
        if hit is None:
            return t
        t += 1


def is_class0(
    g: Graph,
    *,
    symmetric: bool = False,
    max_configs: int = DEFAULT_CONFIG_BUDGET,
    max_states: int = DEFAULT_STATE_BUDGET,
) -> bool:
    """True iff the pebbling number equals the vertex count.

    2^diameter > n forces a bigger pebbling number immediately; otherwise the
    answer is exactly "is level n clean".
    """
    if not g.is_connected():
        raise ValueError("Class 0 status requires a connected graph")
    if (1 << g.diameter()) > g.n:
        return False
    roots = [0] if symmetric else None
    hit = find_unsolvable(
        g, g.n, roots=roots, max_configs=max_configs, max_states=max_states
    )
    return hit is None


# -- configuration / witness text formats ------------------------------------------
#
# Configuration: line 1 "n t"; line 2: n whitespace-separated counts.
# Witness: one move per line, "u -> v".


def write_configuration(c: Configuration, dest: str | IO[str]) -> None:
    data = f"{len(c)} {c.size}\n{' '.join(str(x) for x in c.counts)}\n"
    if hasattr(dest, "write"):
        dest.write(data)
    else:
        with open(dest, "w", newline="\n") as fh:
            fh.write(data)


def read_configuration(src: str | IO[str]) -> Configuration:
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
    if len(rows) < 2:
        raise ValueError("configuration input needs a header line and a counts line")
    n, t = (int(x) for x in rows[0].split())
    counts = [int(x) for x in rows[1].split()]
    if len(counts) != n:
        raise ValueError(f"header promises {n} counts, found {len(counts)}")
    cfg = Configuration(counts)
    if cfg.size != t:
        raise ValueError(f"header promises size {t}, counts sum to {cfg.size}")
    return cfg


def format_witness(moves: Sequence[Move]) -> str:
    return "".join(f"{src} -> {dst}\n" for src, dst in moves)


def parse_witness(text: str) -> list[Move]:
    moves = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        src, arrow, dst = line.split()
        if arrow != "->":
            raise ValueError(f"bad witness line {line!r}")
        moves.append(Move(int(src), int(dst)))
    return moves
