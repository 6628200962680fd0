"""Uniform random configurations and Monte Carlo solvability estimation.

Probability model: all C(t+n-1, t) pebble count vectors are equally likely
(the uniform multiset model). The sampler and the closed-form occupancy
probabilities below share this one model, so they can be cross-checked
exactly.

Estimates are reproducible by construction: trial i of a run draws from a
counter-based generator keyed by (seed, n, t, i), so results do not depend
on execution order or worker count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Callable, Iterable, Mapping, Sequence

import numpy as np

from .extremal import general_extremal
from .graphs import Graph, complete, random_connected_min_degree
from .pebbling import (
    DEFAULT_STATE_BUDGET,
    BudgetExceeded,
    Configuration,
    greedy_tree_solvable,
    is_solvable,
)
from .stars import StarPartition, _sufficient_on_counts, build_star_partition

__all__ = [
    "SOLVERS",
    "TrialPlan",
    "CurveRow",
    "ThresholdCurve",
    "OccupancyStats",
    "multiset_count",
    "sample_uniform_config",
    "exact_count_prob",
    "exact_double_prob",
    "exact_pair_double_prob",
    "occupancy_stats",
    "wilson_interval",
    "trial_rng",
    "estimate_solvability_probability",
    "threshold_sweep",
]

SOLVERS = ("exact", "star", "greedy")

Z95 = 1.959963984540054  # two-sided 95% normal quantile


# -- counting and exact occupancy probabilities -----------------------------------


def multiset_count(m: int, k: int) -> int:
    """Number of k-multisets over m symbols: C(k+m-1, k).

    Follows the occupancy conventions: zero for k < 0, and for m = 0 there
    is exactly one empty multiset.
    """
    if k < 0:
        return 0
    if m == 0:
        return 1 if k == 0 else 0
    return math.comb(k + m - 1, k)


def exact_count_prob(n: int, t: int, k: int) -> Fraction:
    """Probability a fixed vertex holds exactly k of t uniform pebbles."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if t < 0:
        raise ValueError(f"need t >= 0, got {t}")
    if k < 0 or k > t:
        return Fraction(0)
    return Fraction(multiset_count(n - 1, t - k), multiset_count(n, t))


def exact_double_prob(n: int, t: int) -> Fraction:
    """Probability a fixed vertex holds exactly 2 pebbles.

    Equals C(t+n-4, t-2) / C(t+n-1, t) for n >= 2 (the remaining t-2
    pebbles land anywhere on the other n-1 vertices).
    """
    return exact_count_prob(n, t, 2)


def exact_pair_double_prob(n: int, t: int) -> Fraction:
    """Probability two fixed distinct vertices each hold exactly 2 pebbles.

    Equals C(t+n-7, t-4) / C(t+n-1, t) for n >= 3 (the remaining t-4
    pebbles land on the other n-2 vertices).
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if t < 0:
        raise ValueError(f"need t >= 0, got {t}")
    return Fraction(multiset_count(n - 2, t - 4), multiset_count(n, t))


@dataclass(frozen=True)
class OccupancyStats:
    """Exact occupancy figures for t uniform pebbles on n vertices."""

    n: int
    t: int
    double_prob: Fraction
    pair_double_prob: Fraction | None
    expected_doubles_per_part: tuple[Fraction, ...] | None


def occupancy_stats(
    n: int, t: int, partition: StarPartition | None = None
) -> OccupancyStats:
    double = exact_double_prob(n, t)
    pair = exact_pair_double_prob(n, t) if n >= 2 else None
    per_part = None
    if partition is not None:
        per_part = tuple(len(p.members) * double for p in partition.parts)
    return OccupancyStats(n, t, double, pair, per_part)


# -- sampling ---------------------------------------------------------------------


def sample_uniform_config(n: int, t: int, rng: np.random.Generator) -> Configuration:
    """Uniform draw over all C(t+n-1, t) count vectors.

    Stars and bars: choose n-1 bar positions among t+n-1 slots; the gap
    sizes are the counts.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if t < 0:
        raise ValueError(f"need t >= 0, got {t}")
    if n == 1:
        return Configuration((t,))
    bars = np.sort(rng.choice(t + n - 1, size=n - 1, replace=False))
    counts = np.empty(n, dtype=np.int64)
    counts[0] = bars[0]
    if n > 2:
        counts[1:-1] = np.diff(bars) - 1
    counts[-1] = (t + n - 2) - bars[-1]
    return Configuration(counts.tolist())


def trial_rng(seed: int, n: int, t: int, trial: int) -> np.random.Generator:
    """Independent counter-based stream for one trial of one (n, t) row."""
    ss = np.random.SeedSequence(entropy=int(seed), spawn_key=(int(n), int(t), int(trial)))
    return np.random.Generator(np.random.Philox(seed=ss))


# -- estimation -------------------------------------------------------------------


@dataclass(frozen=True)
class TrialPlan:
    """One Monte Carlo estimation job: a graph, a pebble count, and a solver."""

    graph: Graph
    family: str
    t: int
    trials: int
    seed: int
    solver: str = "exact"

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"need trials >= 1, got {self.trials}")
        if self.t < 0:
            raise ValueError(f"need t >= 0, got {self.t}")
        if self.solver not in SOLVERS:
            raise ValueError(f"unknown solver {self.solver!r}, pick from {SOLVERS}")


@dataclass(frozen=True)
class CurveRow:
    family: str
    n: int
    t: int
    trials: int
    successes: int
    unknowns: int
    est: float
    ci_lo: float
    ci_hi: float
    solver: str
    seed: int


CSV_HEADER = "family,n,t,trials,successes,unknowns,est,ci_lo,ci_hi,solver,seed"


@dataclass(frozen=True)
class ThresholdCurve:
    rows: tuple[CurveRow, ...]

    def to_csv(self) -> str:
        lines = [CSV_HEADER]
        for r in self.rows:
            lines.append(
                f"{r.family},{r.n},{r.t},{r.trials},{r.successes},{r.unknowns},"
                f"{r.est:.6g},{r.ci_lo:.6g},{r.ci_hi:.6g},{r.solver},{r.seed}"
            )
        return "\n".join(lines) + "\n"

    def write_csv(self, dest: str | IO[str]) -> None:
        data = self.to_csv()
        if hasattr(dest, "write"):
            dest.write(data)
        else:
            with open(dest, "w", newline="\n") as fh:
                fh.write(data)


def wilson_interval(successes: int, trials: int, z: float = Z95) -> tuple[float, float]:
    """Wilson score interval; well behaved near 0 and 1."""
    if trials < 1:
        raise ValueError("need at least one trial")
    phat = successes / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = (phat + z2 / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials + z2 / (4 * trials * trials)) / denom
    # clamp away floating-point residue so the interval always brackets phat
    lo = min(max(0.0, center - half), phat)
    hi = max(min(1.0, center + half), phat)
    return lo, hi


def _make_solver(plan: TrialPlan, max_states: int) -> Callable[[Configuration], bool]:
    g = plan.graph
    if plan.solver == "exact":
        return lambda c: is_solvable(g, c, max_states=max_states)
    if plan.solver == "star":
        part = build_star_partition(g)
        return lambda c: _sufficient_on_counts(g, part, c.counts)
    return lambda c: greedy_tree_solvable(g, c)


def estimate_solvability_probability(
    plan: TrialPlan, *, max_states: int = DEFAULT_STATE_BUDGET
) -> CurveRow:
    """Estimate the probability that t uniform pebbles form a solvable
    configuration.

    Trials that blow the solver budget count as "unknown": the point
    estimate treats them as failures, while ci_hi treats them as successes,
    so the reported interval brackets the truth either way.
    """
    g = plan.graph
    solver_fn = _make_solver(plan, max_states)
    successes = 0
    unknowns = 0
    for i in range(plan.trials):
        rng = trial_rng(plan.seed, g.n, plan.t, i)
        cfg = sample_uniform_config(g.n, plan.t, rng)
        try:
            ok = solver_fn(cfg)
        except BudgetExceeded:
            unknowns += 1
            continue
        if ok:
            successes += 1
    est = successes / plan.trials
    ci_lo = wilson_interval(successes, plan.trials)[0]
    ci_hi = wilson_interval(successes + unknowns, plan.trials)[1]
    return CurveRow(
        family=plan.family,
        n=g.n,
        t=plan.t,
        trials=plan.trials,
        successes=successes,
        unknowns=unknowns,
        est=est,
        ci_lo=ci_lo,
        ci_hi=ci_hi,
        solver=plan.solver,
        seed=plan.seed,
    )


def _family_graph(
    family: str, n: int, seed: int, delta: Callable[[int], int] | None
) -> Graph:
    if family == "complete":
        return complete(n)
    if family == "general-extremal":
        return general_extremal(n).graph
    if family == "random-mindeg":
        if delta is None:
            raise ValueError("random-mindeg needs a delta(n) function")
        ss = np.random.SeedSequence(entropy=int(seed), spawn_key=(int(n),))
        graph_seed = int(ss.generate_state(1)[0])
        return random_connected_min_degree(n, delta(n), graph_seed)
    raise ValueError(f"unknown family {family!r}")


def threshold_sweep(
    family: str,
    sizes: Iterable[int],
    t_grid: Mapping[int, Sequence[int]] | Callable[[int], Sequence[int]],
    trials: int,
    seed: int,
    *,
    solver: str = "exact",
    delta: Callable[[int], int] | None = None,
    max_states: int = DEFAULT_STATE_BUDGET,
) -> ThresholdCurve:
    """Estimate solvability probability over a grid of sizes and pebble
    counts; rows come out ordered by (n, t).

    family: "complete", "general-extremal", or "random-mindeg" (the latter
    needs delta, a function of n; its sample is seeded deterministically
    from (seed, n)). t_grid maps each n to its pebble counts, either as a
    mapping or a callable.
    """
    rows = []
    for n in sorted(set(int(s) for s in sizes)):
        g = _family_graph(family, n, seed, delta)
        ts = t_grid(n) if callable(t_grid) else t_grid[n]
        for t in sorted(set(int(t) for t in ts)):
            plan = TrialPlan(
                graph=g, family=family, t=t, trials=trials, seed=seed, solver=solver
            )
            rows.append(estimate_solvability_probability(plan, max_states=max_states))
    return ThresholdCurve(tuple(rows))
