"""Reproduction checks for the published results this kit is built around.

Each check recomputes one documented claim (Class 0 corpus, extremal lower
bounds, occupancy formulas, correlation inequality, partition guarantees,
threshold transitions, solver cross-validation) and reports a PASS/FAIL row.
``run_checks("full")`` runs everything at full scale; ``"quick"`` shrinks
sample counts to finish in a few minutes.

All randomness is seeded with fixed constants, so both levels are
deterministic end to end.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Iterable

from .extremal import (
    bipartite_extremal,
    bipartite_extremal_config,
    general_extremal,
    general_extremal_config,
)
from .graphs import Graph, complete, cycle, hypercube, petersen, random_connected_min_degree
from .pebbling import (
    Configuration,
    brute_force_r_solvable,
    find_unsolvable,
    is_class0,
    is_r_solvable,
    is_solvable,
    pebbling_number,
)
from .stars import build_star_partition, star_sufficient_solvable, verify_star_partition
from .thresholds import (
    TrialPlan,
    estimate_solvability_probability,
    exact_double_prob,
    exact_pair_double_prob,
    sample_uniform_config,
    trial_rng,
)

__all__ = ["CheckRow", "run_checks", "format_table", "CHECK_IDS"]


@dataclass(frozen=True)
class CheckRow:
    cid: str
    description: str
    expected: str
    observed: str
    verdict: str  # PASS or FAIL


def _row(cid: str, description: str, expected: str, observed: str, ok: bool) -> CheckRow:
    return CheckRow(cid, description, expected, observed, "PASS" if ok else "FAIL")


# -- individual checks -------------------------------------------------------------


def check_class0_corpus(level: str) -> CheckRow:
    """Pebbling numbers of the classic Class 0 corpus."""
    pis = [pebbling_number(complete(n)) for n in range(3, 7)]
    pi_c5 = pebbling_number(cycle(5))
    pi_q3 = pebbling_number(hypercube(3))
    # Petersen is vertex-transitive, so the single-root scan is sound.
    pet = is_class0(petersen(), symmetric=True)
    ok = pis == [3, 4, 5, 6] and pi_c5 == 5 and pi_q3 == 8 and pet is True
    observed = f"K:{','.join(map(str, pis))} C5:{pi_c5} Q3:{pi_q3} petersen:{pet}"
    return _row(
        "A1",
        "Class 0 corpus: pi(K_3..6), pi(C_5), pi(Q^3), Petersen",
        "K:3,4,5,6 C5:5 Q3:8 petersen:True",
        observed,
        ok,
    )


def check_bipartite_lower_bound(level: str) -> CheckRow:
    """Certified configurations on the bipartite family are unsolvable."""
    sizes = [7] if level == "quick" else [7, 8, 9]
    results = []
    for m in sizes:
        cfg, root = bipartite_extremal_config(m)
        solvable, _ = is_r_solvable(bipartite_extremal(m).graph, cfg, root)
        results.append(solvable)
    ok = not any(results)
    return _row(
        "A2",
        f"bipartite extremal m={sizes}: size-2m config unsolvable",
        "all unsolvable",
        f"solvable flags {results}",
        ok,
    )


def check_general_lower_bound(level: str) -> CheckRow:
    sizes = [9, 10] if level == "quick" else [9, 10, 11, 12]
    results = []
    for n in sizes:
        cfg, root = general_extremal_config(n)
        solvable, _ = is_r_solvable(general_extremal(n).graph, cfg, root)
        results.append(solvable)
    ok = not any(results)
    return _row(
        "A3",
        f"general extremal n={sizes}: size-n config unsolvable",
        "all unsolvable",
        f"solvable flags {results}",
        ok,
    )


def check_half_degree_class0(level: str) -> CheckRow:
    """Random connected graphs with min degree floor(n/2) are Class 0."""
    samples = 6 if level == "quick" else 20
    sizes = [9, 10, 11]
    bad = []
    for i in range(samples):
        n = sizes[i % len(sizes)]
        g = random_connected_min_degree(n, n // 2, seed=7100 + i)
        if find_unsolvable(g, g.n) is not None:
            bad.append((n, i))
    ok = not bad
    return _row(
        "A4",
        f"{samples} random graphs, delta=floor(n/2), n in {sizes}: Class 0",
        "no dirty level at t=n",
        "all clean" if ok else f"dirty: {bad}",
        ok,
    )


def _enumerate_configs(n: int, t: int):
    """All count vectors of t pebbles on n vertices (ascending lex)."""
    from .pebbling import _iter_capped_lex

    yield from _iter_capped_lex([t] * n, t)


def check_double_prob(level: str) -> CheckRow:
    """Closed-form double-occupancy probability vs enumeration and sampling."""
    n_max, t_max = (5, 6) if level == "quick" else (6, 8)
    exact_ok = True
    for n in range(1, n_max + 1):
        for t in range(0, t_max + 1):
            hits = sum(1 for cfg in _enumerate_configs(n, t) if cfg[0] == 2)
            total = sum(1 for _ in _enumerate_configs(n, t))
            from fractions import Fraction

            if exact_double_prob(n, t) != Fraction(hits, total):
                exact_ok = False
    n, t = 20, 15
    draws = 20_000 if level == "quick" else 100_000
    hits = 0
    for i in range(draws):
        cfg = sample_uniform_config(n, t, trial_rng(515, n, t, i))
        if cfg[0] == 2:
            hits += 1
    p = float(exact_double_prob(n, t))
    sigma = math.sqrt(p * (1 - p) / draws)
    emp_ok = abs(hits / draws - p) <= 3 * sigma
    ok = exact_ok and emp_ok
    return _row(
        "A5",
        f"double-occupancy formula: enum n<={n_max},t<={t_max}; sampling (20,15)",
        "enumeration exact; empirical within 3 sigma",
        f"enum:{'ok' if exact_ok else 'MISMATCH'} "
        f"emp:{hits / draws:.5f} vs {p:.5f} (3s={3 * sigma:.5f})",
        ok,
    )


def check_negative_correlation(level: str) -> CheckRow:
    """Pair double-occupancy never beats the product of singles (exact)."""
    violations = 0
    pairs = 0
    for n in range(4, 61):
        for t in range(4, n):
            pairs += 1
            if exact_pair_double_prob(n, t) > exact_double_prob(n, t) ** 2:
                violations += 1
    ok = violations == 0
    return _row(
        "A6",
        "pair prob <= single prob^2 for 4<=n<=60, 4<=t<=n-1 (exact)",
        "0 violations",
        f"{violations} violations over {pairs} grid points",
        ok,
    )


def check_star_partition(level: str) -> CheckRow:
    """Greedy partitions verify with q = delta+1 and few parts."""
    graphs = 50 if level == "quick" else 200
    rng = random.Random(7301)
    bad = 0
    for _ in range(graphs):
        n = rng.randint(8, 60)
        delta = rng.randint(3, max(3, min(10, n // 2)))
        g = random_connected_min_degree(n, delta, seed=rng.randrange(2**32))
        d = g.min_degree()
        p = build_star_partition(g)
        if not verify_star_partition(g, p, d + 1) or p.num_parts > g.n / (d + 1):
            bad += 1
    ok = bad == 0
    return _row(
        "A7",
        f"{graphs} random graphs (n<=60, delta>=3): greedy partition valid",
        "q=delta+1 verified, l <= n/(delta+1)",
        f"{bad} failures",
        ok,
    )


def check_sufficiency_soundness(level: str) -> CheckRow:
    """star_sufficient_solvable never claims solvable when it is not."""
    samples = 200 if level == "quick" else 1000
    rng = random.Random(7401)
    violations = 0
    fired = 0
    for i in range(samples):
        n = rng.randint(4, 10)
        delta = rng.randint(1, max(1, n // 2))
        g = random_connected_min_degree(n, delta, seed=rng.randrange(2**32))
        p = build_star_partition(g)
        t = rng.randint(0, 10)
        cfg = sample_uniform_config(n, t, trial_rng(7402, n, t, i))
        if star_sufficient_solvable(g, p, cfg):
            fired += 1
            if not is_solvable(g, cfg):
                violations += 1
    ok = violations == 0
    return _row(
        "A8",
        f"{samples} samples (n<=10, t<=10): sufficient => solvable",
        "0 violations",
        f"{violations} violations ({fired} sufficient hits)",
        ok,
    )


def check_clique_threshold(level: str) -> CheckRow:
    """Solvability on cliques turns on around sqrt(n) pebbles."""
    if level == "quick":
        sizes, trials = [64, 256], 500
    else:
        sizes, trials = [64, 256, 1024], 2000
    details = []
    ok = True
    for n in sizes:
        g = complete(n)
        t_hi = math.ceil(8 * math.sqrt(n))
        t_lo = math.ceil(0.25 * math.sqrt(n))
        hi = estimate_solvability_probability(
            TrialPlan(graph=g, family="complete", t=t_hi, trials=trials, seed=9001)
        )
        lo = estimate_solvability_probability(
            TrialPlan(graph=g, family="complete", t=t_lo, trials=trials, seed=9001)
        )
        hw = max(hi.ci_hi - hi.ci_lo, lo.ci_hi - lo.ci_lo) / 2
        good = hi.est > 0.9 and lo.est < 0.1 and (level == "quick" or hw < 0.03)
        ok = ok and good
        details.append(f"n={n}:{lo.est:.3f}/{hi.est:.3f}")
    return _row(
        "A9",
        f"cliques n={sizes}, {trials} trials: Pr at 8*sqrt(n) vs sqrt(n)/4",
        "> 0.9 at high t, < 0.1 at low t",
        " ".join(details),
        ok,
    )


def _random_instance(rng: random.Random, n_max: int = 8, t_max: int = 8):
    """Random connected graph plus configuration, for cross-validation."""
    n = rng.randint(2, n_max)
    all_edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    while True:
        edges = [e for e in all_edges if rng.random() < 0.5]
        g = Graph(n, edges)
        if g.is_connected():
            break
    t = rng.randint(0, t_max)
    counts = [0] * n
    for _ in range(t):
        counts[rng.randrange(n)] += 1
    return g, Configuration(counts)


def check_oracle_equivalence(level: str) -> CheckRow:
    samples = 100 if level == "quick" else 500
    rng = random.Random(7601)
    disagreements = 0
    for _ in range(samples):
        g, cfg = _random_instance(rng)
        root = rng.randrange(g.n)
        fast, witness = is_r_solvable(g, cfg, root)
        slow = brute_force_r_solvable(g, cfg, root)
        if fast != slow:
            disagreements += 1
    ok = disagreements == 0
    return _row(
        "A10",
        f"{samples} random instances (n<=8, t<=8): search vs brute force",
        "0 disagreements",
        f"{disagreements} disagreements",
        ok,
    )


def check_monotonicity(level: str) -> CheckRow:
    samples = 200 if level == "quick" else 1000
    rng = random.Random(7701)
    pebble_bad = 0
    for _ in range(samples):
        g, cfg = _random_instance(rng, n_max=7, t_max=6)
        v = rng.randrange(g.n)
        if is_solvable(g, cfg) and not is_solvable(g, cfg.with_pebble(v)):
            pebble_bad += 1
    rng = random.Random(7702)
    edge_bad = 0
    for _ in range(samples):
        g, cfg = _random_instance(rng, n_max=7, t_max=6)
        non_edges = [
            (u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if not g.has_edge(u, v)
        ]
        if not non_edges:
            continue
        extra = non_edges[rng.randrange(len(non_edges))]
        root = rng.randrange(g.n)
        before, _ = is_r_solvable(g, cfg, root)
        if before:
            bigger = Graph(g.n, g.edges() + [extra])
            after, _ = is_r_solvable(bigger, cfg, root)
            if not after:
                edge_bad += 1
    ok = pebble_bad == 0 and edge_bad == 0
    return _row(
        "A11",
        f"{samples} instances each: pebble- and edge-addition monotonicity",
        "0 violations",
        f"pebble:{pebble_bad} edge:{edge_bad}",
        ok,
    )


CHECKS: tuple[Callable[[str], CheckRow], ...] = (
    check_class0_corpus,
    check_bipartite_lower_bound,
    check_general_lower_bound,
    check_half_degree_class0,
    check_double_prob,
    check_negative_correlation,
    check_star_partition,
    check_sufficiency_soundness,
    check_clique_threshold,
    check_oracle_equivalence,
    check_monotonicity,
)

CHECK_IDS = tuple(f"A{i}" for i in range(1, len(CHECKS) + 1))


def run_checks(level: str = "quick") -> list[CheckRow]:
    if level not in ("quick", "full"):
        raise ValueError(f"level must be 'quick' or 'full', got {level!r}")
    return [check(level) for check in CHECKS]


def format_table(rows: Iterable[CheckRow]) -> str:
    rows = list(rows)
    headers = ("id", "description", "expected", "observed", "verdict")
    table = [headers] + [
        (r.cid, r.description, r.expected, r.observed, r.verdict) for r in rows
    ]
    widths = [max(len(line[i]) for line in table) for i in range(5)]
    out = []
    for line in table:
        out.append("  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip())
    return "\n".join(out) + "\n"
