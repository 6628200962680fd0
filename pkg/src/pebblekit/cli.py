"""Command-line interface.

Exit codes: 0 success; 1 the computed mathematical answer is negative
(unsolvable input, not Class 0, a failed verification row); 2 usage error;
3 a search or retry budget was exhausted.

Every randomized command requires an explicit --seed, so any invocation can
be replayed byte for byte.
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import Callable, Sequence

from . import verification
from .extremal import (
    bipartite_extremal,
    bipartite_extremal_config,
    general_extremal,
    general_extremal_config,
    write_roles,
)
from .graphs import (
    Graph,
    RetryExhaustedError,
    complete,
    cycle,
    hypercube,
    path,
    petersen,
    random_connected_min_degree,
    read_edge_list,
    write_edge_list,
)
from .pebbling import (
    BudgetExceeded,
    Configuration,
    find_unsolvable,
    format_witness,
    is_class0,
    is_r_solvable,
    pebbling_number,
    read_configuration,
    replay_witness,
    write_configuration,
)
from .stars import build_star_partition
from .thresholds import SOLVERS, threshold_sweep

CONSTRUCT_FAMILIES = (
    "complete",
    "cycle",
    "path",
    "hypercube",
    "petersen",
    "bipartite-extremal",
    "general-extremal",
    "random-mindeg",
)
THRESHOLD_FAMILIES = ("complete", "general-extremal", "random-mindeg")


class UsageError(ValueError):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pebblekit",
        description="Graph pebbling: exact solving, extremal constructions, "
        "star partitions, threshold estimation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="write a graph (plus sidecars for extremal families)")
    p.add_argument("--family", required=True, choices=CONSTRUCT_FAMILIES)
    p.add_argument("--n", type=int, help="vertex count (complete/cycle/path/general-extremal/random-mindeg)")
    p.add_argument("--m", type=int, help="part size (bipartite-extremal)")
    p.add_argument("--d", type=int, help="dimension (hypercube)")
    p.add_argument("--delta", type=int, help="minimum degree (random-mindeg)")
    p.add_argument("--seed", type=int, help="sample seed (random-mindeg)")
    p.add_argument("--out", help="output base path (default: derived from family and size)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("solve", help="decide r-solvability of a configuration")
    p.add_argument("--graph", required=True)
    p.add_argument("--config", required=True)
    p.add_argument("--root", type=int, required=True)
    p.add_argument("--witness", action="store_true", help="print a replayable move sequence")
    p.add_argument("--budget", type=int, default=None, help="search state budget")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("pi", help="compute the pebbling number")
    p.add_argument("--graph", required=True)
    p.add_argument("--budget", type=int, default=None, help="per-level configuration budget")
    p.add_argument("--symmetric", action="store_true",
                   help="scan a single root (sound only for vertex-transitive graphs)")
    p.set_defaults(func=cmd_pi)

    p = sub.add_parser("class0", help="decide whether pi(G) = n(G)")
    p.add_argument("--graph", required=True)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--symmetric", action="store_true",
                   help="scan a single root (sound only for vertex-transitive graphs)")
    p.set_defaults(func=cmd_class0)

    p = sub.add_parser("partition", help="print the greedy star partition")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("threshold", help="Monte Carlo solvability sweep, CSV output")
    p.add_argument("--family", required=True, choices=THRESHOLD_FAMILIES)
    p.add_argument("--sizes", required=True, help="comma-separated vertex counts")
    p.add_argument(
        "--t-spec",
        required=True,
        help="pebble grid: 'abs:5,10' literal counts, 'sqrt:0.5,2' for "
        "ceil(w*sqrt(n)), 'n32:1,2' for ceil(w*n^1.5/delta(n))",
    )
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--solver", choices=SOLVERS, default="exact")
    p.add_argument("--csv", required=True, help="output CSV path")
    p.add_argument("--delta", help="minimum degree rule: an integer or 'n/K' (e.g. n/2)")
    p.set_defaults(func=cmd_threshold)

    p = sub.add_parser("verify-paper", help="rerun the reproduction checks and print a table")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.set_defaults(func=cmd_verify)

    return parser


# -- subcommands ---------------------------------------------------------------


def _require(args: argparse.Namespace, flag: str, family: str) -> int:
    val = getattr(args, flag)
    if val is None:
        raise UsageError(f"--{flag} is required for family {family}")
    return val


def cmd_construct(args: argparse.Namespace) -> int:
    fam = args.family
    roles = None
    cfg = None
    extras = {}
    if fam == "complete":
        n = _require(args, "n", fam)
        g, base = complete(n), f"complete-{n}"
    elif fam == "cycle":
        n = _require(args, "n", fam)
        g, base = cycle(n), f"cycle-{n}"
    elif fam == "path":
        n = _require(args, "n", fam)
        g, base = path(n), f"path-{n}"
    elif fam == "hypercube":
        d = _require(args, "d", fam)
        g, base = hypercube(d), f"hypercube-{d}"
    elif fam == "petersen":
        g, base = petersen(), "petersen"
    elif fam == "bipartite-extremal":
        m = _require(args, "m", fam)
        lg = bipartite_extremal(m)
        g, base, roles = lg.graph, f"bipartite-extremal-{m}", dict(lg.roles)
        if m >= 7:
            cfg, root = bipartite_extremal_config(m)
            extras = _config_roles(cfg, root)
    elif fam == "general-extremal":
        n = _require(args, "n", fam)
        lg = general_extremal(n)
        g, base, roles = lg.graph, f"general-extremal-{n}", dict(lg.roles)
        if n >= 9:
            cfg, root = general_extremal_config(n)
            extras = _config_roles(cfg, root)
    else:  # random-mindeg
        n = _require(args, "n", fam)
        delta = _require(args, "delta", fam)
        seed = _require(args, "seed", fam)
        g = random_connected_min_degree(n, delta, seed)
        base = f"random-mindeg-{n}-{delta}-{seed}"
    base = args.out if args.out else base

    edge_path = base + ".edges"
    write_edge_list(g, edge_path)
    print(edge_path)
    if roles is not None:
        roles_path = base + ".roles"
        write_roles({**roles, **extras}, roles_path)
        print(roles_path)
    if cfg is not None:
        config_path = base + ".config"
        write_configuration(cfg, config_path)
        print(config_path)
    return 0


def _config_roles(cfg: Configuration, root: int) -> dict[str, int]:
    threes = [v for v, c in enumerate(cfg.counts) if c == 3]
    twos = [v for v, c in enumerate(cfg.counts) if c == 2]
    return {"r": root, "a": threes[0], "b": threes[1], "c": twos[0]}


def cmd_solve(args: argparse.Namespace) -> int:
    g = read_edge_list(args.graph)
    cfg = read_configuration(args.config)
    if not 0 <= args.root < g.n:
        raise UsageError(f"root {args.root} out of range for n={g.n}")
    kwargs = {} if args.budget is None else {"max_states": args.budget}
    solvable, witness = is_r_solvable(g, cfg, args.root, **kwargs)
    if solvable:
        print("solvable")
        if args.witness:
            if not replay_witness(g, cfg, witness, args.root):
                raise RuntimeError("internal error: witness failed replay")
            sys.stdout.write(format_witness(witness))
        return 0
    print("unsolvable")
    return 1


def cmd_pi(args: argparse.Namespace) -> int:
    g = read_edge_list(args.graph)
    kwargs = {} if args.budget is None else {"max_configs": args.budget}
    print(pebbling_number(g, symmetric=args.symmetric, **kwargs))
    return 0


def cmd_class0(args: argparse.Namespace) -> int:
    g = read_edge_list(args.graph)
    kwargs = {} if args.budget is None else {"max_configs": args.budget}
    answer = is_class0(g, symmetric=args.symmetric, **kwargs)
    print("true" if answer else "false")
    return 0 if answer else 1


def cmd_partition(args: argparse.Namespace) -> int:
    g = read_edge_list(args.graph)
    p = build_star_partition(g)
    for center, members in p.parts:
        print(f"center: {center} members: {' '.join(map(str, sorted(members)))}")
    print(f"W: {' '.join(map(str, sorted(p.leftover)))}".rstrip())
    return 0


def _parse_delta(spec: str | None) -> Callable[[int], int] | None:
    if spec is None:
        return None
    spec = spec.strip()
    if spec.startswith("n/"):
        k = int(spec[2:])
        if k < 1:
            raise UsageError(f"bad delta rule {spec!r}")
        return lambda n: n // k
    return lambda n, d=int(spec): d


def _parse_t_spec(spec: str, delta: Callable[[int], int] | None) -> Callable[[int], list[int]]:
    kind, _, rest = spec.partition(":")
    if not rest:
        raise UsageError(f"bad t-spec {spec!r}")
    try:
        vals = [float(x) for x in rest.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad t-spec values in {spec!r}") from exc
    if kind == "abs":
        return lambda n: [int(v) for v in vals]
    if kind == "sqrt":
        return lambda n: [math.ceil(v * math.sqrt(n)) for v in vals]
    if kind == "n32":
        if delta is None:
            raise UsageError("t-spec 'n32:' needs --delta")
        return lambda n: [math.ceil(v * n**1.5 / delta(n)) for v in vals]
    raise UsageError(f"unknown t-spec kind {kind!r} (use abs:, sqrt:, n32:)")


def cmd_threshold(args: argparse.Namespace) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad --sizes {args.sizes!r}") from exc
    delta = _parse_delta(args.delta)
    if args.family == "random-mindeg" and delta is None:
        raise UsageError("family random-mindeg needs --delta")
    t_grid = _parse_t_spec(args.t_spec, delta)
    curve = threshold_sweep(
        args.family,
        sizes,
        t_grid,
        trials=args.trials,
        seed=args.seed,
        solver=args.solver,
        delta=delta,
    )
    curve.write_csv(args.csv)
    print(f"wrote {args.csv}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    rows = verification.run_checks(args.level)
    sys.stdout.write(verification.format_table(rows))
    return 0 if all(r.verdict == "PASS" for r in rows) else 1


# -- entry point ----------------------------------------------------------------


def run(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except RetryExhaustedError as exc:
        print(f"sampling gave up: {exc}", file=sys.stderr)
        return 3
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> int:
    return run()


if __name__ == "__main__":
    raise SystemExit(main())
