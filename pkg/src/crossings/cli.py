"""Command-line front end: analyze, generate, estimate, ztest, validate, scan.

Exit codes: 0 success, 1 usage error, 2 input parse error, 3 validation
failure. Every run prints its effective configuration to stderr so results
can be reproduced.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import __version__
from .arrangement import crossings, parse_arrangement
from .estimator import (
    DEFAULT_EXHAUSTIVE_LIMIT,
    DEFAULT_SAMPLES,
    exhaustive_moments,
    monte_carlo_moments,
    scan_family,
)
from .graphs import (
    BudgetError,
    GraphFormatError,
    degree_stats,
    erdos_renyi,
    format_edge_list,
    from_graph6,
    gen_family,
    is_q_zero,
    parse_edge_list,
    size_q,
)
from .moments import (
    chebyshev_pbound,
    expectation_rla,
    format_rational,
    variance_rla,
    z_score,
)
from .product_types import PRODUCT_TYPES, freq_fast
from .validation import (
    validate_er,
    validate_families,
    validate_graph6_corpus,
    validate_trees,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1 (argparse default is 2, reserved here for parse errors)
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_graph_args(p: argparse.ArgumentParser):
    p.add_argument("--input", help="edge-list file (first line 'n m')")
    p.add_argument("--graph6", help="graph6 file (first line is used)")
    p.add_argument("--family", help="special family name")
    p.add_argument("--n", type=int, help="family size")
    p.add_argument("--n1", type=int, help="first partition size / star size")
    p.add_argument("--n2", type=int, help="second partition size (bipartite)")
    p.add_argument("--p", type=float, help="edge probability (erdos_renyi)")


def _resolve_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("CROSSINGS_SEED")
    return int(env) if env else 0


def _load_graph(args, seed: int):
    sources = [s for s in (args.input, args.graph6, args.family) if s]
    if len(sources) != 1:
        raise _UsageError("exactly one of --input, --graph6, --family is required")
    if args.input:
        with open(args.input, "r", encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    if args.graph6:
        with open(args.graph6, "r", encoding="ascii") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    return from_graph6(line)
        raise GraphFormatError(f"{args.graph6}: no graph6 line found")
    family = args.family
    if family == "erdos_renyi":
        if args.n is None or args.p is None:
            raise _UsageError("erdos_renyi requires --n and --p")
        return erdos_renyi(args.n, args.p, seed)
    if args.n is None and args.n1 is None:
        raise _UsageError(f"--family {family} requires --n")
    if family == "complete_bipartite":
        n1 = args.n1 if args.n1 is not None else args.n
        if n1 is None or args.n2 is None:
            raise _UsageError("complete_bipartite requires --n1 and --n2")
        return gen_family(family, n1, n2=args.n2)
    if family == "star_plus_isolated":
        if args.n1 is None or args.n is None:
            raise _UsageError(
                "star_plus_isolated requires --n1 (star size) and --n (total)"
            )
        return gen_family(family, args.n, lam=args.n1)
    return gen_family(family, args.n)


class _UsageError(Exception):
    pass


def _config_line(cmd: str, args, seed: int) -> str:
    parts = [f"crossings v{__version__}", f"cmd={cmd}", f"seed={seed}"]
    for key in ("samples", "nmax", "exhaustive_limit", "jobs", "out"):
        if hasattr(args, key) and getattr(args, key) is not None:
            parts.append(f"{key}={getattr(args, key)}")
    return "# " + " ".join(parts)


def _emit_mapping(pairs: list[tuple[str, str]], out: str):
    if out == "json":
        print(json.dumps(dict(pairs), indent=2))
    elif out == "csv":
        print(",".join(k for k, _ in pairs))
        print(",".join(v for _, v in pairs))
    else:
        width = max(len(k) for k, _ in pairs)
        for k, v in pairs:
            print(f"{k:<{width}}  {v}")


def cmd_analyze(args) -> int:
    seed = _resolve_seed(args)
    g = _load_graph(args, seed)
    stats = degree_stats(g)
    fv = freq_fast(g)
    e = expectation_rla(g)
    var = variance_rla(g)
    wz = is_q_zero(g)
    pairs = [
        ("n", str(g.n)),
        ("m", str(g.m)),
        ("k2", str(stats.second_moment)),
        ("Q", str(size_q(g))),
        ("E", str(e)),
        ("E_decimal", f"{float(e):.12g}"),
        ("Var", str(var)),
        ("Var_decimal", f"{float(var):.12g}"),
    ]
    pairs += [(f"f{c}", str(fv[c])) for c in PRODUCT_TYPES]
    pairs.append(("q_zero_family", wz.family or ""))
    if args.out == "table":
        # friendlier rendering for the exact values
        table = dict(pairs)
        table["E"] = format_rational(e)
        table["Var"] = format_rational(var)
        _emit_mapping([(k, v) for k, v in table.items()
                       if not k.endswith("_decimal")], "table")
    else:
        _emit_mapping(pairs, args.out)
    return EXIT_OK


def cmd_generate(args) -> int:
    seed = _resolve_seed(args)
    g = _load_graph(args, seed)
    sys.stdout.write(format_edge_list(g))
    return EXIT_OK


def cmd_estimate(args) -> int:
    seed = _resolve_seed(args)
    g = _load_graph(args, seed)
    if g.n <= args.exhaustive_limit:
        cost = math.factorial(g.n) * max(size_q(g), 1)
        if cost > 10**8:
            print(
                f"# warning: exhaustive run costs n! x |Q| = "
                f"{math.factorial(g.n)} x {size_q(g)} = {cost} pair checks",
                file=sys.stderr,
            )
        rep = exhaustive_moments(g, limit=args.exhaustive_limit, jobs=args.jobs)
    else:
        rep = monte_carlo_moments(g, samples=args.samples, seed=seed, jobs=args.jobs)
    pairs = [
        ("mode", rep.mode),
        ("T", str(rep.samples)),
        ("seed", "" if rep.seed is None else str(rep.seed)),
        ("exact", str(rep.exact).lower()),
        ("mean", str(rep.mean)),
        ("variance", str(rep.variance)),
    ]
    _emit_mapping(pairs, args.out)
    return EXIT_OK


def cmd_ztest(args) -> int:
    seed = _resolve_seed(args)
    g = _load_graph(args, seed)
    if (args.arrangement is None) == (args.observed is None):
        raise _UsageError("provide exactly one of --arrangement or --observed")
    if args.arrangement:
        with open(args.arrangement, "r", encoding="utf-8") as fh:
            arr = parse_arrangement(fh.read())
        observed = crossings(g, arr)
    else:
        observed = args.observed
    e = expectation_rla(g)
    var = variance_rla(g)
    pairs = [
        ("C", str(observed)),
        ("E", str(e)),
        ("Var", str(var)),
    ]
    if var == 0:
        pairs.append(("z", ""))
        pairs.append(("note", "degenerate: Var[C] = 0, C is constant; no z-score"))
    else:
        pairs.append(("z", f"{z_score(g, observed):.12g}"))
    pairs.append(("chebyshev_pbound", str(chebyshev_pbound(g, observed))))
    _emit_mapping(pairs, args.out)
    return EXIT_OK


def cmd_scan(args) -> int:
    seed = _resolve_seed(args)
    rows = scan_family(
        args.family,
        n_min=args.nmin,
        n_max=args.nmax,
        mode=args.mode,
        exhaustive_limit=args.exhaustive_limit,
        samples=args.samples,
        seed=seed,
        jobs=args.jobs,
    )
    header = ["family", "n", "Q", "E_theory", "Var_theory",
              "E_est", "Var_est", "mode", "T", "seed"]

    def cells(r):
        return [
            r.family, str(r.n), str(r.q), str(r.e_theory), str(r.var_theory),
            "" if r.e_est is None else str(r.e_est),
            "" if r.var_est is None else str(r.var_est),
            r.mode,
            "" if r.samples is None else str(r.samples),
            "" if r.seed is None else str(r.seed),
        ]

    if args.out == "json":
        print(json.dumps([dict(zip(header, cells(r))) for r in rows], indent=2))
    elif args.out == "table":
        print("  ".join(header))
        for r in rows:
            print("  ".join(cells(r)))
    else:
        print(",".join(header))
        for r in rows:
            print(",".join(cells(r)))
    return EXIT_OK


def cmd_validate(args) -> int:
    seed = _resolve_seed(args)
    if args.what == "trees":
        report = validate_trees(args.nmax, exhaustive_limit=args.exhaustive_limit)
    elif args.what == "graph6":
        if not args.path:
            raise _UsageError("validate graph6 requires --path")
        report = validate_graph6_corpus(
            args.path, limit=args.limit, exhaustive_limit=args.exhaustive_limit
        )
    elif args.what == "families":
        report = validate_families(n_max=args.nmax, seed=seed)
    else:  # er
        if args.n is None or args.p is None:
            raise _UsageError("validate er requires --n and --p")
        report = validate_er(args.n, args.p, args.trials, seed)
    print(report.to_json())
    return EXIT_OK if report.success else EXIT_VALIDATION


def build_parser() -> _Parser:
    parser = _Parser(prog="crossings", description=__doc__)
    parser.add_argument("--version", action="version",
                        version=f"crossings {__version__}")
    sub = parser.add_subparsers(dest="cmd", required=True)

    def common(p, graph=True):
        if graph:
            _add_graph_args(p)
        p.add_argument("--seed", type=int, default=None,
                       help="PRNG seed (fallback: CROSSINGS_SEED, then 0)")
        p.add_argument("--jobs", type=int,
                       default=os.cpu_count() or 1,
                       help="worker count (results do not depend on it)")
        p.add_argument("--out", choices=("table", "csv", "json"),
                       default="table")

    p = sub.add_parser("analyze", help="exact |Q|, E[C], Var[C] and frequencies")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", help="emit a graph as edge-list text")
    common(p)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("estimate", help="empirical moments of C")
    common(p)
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--exhaustive-limit", dest="exhaustive_limit",
                   type=int, default=DEFAULT_EXHAUSTIVE_LIMIT)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("ztest", help="z-score of an observed crossing count")
    common(p)
    p.add_argument("--arrangement", help="arrangement file (positions line)")
    p.add_argument("--observed", type=int, help="observed crossing count")
    p.set_defaults(func=cmd_ztest)

    p = sub.add_parser("scan", help="theory vs estimates across a size range")
    p.add_argument("--family", required=True)
    p.add_argument("--nmin", type=int, default=4)
    p.add_argument("--nmax", type=int, default=20)
    p.add_argument("--mode", choices=("auto", "exhaustive", "monte_carlo", "theory"),
                   default="auto")
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--exhaustive-limit", dest="exhaustive_limit",
                   type=int, default=DEFAULT_EXHAUSTIVE_LIMIT)
    common(p, graph=False)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("validate", help="run a cross-validation battery")
    p.add_argument("what", choices=("trees", "graph6", "families", "er"))
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--path", help="graph6 corpus file (what=graph6)")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--exhaustive-limit", dest="exhaustive_limit",
                   type=int, default=DEFAULT_EXHAUSTIVE_LIMIT)
    common(p, graph=False)
    p.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    seed = _resolve_seed(args)
    print(_config_line(args.cmd, args, seed), file=sys.stderr)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"crossings: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphFormatError as exc:
        print(f"crossings: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except FileNotFoundError as exc:
        print(f"crossings: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ValueError, BudgetError) as exc:
        print(f"crossings: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
