"""``hooklab`` command line: counting, identity checks, hook walks and the bijection.

Every command writes one JSON document to stdout and a short summary to
stderr.  Exit codes: 0 all checks passed, 1 a check failed, 2 bad input,
3 a size guard was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import __version__
from .bijection import (
    count_F,
    count_G,
    enumerate_F,
    enumerate_G,
    monomial_sum,
    phi,
    phi_inv,
    phi_moves,
    random_F,
)
from .diagram import Partition
from .identities import (
    ALPHA_BETA_VARIANTS,
    SYMBOLIC_LIMIT,
    WBRHL_VARIANTS,
    AlphaBetaWeights,
    DegenerateError,
    IdentityReport,
    KerovInput,
    check_alpha_beta,
    check_alpha_beta_random,
    check_brhl,
    check_complementary,
    check_kerov,
    check_main,
    check_wbrhl_evaluated,
    check_wbrhl_symbolic,
    kerov_crosscheck,
    random_kerov_input,
    wbrhl_polynomials,
)
from .poly import WeightAssignment, format_rational, parse_rational, parse_weights, random_weights
from .rng import RandomSource
from .syt import GuardError, burnside_check, count_branching, count_hlf, enumerate_syt
from .walk import (
    closed_form_distribution,
    exact_distribution,
    modified_closed_distribution,
    simulate,
    z_scores,
)

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_GUARD = 0, 1, 2, 3

IDENTITIES = (
    "brhl",
    "wbrhl",
    "main-a",
    "main-b",
    "main-c",
    "main-d",
    "kerov-a",
    "kerov-b",
    "kerov-c",
    "kerov-d",
    "complementary",
    "alpha-beta",
    "burnside",
)


class Outcome:
    """Results payload of one command plus its pass/fail verdict."""

    def __init__(self, results: dict[str, Any], passed: bool, summary: str):
        self.results = results
        self.passed = passed
        self.summary = summary


# ---------------------------------------------------------------------------
# helpers

def _partition(args) -> Partition:
    if args.partition is None:
        raise ValueError("this command needs -p/--partition")
    return Partition.parse(args.partition)


def _weights(args, lam: Partition) -> WeightAssignment:
    x = parse_weights(args.weights_x or "ones", lam.num_rows)
    y = parse_weights(args.weights_y or "ones", lam.num_cols)
    return WeightAssignment(x, y)


def _explicit_weights(args, lam: Partition) -> WeightAssignment | None:
    if args.weights_x is None and args.weights_y is None:
        return None
    return _weights(args, lam)


def _reports(reports: Sequence[IdentityReport], label: str) -> Outcome:
    passed = all(r.passed for r in reports)
    failed = sum(not r.passed for r in reports)
    summary = f"{label}: {len(reports) - failed}/{len(reports)} checks passed"
    return Outcome({"passed": passed, "checks": [r.to_json() for r in reports]}, passed, summary)


# ---------------------------------------------------------------------------
# commands

def cmd_count(args) -> Outcome:
    lam = _partition(args)
    methods = ("hlf", "branching", "enumerate") if args.method == "all" else (args.method,)
    funcs: dict[str, Callable[[Partition], int]] = {
        "hlf": count_hlf,
        "branching": count_branching,
        "enumerate": lambda p: len(enumerate_syt(p)),
    }
    counts = {m: funcs[m](lam) for m in methods}
    agree = len(set(counts.values())) == 1
    text = ", ".join(f"{m}={v}" for m, v in counts.items())
    return Outcome(
        {"counts": {m: str(v) for m, v in counts.items()}, "agree": agree},
        agree,
        f"|SYT({lam})|: {text}",
    )


def _verify_main(args, lam: Partition, variant: str) -> list[IdentityReport]:
    w = _explicit_weights(args, lam)
    if w is not None:
        return [check_main(lam, w, variant)]
    rng = RandomSource(args.seed)
    return [check_main(lam, random_weights(lam, rng), variant) for _ in range(args.trials)]


def _verify_wbrhl(args, lam: Partition) -> list[IdentityReport]:
    variants = WBRHL_VARIANTS if args.variant is None else (args.variant,)
    bad = set(variants) - set(WBRHL_VARIANTS)
    if bad:
        raise ValueError(f"unknown wbrhl variant(s) {sorted(bad)}; choose from {WBRHL_VARIANTS}")
    if args.mode == "symbolic":
        return [check_wbrhl_symbolic(lam, v) for v in variants]
    w = _explicit_weights(args, lam)
    if w is not None:
        return [check_wbrhl_evaluated(lam, w, v) for v in variants]
    rng = RandomSource(args.seed)
    return [check_wbrhl_evaluated(lam, random_weights(lam, rng), v) for v in variants for _ in range(args.trials)]


def _verify_kerov(args, variant: str) -> list[IdentityReport]:
    if args.kerov_x is not None or args.kerov_y is not None:
        if args.kerov_x is None or args.kerov_y is None or args.kerov_q is None:
            raise ValueError("explicit Kerov input needs --kerov-x, --kerov-y and --kerov-q")
        X = tuple(int(v) for v in args.kerov_x.split(","))
        Y = tuple(int(v) for v in args.kerov_y.split(","))
        inputs = [KerovInput(X, Y, parse_rational(args.kerov_q))]
    else:
        rng = RandomSource(args.seed)
        q = None if args.kerov_q is None else parse_rational(args.kerov_q)
        inputs = [random_kerov_input(args.kerov_d, rng, q=q) for _ in range(args.trials)]
    out = []
    for inp in inputs:
        out.append(check_kerov(inp, variant))
        out.append(kerov_crosscheck(inp, variant))
    return out


def _verify_alpha_beta(args, lam: Partition) -> list[IdentityReport]:
    variants = ALPHA_BETA_VARIANTS if args.variant is None else (args.variant,)
    bad = set(variants) - set(ALPHA_BETA_VARIANTS)
    if bad:
        raise ValueError(f"unknown alpha-beta variant(s) {sorted(bad)}; choose from {ALPHA_BETA_VARIANTS}")
    if args.alpha is not None or args.beta is not None:
        if args.alpha is None or args.beta is None:
            raise ValueError("give both --alpha and --beta")
        ab = AlphaBetaWeights(parse_rational(args.alpha), parse_rational(args.beta))
        return [check_alpha_beta(lam, ab, v) for v in variants]
    rng = RandomSource(args.seed)
    return [check_alpha_beta_random(lam, rng, v) for v in variants for _ in range(args.trials)]


def cmd_verify(args) -> Outcome:
    ident = args.identity
    if ident == "burnside":
        if args.n is None:
            raise ValueError("burnside needs -n")
        ok = burnside_check(args.n)
        report = IdentityReport("burnside", None, "evaluated", ok, details={"n": args.n})
        return _reports([report], "burnside")
    if ident.startswith("kerov-"):
        return _reports(_verify_kerov(args, ident.split("-")[1]), ident)
    lam = _partition(args)
    if ident == "brhl":
        reports = [check_brhl(lam)]
    elif ident == "wbrhl":
        reports = _verify_wbrhl(args, lam)
    elif ident.startswith("main-"):
        reports = _verify_main(args, lam, ident.split("-")[1])
    elif ident == "complementary":
        w = _explicit_weights(args, lam)
        reports = [check_complementary(lam, args.mode, weights=w, rng=RandomSource(args.seed))]
    elif ident == "alpha-beta":
        reports = _verify_alpha_beta(args, lam)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown identity {ident!r}")
    return _reports(reports, f"{ident} ({lam})")


def cmd_walk(args) -> Outcome:
    lam = _partition(args)
    w = _weights(args, lam)
    exact = exact_distribution(lam, w, modified=args.modified)
    closed = modified_closed_distribution(lam, w) if args.modified else closed_form_distribution(lam, w)
    results: dict[str, Any] = {"kind": "modified" if args.modified else "ordinary", "exact": exact.to_json()}
    if args.mode == "exact":
        passed = exact == closed
        results["closed_form"] = closed.to_json()
        results["passed"] = passed
        summary = ", ".join(f"{tuple(c)}: {format_rational(m)}" for c, m in zip(exact.corners, exact.mass))
        return Outcome(results, passed, f"exact corner distribution: {summary}")
    est = simulate(lam, w, modified=args.modified, samples=args.samples, seed=args.seed, shards=args.shards)
    z = z_scores(est, exact)
    passed = exact == closed and all(abs(v) <= args.z_limit for v in z)
    results["estimate"] = est.to_json()
    results["z_scores"] = [round(v, 6) for v in z]
    results["passed"] = passed
    summary = ", ".join(f"{tuple(c)}: {h}/{est.samples}" for c, h in zip(est.corners, est.hits))
    return Outcome(results, passed, f"simulated {est.samples} walks: {summary}; max |z| = {max(map(abs, z)):.2f}")


def cmd_bijection(args) -> Outcome:
    lam = _partition(args)
    if args.action == "demo":
        f = random_F(lam, RandomSource(args.seed))
        path, moves = phi_moves(f)
        g = phi(f)
        back = phi_inv(g)
        results = {
            "F": f.to_json(),
            "walk": [list(c) for c in path.cells],
            "projections": {"I": list(path.rows), "J": list(path.cols)},
            "moves": [
                {
                    "label": str(m.label),
                    "from": m.source if isinstance(m.source, str) else list(m.source),
                    "to": list(m.dest),
                }
                for m in moves
            ],
            "G": g.to_json(),
            "inverse_ok": back == f,
        }
        return Outcome(results, back == f, f"walk {' -> '.join(str(tuple(c)) for c in path.cells)}")
    if lam.size() > SYMBOLIC_LIMIT:
        raise GuardError(f"|λ| = {lam.size()} exceeds arrangement limit {SYMBOLIC_LIMIT}")
    Fs, Gs = enumerate_F(lam), enumerate_G(lam)
    if args.action == "census":
        lhs, rhs = wbrhl_polynomials(lam, "eq4")
        sums_ok = monomial_sum(Fs) == lhs and monomial_sum(Gs) == rhs
        passed = len(Fs) == len(Gs) and sums_ok
        results = {"F": len(Fs), "G": len(Gs), "F_formula": count_F(lam), "G_formula": count_G(lam), "sums_equal": sums_ok}
        return Outcome(results, passed, f"|F| = {len(Fs)}, |G| = {len(Gs)}, sums equal: {sums_ok}")
    forward = all(phi_inv(phi(f)) == f for f in Fs)
    backward = all(phi(phi_inv(g)) == g for g in Gs)
    passed = forward and backward and len(Fs) == len(Gs)
    results = {"arrangements": len(Fs), "inverse_after_phi": forward, "phi_after_inverse": backward}
    return Outcome(results, passed, f"roundtrip over {len(Fs)} arrangements: {'ok' if passed else 'FAILED'}")


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hooklab", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 for reproducible output")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("-p", "--partition", help='parts separated by commas, e.g. "3,2,2"')
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("count", help="count standard Young tableaux")
    common(p)
    p.add_argument("-m", "--method", choices=("hlf", "branching", "enumerate", "all"), default="all")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="check an identity exactly")
    common(p)
    p.add_argument("-i", "--identity", choices=IDENTITIES, required=True)
    p.add_argument("--mode", choices=("symbolic", "evaluated"), default="evaluated")
    p.add_argument("--variant", help="wbrhl: eq4|eq5|eq5_conj|eq6; alpha-beta: sum_n|row_m|col_l|combined")
    p.add_argument("--weights-x")
    p.add_argument("--weights-y")
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("-n", type=int, help="size for the burnside check")
    p.add_argument("--kerov-d", type=int, default=3)
    p.add_argument("--kerov-x", help="X_1..X_d")
    p.add_argument("--kerov-y", help="Y_0..Y_d")
    p.add_argument("--kerov-q")
    p.add_argument("--alpha")
    p.add_argument("--beta")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("walk", help="weighted hook walk corner distribution")
    common(p)
    p.add_argument("--weights-x")
    p.add_argument("--weights-y")
    p.add_argument("--mode", choices=("exact", "simulate"), default="exact")
    p.add_argument("--modified", action="store_true")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--z-limit", type=float, default=4.0, help="largest |z| counted as a pass")
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("bijection", help="the arrangement bijection")
    common(p)
    p.add_argument("-a", "--action", choices=("demo", "roundtrip", "census"), default="demo")
    p.set_defaults(func=cmd_bijection)
    return parser


def _inputs(args) -> dict[str, Any]:
    skip = {"func", "command", "no_timing"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        outcome = args.func(args)
    except GuardError as exc:
        print(f"hooklab: guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except DegenerateError as exc:
        print(f"hooklab: degenerate input: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (ValueError, ZeroDivisionError) as exc:
        print(f"hooklab: {exc}", file=sys.stderr)
        return EXIT_PARSE
    elapsed = 0 if args.no_timing else round((time.perf_counter() - start) * 1000, 3)
    report = {
        "command": args.command,
        "inputs": _inputs(args),
        "results": outcome.results,
        "elapsed_ms": elapsed,
        "version": __version__,
    }
    json.dump(report, sys.stdout, indent=2, default=_json_default)
    sys.stdout.write("\n")
    print(f"[{'PASS' if outcome.passed else 'FAIL'}] {outcome.summary}", file=sys.stderr)
    return EXIT_OK if outcome.passed else EXIT_FAIL


def _json_default(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    raise TypeError(f"not serializable: {type(value).__name__}")


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
