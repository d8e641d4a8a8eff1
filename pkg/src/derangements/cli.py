"""Command-line front end.

    derangements seq derangement --n-max 10
    derangements poly cosine --n 2 --format latex
    derangements verify --n-max 20 --format json
    derangements mc --n 3 --p 1/2 --q 1/2 --kind cosine --seed 7
    derangements export --out-dir out/
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import export
from .exact import format_bipoly, format_poly
from .identities import VerifyConfig, all_passed, check_ids, run_all
from .polys import cosine_derangement, derangement_poly, fixed_point_enumerator, sine_derangement
from .probability import MomentKind, exact_moment, mc_moment, z_score
from .report import Status
from .sequences import bell_polynomial

SEQ_KINDS = ("derangement", "bell", "euler", "factorial", "stirling1", "stirling2")
POLY_KINDS = ("derangement", "cosine", "sine", "bell", "fixed-points")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="derangements", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", help="print a sequence or Stirling triangle")
    p.add_argument("kind", choices=SEQ_KINDS)
    p.add_argument("--n-max", type=_nonneg, default=10)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("poly", help="print a polynomial")
    p.add_argument("kind", choices=POLY_KINDS)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--format", choices=("text", "json", "latex"), default="text")

    p = sub.add_parser("verify", help="run the identity checks")
    p.add_argument("--n-max", type=_nonneg, default=20)
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.add_argument("--tail-terms", type=_nonneg, default=60)
    p.add_argument("--only", action="append", choices=check_ids(), metavar="ID",
                   help="run only this check (repeatable)")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("mc", help="Monte Carlo moment estimate")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--p", type=_fraction, default=Fraction(0))
    p.add_argument("--q", type=_fraction, default=Fraction(0))
    p.add_argument("--kind", choices=[k.value for k in MomentKind], default="plain")
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("export", help="write CSV/JSON tables and polynomials")
    p.add_argument("--out-dir", default=None,
                   help=f"output directory (default ${export.OUT_DIR_ENV} or ./derangements-out)")
    p.add_argument("--n-max", type=_nonneg, default=20)
    return parser


def cmd_seq(args) -> int:
    if args.kind.startswith("stirling"):
        if args.format == "csv":
            sys.stdout.write(export.triangle_csv(args.kind, args.n_max))
        elif args.format == "json":
            print(json.dumps(export.triangle_json(args.kind, args.n_max)))
        else:
            for row in export.triangle_json(args.kind, args.n_max)["rows"]:
                print(" ".join(str(v) for v in row))
        return 0
    if args.format == "csv":
        sys.stdout.write(export.sequence_csv(args.kind, args.n_max))
    elif args.format == "json":
        print(json.dumps(export.sequence_json(args.kind, args.n_max)))
    else:
        for n, v in enumerate(export.sequence_json(args.kind, args.n_max)["values"]):
            print(f"{n}\t{v}")
    return 0


def cmd_poly(args) -> int:
    n, fmt = args.n, args.format
    if args.kind in ("cosine", "sine"):
        bp = (cosine_derangement(n) if args.kind == "cosine" else sine_derangement(n)).poly
        print(json.dumps(bp.to_json()) if fmt == "json" else format_bipoly(bp, fmt))
        return 0
    if args.kind == "derangement":
        p = derangement_poly(n).poly
    elif args.kind == "bell":
        p = bell_polynomial(n)
    else:
        p = fixed_point_enumerator(n)
    print(json.dumps(p.to_json("x")) if fmt == "json" else format_poly(p, "x", fmt))
    return 0


def cmd_verify(args) -> int:
    cfg = VerifyConfig(
        n_max=args.n_max,
        tolerance=args.tolerance,
        tail_terms=args.tail_terms,
        abel_n_max=min(6, args.n_max),
    )
    reports = run_all(cfg, only=args.only)
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], indent=1))
    else:
        for r in reports:
            line = f"{r.status.value.upper():4}  {r.check_id:30} {r.elapsed:7.3f}s"
            if r.max_residual is not None:
                line += f"  max residual {r.max_residual:.3g}"
            print(line)
            if r.status is Status.FAIL:
                print(f"      witness: {r.to_json()['witness']}")
        print(f"{sum(r.passed for r in reports)}/{len(reports)} checks passed")
    return 0 if all_passed(reports) else 1


def cmd_mc(args) -> int:
    est = mc_moment(float(args.p), float(args.q), args.n, args.kind, args.samples, args.seed)
    exact = exact_moment(args.p, args.q, args.n, args.kind)
    print(json.dumps({
        "n": args.n,
        "p": str(args.p),
        "q": str(args.q),
        "kind": args.kind,
        "samples": est.samples,
        "seed": est.seed,
        "mean": est.mean,
        "std_error": est.std_error,
        "exact_value": float(exact),
        "exact_value_rational": str(exact),
        "z_score": z_score(est, exact),
    }))
    return 0


def cmd_export(args) -> int:
    out = args.out_dir or export.default_out_dir()
    for path in export.export_all(out, args.n_max):
        print(path)
    return 0


COMMANDS = {"seq": cmd_seq, "poly": cmd_poly, "verify": cmd_verify, "mc": cmd_mc, "export": cmd_export}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"derangements {args.command}: error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
