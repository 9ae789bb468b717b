"""Command-line interface for the C(2n,3) polynomial computations.

Subcommands: compute (A-polynomial), rm (Riley-Mednykh polynomial),
verify (seeded numeric representation checks), newton (Newton polygon).
Exit codes: 0 on success, 1 when a verification or cross-path check fails,
2 on malformed usage.  All output is deterministic for fixed flags and
seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .apoly import apoly_substitution, apoly_theorem, newton_polygon
from .laurent import LaurentPoly
from .repcheck import sample_unit_modulus, verify_family
from .rmpoly import rm_closed, rm_recursive


def _n_values(text: str) -> list[int]:
    """Parse '3' or an inclusive range '-3..3' into the list of n values."""
    raw = text.strip()
    if ".." in raw:
        lo_text, hi_text = raw.split("..", 1)
        try:
            lo, hi = int(lo_text), int(hi_text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad n range {text!r}") from None
        if lo > hi:
            raise argparse.ArgumentTypeError(f"n range bounds out of order in {text!r}")
        return list(range(lo, hi + 1))
    try:
        return [int(raw)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad n value {text!r}") from None


def _render(poly: LaurentPoly, fmt: str) -> str:
    if fmt == "json":
        return poly.to_json()
    if fmt == "latex":
        return poly.to_latex()
    return poly.to_text()


def _emit_pair(out, n, multi, fmt, first_name, first, second_name, second, agree) -> None:
    if fmt == "json":
        doc = {
            "n": n,
            first_name: first.to_json_obj(),
            second_name: second.to_json_obj(),
            "paths_agree": agree,
        }
        out.write(json.dumps(doc, separators=(",", ":")) + "\n")
        return
    label = f"n={n} " if multi else ""
    out.write(f"{label}{first_name}: {_render(first, fmt)}\n")
    out.write(f"{label}{second_name}: {_render(second, fmt)}\n")
    out.write(f"{label}paths_agree: {'true' if agree else 'false'}\n")


def _cmd_compute(args, out) -> int:
    status = 0
    multi = len(args.n) > 1
    for n in args.n:
        if args.path == "both":
            theorem = apoly_theorem(n)
            subst = apoly_substitution(n)
            agree = theorem.poly == subst.poly
            _emit_pair(out, n, multi, args.format,
                       "theorem", theorem.poly, "substitution", subst.poly, agree)
            if not agree:
                print(f"paths disagree for n={n}", file=sys.stderr)
                status = 1
        else:
            result = apoly_theorem(n) if args.path == "theorem" else apoly_substitution(n)
            label = f"n={n}: " if multi and args.format != "json" else ""
            out.write(label + _render(result.poly, args.format) + "\n")
    return status


def _cmd_rm(args, out) -> int:
    status = 0
    multi = len(args.n) > 1
    for n in args.n:
        if args.path == "both":
            closed = rm_closed(n)
            recursive = rm_recursive(n)
            agree = closed.poly == recursive.poly
            _emit_pair(out, n, multi, args.format,
                       "closed", closed.poly, "recursive", recursive.poly, agree)
            if not agree:
                print(f"paths disagree for n={n}", file=sys.stderr)
                status = 1
        else:
            result = rm_closed(n) if args.path == "closed" else rm_recursive(n)
            label = f"n={n}: " if multi and args.format != "json" else ""
            out.write(label + _render(result.poly, args.format) + "\n")
    return status


def _cmd_verify(args, out) -> int:
    samples = sample_unit_modulus(args.samples, args.seed)
    results = []
    all_passed = True
    for n in args.n:
        if n == 0:
            results.append({"n": 0, "status": "degenerate", "reports": []})
            continue
        reports = verify_family(n, samples, args.tol)
        ok = all(r.passed for r in reports)
        all_passed = all_passed and ok
        results.append(
            {
                "n": n,
                "status": "passed" if ok else "failed",
                "reports": [r.to_json_obj() for r in reports],
            }
        )
    doc = {"seed": args.seed, "samples": args.samples, "tol": args.tol, "results": results}
    out.write(json.dumps(doc, separators=(",", ":")) + "\n")
    return 0 if all_passed else 1


def _cmd_newton(args, out) -> int:
    for n in args.n:
        out.write(newton_polygon(apoly_theorem(n)).to_json() + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="c2n3",
        description="Exact A-polynomials and Riley-Mednykh polynomials of the knots C(2n,3).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="A-polynomial A_2n(L, M)")
    compute.add_argument("--n", required=True, type=_n_values, metavar="N[..N]",
                         help="integer or inclusive range like -3..3")
    compute.add_argument("--path", choices=("theorem", "substitution", "both"),
                         default="theorem")
    compute.add_argument("--format", choices=("text", "latex", "json"), default="text")

    rm = sub.add_parser("rm", help="Riley-Mednykh polynomial P_2n(x, M)")
    rm.add_argument("--n", required=True, type=_n_values, metavar="N[..N]")
    rm.add_argument("--path", choices=("closed", "recursive", "both"), default="closed")
    rm.add_argument("--format", choices=("text", "latex", "json"), default="text")

    verify = sub.add_parser("verify", help="numeric representation checks on a seeded grid")
    verify.add_argument("--n", required=True, type=_n_values, metavar="N[..N]")
    verify.add_argument("--samples", type=int, default=20)
    verify.add_argument("--tol", type=float, default=1e-8)
    verify.add_argument("--seed", type=int, default=0)

    newton = sub.add_parser("newton", help="Newton polygon of A_2n")
    newton.add_argument("--n", required=True, type=_n_values, metavar="N[..N]")
    return parser


def _merge_n_flag(argv: list[str]) -> list[str]:
    """Join '--n VALUE' into '--n=VALUE' so ranges like -3..3 are not read as flags."""
    merged = []
    i = 0
    while i < len(argv):
        if argv[i] == "--n" and i + 1 < len(argv):
            merged.append(f"--n={argv[i + 1]}")
            i += 2
        else:
            merged.append(argv[i])
            i += 1
    return merged


def main(argv=None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_merge_n_flag(sys.argv[1:] if argv is None else list(argv)))
    if args.command == "verify":
        if args.samples < 1:
            parser.error("--samples must be at least 1")
        if args.tol <= 0:
            parser.error("--tol must be positive")
    handlers = {
        "compute": _cmd_compute,
        "rm": _cmd_rm,
        "verify": _cmd_verify,
        "newton": _cmd_newton,
    }
    return handlers[args.command](args, out if out is not None else sys.stdout)


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
