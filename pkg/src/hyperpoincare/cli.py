"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 size limit.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import closedforms as cf
from . import oracle
from .complex import hilbert_from_complex, hochster_betti, independence_complex
from .errors import HyperPoincareError, SizeLimitError
from .exactalg import Polynomial, RationalFunction, series_expand
from .hypergraph import FAMILIES, FamilySpec, build_family
from .ledger import TYPO_LEDGER, ledger_json, recorded_wheel_cells

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SIZE = 0, 1, 2, 3


def _spec(args) -> FamilySpec:
    if args.family is None or args.n is None:
        raise HyperPoincareError("--family and --n are required")
    return FamilySpec(args.family, args.n, args.d, args.alpha)


def family_series(spec: FamilySpec, variant: str = "corrected") -> tuple[cf.SeriesResult, cf.SeriesResult]:
    """(Hilbert, Poincare) results for a family instance."""
    h = build_family(spec)
    n, d, a = spec.n, spec.d, spec.alpha
    if spec.family == "line-graph":
        return cf.hilbert_line_closed(n), cf.poincare_line_graph(n)
    if spec.family == "cycle-graph":
        return cf.hilbert_cycle_closed(n, variant), cf.poincare_cycle_graph(n, variant)
    if spec.family == "wheel":
        return cf.hilbert_wheel_closed(n, variant), cf.poincare_wheel(n, variant)
    hilbert = cf.SeriesResult(hilbert_from_complex(independence_complex(h)), "face count of the independence complex")
    if spec.family == "hyperline":
        return hilbert, cf.poincare_hyperline(n, d, a)
    if spec.family == "hypercycle":
        return hilbert, cf.poincare_hypercycle(n, d, a)
    return hilbert, cf.poincare_hyperstar(n, d, a)


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _spec_json(spec: FamilySpec) -> dict:
    return {"family": spec.family, "n": spec.n, "d": spec.d, "alpha": spec.alpha}


def cmd_series(args) -> int:
    spec = _spec(args)
    hil, poi = family_series(spec, args.variant)
    payload = {"spec": _spec_json(spec), "hilbert": hil.to_json(), "poincare": poi.to_json()}
    text = "\n".join(
        [
            f"{spec.family} n={spec.n} d={spec.d} alpha={spec.alpha}",
            f"H(t) = {hil.series}    [{hil.provenance}]",
            f"P(t) = {poi.series}    [{poi.provenance}]",
        ]
        + [f"note: {x}" for x in hil.notes + poi.notes]
    )
    _emit(args, payload, text)
    return EXIT_OK


def cmd_betti(args) -> int:
    spec = _spec(args)
    h = build_family(spec)
    payload: dict = {"spec": _spec_json(spec)}
    lines = [f"{spec.family} n={spec.n} d={spec.d} alpha={spec.alpha}"]
    closed = hoch = None
    if args.method in ("closed", "both"):
        closed = oracle.closed_betti(spec)
        payload["closed"] = closed.to_json()
        lines += ["closed form:", closed.to_text()]
    if args.method in ("hochster", "both"):
        hoch = hochster_betti(h, args.field_char)
        payload["hochster"] = hoch.to_json()
        lines += [f"Hochster (char {args.field_char}):", hoch.to_text()]
    if closed is not None and hoch is not None:
        diff = closed.diff(hoch)
        payload["agree"] = not diff
        payload["disagreements"] = [{"i": i, "j": j, "closed": a, "hochster": b} for (i, j), (a, b) in diff.items()]
        lines.append("closed and Hochster agree" if not diff else f"disagreements (closed, hochster): {diff}")
        if diff and spec.family == "wheel" and recorded_wheel_cells(spec.n) == diff:
            lines.append("all disagreements are recorded in the typo ledger")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_expand(args) -> int:
    if args.num is not None:
        f = RationalFunction(Polynomial(tuple(args.num)), Polynomial(tuple(args.den or [1])))
        label = "f"
    else:
        hil, poi = family_series(_spec(args), args.variant)
        f = (hil if args.series == "hilbert" else poi).series
        label = "H" if args.series == "hilbert" else "P"
    coeffs = series_expand(f, args.order)
    payload = {"series": f.to_json(), "order": args.order, "coefficients": [str(c) for c in coeffs]}
    _emit(args, payload, f"{label}(t) = {f}\n" + " ".join(str(c) for c in coeffs))
    return EXIT_OK


def _koszul_suite(n_max: int, order: int) -> list[oracle.VerificationReport]:
    reports = []
    for n in range(3, n_max + 1):
        for fam, closed in (
            ("line-graph", cf.poincare_line_graph),
            ("cycle-graph", cf.poincare_cycle_graph),
            ("wheel", cf.poincare_wheel),
        ):
            counts = oracle.hilbert_bruteforce(build_family(FamilySpec(fam, n)), order)
            rep = oracle.verify_koszul_identity(closed(n).series, counts, order)
            rep.subject = f"{fam} n={n}: " + rep.subject
            reports.append(rep)
    return reports


def cmd_verify(args) -> int:
    reports: list[oracle.VerificationReport] = []
    suites = ["koszul", "fibonacci", "sign"] if args.suite == "all" else [args.suite]
    for suite in suites:
        if suite == "koszul":
            reports += _koszul_suite(args.n_max, args.order)
        elif suite == "fibonacci":
            reports.append(oracle.verify_fibonacci(args.n_max))
        elif suite == "sign":
            reports.append(oracle.resolve_recursion_sign(max(args.n_max, 6)))
        elif suite == "betti":
            reports.append(oracle.crosscheck_betti(_spec(args), args.field_char))
    ok = all(r.passed for r in reports)
    payload = {"verdict": "pass" if ok else "fail", "reports": [r.to_json() for r in reports]}
    text = "\n".join(r.to_text() for r in reports) + f"\nOVERALL: {'PASS' if ok else 'FAIL'}"
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_ledger(args) -> int:
    if args.format == "json":
        print(ledger_json())
    else:
        for e in TYPO_LEDGER:
            print(f"[{e['id']}]\n  printed: {e['printed']}\n  adopted: {e['adopted']}\n  check:   {e['adjudicated_by']}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperpoincare", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def family_flags(p, required=True):
        p.add_argument("--family", choices=FAMILIES, required=required)
        p.add_argument("--n", type=int, required=required)
        p.add_argument("--d", type=int, default=2)
        p.add_argument("--alpha", type=int, default=1)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--variant", choices=cf.VARIANTS, default="corrected")
        p.add_argument("--field-char", type=int, default=0)

    p = sub.add_parser("series", help="Hilbert and Poincare series of a family instance")
    family_flags(p)
    common(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("betti", help="graded Betti table")
    family_flags(p)
    common(p)
    p.add_argument("--method", choices=("closed", "hochster", "both"), default="both")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("expand", help="power-series coefficients")
    family_flags(p, required=False)
    common(p)
    p.add_argument("--series", choices=("hilbert", "poincare"), default="poincare")
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--num", type=int, nargs="+", help="numerator coefficients, ascending")
    p.add_argument("--den", type=int, nargs="+", help="denominator coefficients, ascending")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="run an oracle suite")
    family_flags(p, required=False)
    common(p)
    p.add_argument("--suite", choices=("koszul", "fibonacci", "sign", "betti", "all"), default="all")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--order", type=int, default=12)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ledger", help="print the typo ledger")
    p.add_argument("--format", choices=("text", "json"), default="json")
    p.set_defaults(func=cmd_ledger)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"size limit: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except HyperPoincareError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
