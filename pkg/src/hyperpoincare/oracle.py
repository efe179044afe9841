"""Brute-force ground truth and verification reports."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence, Union

from . import closedforms as cf
from . import kernels
from .complex import HOCHSTER_MAX_VERTICES, BettiTable, hochster_betti
from .errors import AdjudicationError, SizeLimitError, UnsupportedParameterError
from .exactalg import ONE_MINUS_T, Polynomial, RationalFunction, cauchy_product, eval_at_rational, series_expand
from .hypergraph import FamilySpec, Hypergraph, build_family
from .ledger import recorded_wheel_cells

BRUTEFORCE_MAX_VERTICES = 24
BRUTEFORCE_MAX_ORDER = 30


@dataclass
class VerificationReport:
    subject: str
    checks: list[tuple[str, bool, object, object]] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _, _ in self.checks)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def check(self, description: str, expected, actual) -> bool:
        ok = expected == actual
        self.checks.append((description, ok, expected, actual))
        return ok

    def failures(self) -> list[tuple[str, bool, object, object]]:
        return [c for c in self.checks if not c[1]]

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "checks": [
                {"description": d, "pass": ok, "expected": _jsonable(e), "actual": _jsonable(a)}
                for d, ok, e, a in self.checks
            ],
            "details": _jsonable(self.details),
            "verdict": self.verdict,
        }

    def to_text(self) -> str:
        lines = [f"{self.subject}: {self.verdict.upper()} ({len(self.checks) - len(self.failures())}/{len(self.checks)})"]
        for d, ok, e, a in self.checks:
            if not ok:
                lines.append(f"  FAIL {d}: expected {e}, got {a}")
        return "\n".join(lines)


def _jsonable(x):
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if hasattr(x, "to_json"):
        return x.to_json()
    return str(x)


# ---------------------------------------------------------------------------
# brute-force Hilbert series


def hilbert_bruteforce(h: Hypergraph, order: int) -> list[int]:
    """Count degree-k monomials whose support contains no edge, k = 0..order.

    A support F with |F| = s >= 1 carries C(k-1, s-1) monomials of degree k, so
    only the number of edge-free supports of each size is needed.
    """
    if h.vertex_count > BRUTEFORCE_MAX_VERTICES:
        raise SizeLimitError(f"monomial counting capped at {BRUTEFORCE_MAX_VERTICES} vertices")
    if order > BRUTEFORCE_MAX_ORDER or order < 0:
        raise SizeLimitError(f"order must lie in 0..{BRUTEFORCE_MAX_ORDER}")
    return _bruteforce_coeffs(h, order)


def _bruteforce_coeffs(h: Hypergraph, order: int) -> list[int]:
    f = kernels.face_numbers(h.vertex_count, h.edge_masks, (1 << h.vertex_count) - 1)
    out = [1]
    for k in range(1, order + 1):
        out.append(sum(f[s] * comb(k - 1, s - 1) for s in range(1, len(f))))
    return out


def bruteforce_hilbert_series(h: Hypergraph) -> RationalFunction:
    """Rational Hilbert series rebuilt from brute-force counts.

    The numerator over (1-t)^|V| has degree at most |V|, so counts up to that
    degree pin it down; a few extra coefficients confirm the tail vanishes.
    """
    if h.vertex_count > BRUTEFORCE_MAX_VERTICES:
        raise SizeLimitError(f"monomial counting capped at {BRUTEFORCE_MAX_VERTICES} vertices")
    nv = h.vertex_count
    coeffs = _bruteforce_coeffs(h, nv + 3)
    prod = cauchy_product((ONE_MINUS_T ** nv).coeffs + (0,) * (len(coeffs)), coeffs, nv + 3)
    if any(prod[nv + 1:]):
        raise AssertionError("brute-force counts are not a rational series over (1-t)^|V|")
    return RationalFunction(Polynomial(prod[: nv + 1]), ONE_MINUS_T ** nv)


# ---------------------------------------------------------------------------
# identity checks


def verify_koszul_identity(
    p: RationalFunction, h: Union[RationalFunction, Sequence[int]], order: int
) -> VerificationReport:
    """Check that P(t) H(-t) = 1 up to t^order.

    ``h`` may be a rational function or a list of Hilbert coefficients (e.g.
    from :func:`hilbert_bruteforce`) of length at least ``order + 1``.
    """
    report = VerificationReport(f"Koszul identity P(t) H(-t) = 1 to order {order}")
    pc = series_expand(p, order)
    if isinstance(h, RationalFunction):
        hc = series_expand(h.reflect(), order)
    else:
        hc = [c if k % 2 == 0 else -c for k, c in enumerate(h[: order + 1])]
    prod = cauchy_product(pc, hc, order)
    for k, c in enumerate(prod):
        report.check(f"coefficient of t^{k}", 1 if k == 0 else 0, c)
    return report


def fibonacci(n: int) -> int:
    """F_n with F_0 = F_1 = 1."""
    a, b = 1, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def verify_fibonacci(n_max: int) -> VerificationReport:
    report = VerificationReport(f"H_{{L_n}}(1/2) = F_(n+2) for 0 <= n <= {n_max}")
    for n in range(n_max + 1):
        val = eval_at_rational(cf.hilbert_line_closed(n).series, Fraction(1, 2))
        report.check(f"n={n}", Fraction(fibonacci(n + 2)), val)
    return report


def resolve_recursion_sign(n_max: int, order: int = 20) -> VerificationReport:
    """Decide between the printed and corrected cycle formulas by brute force.

    For every 3 <= n <= n_max, each Hilbert-recursion variant is compared with
    monomial counts of C_n, and each Poincare-denominator variant is tested
    with the Koszul identity against those counts.  Exactly one variant per
    formula must survive.
    """
    if n_max < 6:
        raise ValueError("n_max must be at least 6")
    report = VerificationReport(f"cycle formula adjudication, 3 <= n <= {n_max}")
    counts = {n: hilbert_bruteforce(build_family(FamilySpec("cycle-graph", n)), order) for n in range(3, n_max + 1)}
    matches: dict[str, dict[str, list[int]]] = {"hilbert-cycle-recursion": {}, "cycle-poincare-denominator": {}}
    for variant in cf.VARIANTS:
        h_ok, p_ok = [], []
        for n in range(3, n_max + 1):
            h = cf.hilbert_cycle_closed(n, variant).series
            if h.is_power_series() and series_expand(h, order) == counts[n]:
                h_ok.append(n)
            p = cf.poincare_cycle_graph(n, variant).series
            if p.is_power_series() and verify_koszul_identity(p, counts[n], order).passed:
                p_ok.append(n)
        matches["hilbert-cycle-recursion"][variant] = h_ok
        matches["cycle-poincare-denominator"][variant] = p_ok

    every = list(range(3, n_max + 1))
    selected = {}
    for formula, by_variant in matches.items():
        winners = [v for v, ns in by_variant.items() if ns == every]
        if len(winners) != 1:
            raise AdjudicationError(f"{formula}: variants consistent everywhere: {winners}")
        selected[formula] = winners[0]
        report.check(f"{formula}: exactly one variant matches every n", 1, len(winners))
        for v, ns in by_variant.items():
            report.details.setdefault(formula, {})[v] = {"matching_n": ns}
    report.details["selected"] = selected
    return report


# ---------------------------------------------------------------------------
# Betti cross-checks


def closed_betti(spec: FamilySpec) -> BettiTable:
    kind = spec.kind
    if spec.family == "wheel":
        return cf.betti_wheel_closed(spec.n)
    if kind == "hyperstar":
        return cf.betti_star_closed(spec.n, spec.d, spec.alpha)
    if 2 * spec.alpha >= spec.d:
        raise UnsupportedParameterError(f"no closed Betti table for {spec.family} with 2*alpha >= d")
    if kind == "hyperline":
        return cf.betti_hyperline_closed(spec.n, spec.d, spec.alpha)
    return cf.betti_hypercycle_closed(spec.n, spec.d, spec.alpha)


def crosscheck_betti(spec: FamilySpec, field_char: int = 0) -> VerificationReport:
    h = build_family(spec)
    if h.vertex_count > HOCHSTER_MAX_VERTICES:
        raise SizeLimitError(f"{spec} has {h.vertex_count} vertices; Hochster cap is {HOCHSTER_MAX_VERTICES}")
    report = VerificationReport(f"Betti cross-check {spec.family} n={spec.n} d={spec.d} alpha={spec.alpha}")
    hb = hochster_betti(h, field_char)
    closed = closed_betti(spec)
    report.details["hochster"] = hb
    report.details["closed"] = closed
    if spec.family != "wheel":
        for (i, j) in sorted(set(hb.entries) | set(closed.entries)):
            report.check(f"beta_{{{i},{j}}}", hb[(i, j)], closed[(i, j)])
        return report

    composed = cf.betti_wheel_compose(spec.n, field_char)
    report.details["composed"] = composed
    for (i, j) in sorted(set(hb.entries) | set(composed.entries)):
        report.check(f"composed beta_{{{i},{j}}}", hb[(i, j)], composed[(i, j)])
    recorded = recorded_wheel_cells(spec.n)
    diff = closed.diff(hb)
    report.details["closed_disagreements"] = {f"{i},{j}": v for (i, j), v in diff.items()}
    report.check("closed table disagreements are exactly the recorded ones", recorded, diff)
    return report
