"""Closed-form Hilbert series, Poincare series and Betti tables of the hypergraph families.

Disputed printed formulas are reachable with ``variant="printed"``; the
default ``"corrected"`` variants are the ones that agree with brute force
(see ``oracle.resolve_recursion_sign`` and ``ledger``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .complex import BettiTable, hochster_betti
from .errors import InvalidInputError, RangeError, UnsupportedParameterError
from .exactalg import ONE, ONE_MINUS_T, ONE_PLUS_T, T, Polynomial, RationalFunction
from .hypergraph import FamilySpec, build_family

VARIANTS = ("corrected", "printed")

_T = RationalFunction(T)
_T_OVER_1MT = RationalFunction(T, ONE_MINUS_T)
_1PT = RationalFunction(ONE_PLUS_T)


@dataclass(frozen=True)
class SeriesResult:
    series: RationalFunction
    provenance: str
    notes: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        out = self.series.to_json()
        out["provenance"] = self.provenance
        out["notes"] = list(self.notes)
        return out


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise InvalidInputError(f"variant must be one of {VARIANTS}, got {variant!r}")


def _base_notes(n: int, lowest: int) -> tuple[str, ...]:
    if n - lowest <= 1:
        return ("base case L_{-1} = k (H = P = 1)",)
    return ()


# ---------------------------------------------------------------------------
# Hilbert series of graph algebras


@lru_cache(maxsize=None)
def _hilbert_line(n: int) -> RationalFunction:
    if n == -1:
        return RationalFunction(ONE)
    if n == 0:
        return RationalFunction(ONE, ONE_MINUS_T)
    if n == 1:
        return RationalFunction(ONE_PLUS_T, ONE_MINUS_T)
    return _hilbert_line(n - 1) + _T_OVER_1MT * _hilbert_line(n - 2)


def hilbert_line_closed(n: int) -> SeriesResult:
    if n < -1:
        raise RangeError(f"line index must be >= -1, got {n}")
    notes = ("L_{-1} denotes the field k",) if n == -1 else ()
    return SeriesResult(_hilbert_line(n), "line recursion H_n = H_{n-1} + t/(1-t) H_{n-2}", notes)


def hilbert_cycle_closed(n: int, variant: str = "corrected") -> SeriesResult:
    _check_variant(variant)
    if n < 3:
        raise RangeError(f"cycle needs n >= 3, got {n}")
    tail = _T_OVER_1MT * _hilbert_line(n - 4)
    if variant == "corrected":
        series = _hilbert_line(n - 2) + tail
        prov = "cycle recursion H_{C_n} = H_{L_{n-2}} + t/(1-t) H_{L_{n-4}}"
    else:
        series = _hilbert_line(n - 2) - tail
        prov = "printed cycle recursion H_{C_n} = H_{L_{n-2}} - t/(1-t) H_{L_{n-4}}"
    notes = ("base case L_{-1} = k (H = 1)",) if n == 3 else ()
    return SeriesResult(series, prov, notes)


def hilbert_wheel_closed(n: int, variant: str = "corrected") -> SeriesResult:
    if n < 3:
        raise RangeError(f"wheel needs n >= 3, got {n}")
    cyc = hilbert_cycle_closed(n, variant)
    return SeriesResult(cyc.series + _T_OVER_1MT, "H_{W_n} = H_{C_n} + t/(1-t)", cyc.notes)


# ---------------------------------------------------------------------------
# Poincare series of graph algebras


@lru_cache(maxsize=None)
def _poincare_line(n: int) -> RationalFunction:
    if n == -1:
        return RationalFunction(ONE)
    if n == 0:
        return _1PT
    if n == 1:
        return RationalFunction(ONE_PLUS_T, ONE_MINUS_T)
    p1, p2 = _poincare_line(n - 1), _poincare_line(n - 2)
    return _1PT * p1 * p2 / (_1PT * p2 - _T * p1)


def poincare_line_graph(n: int) -> SeriesResult:
    if n < -1:
        raise RangeError(f"line index must be >= -1, got {n}")
    return SeriesResult(
        _poincare_line(n),
        "line recursion P_n = (1+t) P_{n-1} P_{n-2} / ((1+t) P_{n-2} - t P_{n-1})",
        _base_notes(n, -1) if n <= 0 else (),
    )


def poincare_cycle_graph(n: int, variant: str = "corrected") -> SeriesResult:
    _check_variant(variant)
    if n < 3:
        raise RangeError(f"cycle needs n >= 3, got {n}")
    a, b = _poincare_line(n - 2), _poincare_line(n - 4)
    if variant == "corrected":
        series = _1PT * a * b / (_1PT * b - _T * a)
        prov = "cycle formula P_{C_n} = (1+t) P_{L_{n-2}} P_{L_{n-4}} / ((1+t) P_{L_{n-4}} - t P_{L_{n-2}})"
    else:
        series = _1PT * a * b / (a + _1PT * b)
        prov = "printed cycle formula P_{C_n} = (1+t) P_{L_{n-2}} P_{L_{n-4}} / (P_{L_{n-2}} + (1+t) P_{L_{n-4}})"
    notes = ("base case L_{-1} = k (P = 1)",) if n == 3 else ()
    return SeriesResult(series, prov, notes)


def poincare_wheel(n: int, variant: str = "corrected") -> SeriesResult:
    if n < 3:
        raise RangeError(f"wheel needs n >= 3, got {n}")
    pc = poincare_cycle_graph(n, variant)
    p = pc.series
    return SeriesResult(p * _1PT / (_1PT - _T * p), "P_{W_n} = P_{C_n} (1+t) / (1 + t - t P_{C_n})", pc.notes)


# ---------------------------------------------------------------------------
# hyperlines, hypercycles, hyperstars


def _check_overlap(n: int, d: int, alpha: int, min_n: int) -> None:
    if n < min_n or d < 2 or not 1 <= alpha < d:
        raise RangeError(f"invalid parameters n={n}, d={d}, alpha={alpha}")
    if 2 * alpha > d:
        raise UnsupportedParameterError(f"2*alpha > d ({alpha=}, {d=}) is not supported")


def line_denominator_terms(n: int) -> dict[tuple[int, int], int]:
    """(r, i) -> multiplicity C(i-1, r-1) C(n-i+1, r) of r disjoint paths with i edges in total."""
    return {
        (r, i): comb(i - 1, r - 1) * comb(n - i + 1, r)
        for i in range(1, n + 1)
        for r in range(1, i + 1)
        if comb(n - i + 1, r)
    }


def cycle_denominator_terms(n: int) -> dict[tuple[int, int], int]:
    """(r, i) -> (n/r) C(i-1, r-1) C(n-i-1, r-1) for i < n, plus the full cycle at (1, n)."""
    out = {}
    for i in range(1, n):
        for r in range(1, i + 1):
            v = Fraction(n, r) * comb(i - 1, r - 1) * comb(n - i - 1, r - 1)
            if v:
                if v.denominator != 1:
                    raise AssertionError(f"non-integral path count at {(r, i)}: {v}")
                out[(r, i)] = int(v)
    out[(1, n)] = 1
    return out


def _signed_denominator(terms: dict[tuple[int, int], int]) -> Polynomial:
    c = [0] * (max(i + r for r, i in terms) + 1)
    c[0] = 1
    for (r, i), v in terms.items():
        c[i + r] += -v if r % 2 else v
    return Polynomial(c)


def free_vertex_denominator(shape: str, n: int) -> Polynomial:
    """Denominator of the 2*alpha < d series, straight from the binomial path counts."""
    if shape == "line":
        if n < 1:
            raise RangeError(f"line needs n >= 1, got {n}")
        return _signed_denominator(line_denominator_terms(n))
    if shape == "cycle":
        if n < 3:
            raise RangeError(f"cycle needs n >= 3, got {n}")
        return _signed_denominator(cycle_denominator_terms(n))
    raise InvalidInputError(f"shape must be 'line' or 'cycle', got {shape!r}")


def poincare_hyperline(n: int, d: int, alpha: int) -> SeriesResult:
    _check_overlap(n, d, alpha, 1)
    if d == 2 * alpha:
        shift = (n + 1) * (alpha - 1)
        series = RationalFunction(ONE_PLUS_T ** shift) * _poincare_line(n)
        return SeriesResult(series, f"(1+t)^{shift} P_{{L_{n}}} (linear regular sequence of length {shift})")
    num = ONE_PLUS_T ** (n * (d - alpha) + alpha)
    den = free_vertex_denominator("line", n)
    return SeriesResult(RationalFunction(num, den), "free-vertex hyperline formula over disjoint paths")


def poincare_hypercycle(n: int, d: int, alpha: int) -> SeriesResult:
    _check_overlap(n, d, alpha, 3)
    if d == 2 * alpha:
        shift = n * (alpha - 1)
        series = RationalFunction(ONE_PLUS_T ** shift) * poincare_cycle_graph(n).series
        return SeriesResult(series, f"(1+t)^{shift} P_{{C_{n}}} (linear regular sequence of length {shift})")
    num = ONE_PLUS_T ** (n * (d - alpha))
    den = free_vertex_denominator("cycle", n)
    return SeriesResult(
        RationalFunction(num, den),
        "free-vertex hypercycle formula over disjoint arcs",
        ("the full cycle contributes the -t^{n+1} term",),
    )


def poincare_hyperstar(n: int, d: int, alpha: int) -> SeriesResult:
    if n < 1 or d < 2 or not 1 <= alpha < d:
        raise RangeError(f"invalid star parameters n={n}, d={d}, alpha={alpha}")
    num = ONE_PLUS_T ** (n * (d - alpha) + alpha)
    den = [1, 0] + [-comb(n, i) for i in range(1, n + 1)]
    return SeriesResult(
        RationalFunction(num, Polynomial(den)),
        "Golod series (1+t)^|V| / (1 - sum C(n,i) t^{i+1})",
        ("vertex count taken as n(d-alpha)+alpha",),
    )


# ---------------------------------------------------------------------------
# Betti tables


def _quotient_table() -> BettiTable:
    return BettiTable({(0, 0): 1})


def _check_free_vertex(n: int, d: int, alpha: int, min_n: int) -> None:
    if n < min_n or d < 2 or alpha < 1:
        raise RangeError(f"invalid parameters n={n}, d={d}, alpha={alpha}")
    if 2 * alpha >= d:
        raise UnsupportedParameterError("closed Betti formulas need 2*alpha < d")


def betti_hyperline_closed(n: int, d: int, alpha: int) -> BettiTable:
    _check_free_vertex(n, d, alpha, 1)
    table = _quotient_table()
    for (r, i), v in line_denominator_terms(n).items():
        table.add(i, d * i - (i - r) * alpha, v)
    return table


def betti_hypercycle_closed(n: int, d: int, alpha: int) -> BettiTable:
    _check_free_vertex(n, d, alpha, 3)
    table = _quotient_table()
    for (r, i), v in cycle_denominator_terms(n).items():
        if i < n:
            table.add(i, d * i - (i - r) * alpha, v)
    table.add(n, n * (d - alpha), 1)
    return table


def betti_star_closed(n: int, d: int, alpha: int) -> BettiTable:
    if n < 1 or d < 2 or not 1 <= alpha < d:
        raise RangeError(f"invalid star parameters n={n}, d={d}, alpha={alpha}")
    table = _quotient_table()
    for i in range(1, n + 1):
        table.add(i, alpha + i * (d - alpha), comb(n, i))
    return table


def _wheel_general_cell(n: int, i: int, j: int) -> Fraction:
    k = j - i
    if n - 2 * k <= 0:
        return Fraction(0)
    if 2 * i - j < 0:
        return Fraction(0)
    return Fraction(n, n - 2 * k) * comb(n - 2 * k, k) * comb(k - 1, 2 * i - j)


def betti_wheel_closed(n: int) -> BettiTable:
    """Wheel Betti numbers exactly as the published closed form states them.

    Linear strand: n C(2, i-1) + C(n, i), with the listed n = 3, 4
    exceptions.  Other strands: the general quotient formula with the listed
    top-degree exceptions by n mod 3, applied only to cells with j > i + 1.
    Known disagreements with Hochster are recorded in ``ledger``.
    """
    if n < 3:
        raise RangeError(f"wheel needs n >= 3, got {n}")
    table = _quotient_table()
    linear = {i: n * comb(2, i - 1) + comb(n, i) for i in range(1, n + 1)}
    if n == 3:
        linear.update({2: 8, 3: 3})
    elif n == 4:
        linear.update({3: 9, 4: 2})
    for i, v in linear.items():
        table.add(i, i + 1, v)

    nonlinear: dict[tuple[int, int], Fraction] = {}
    for j in range(3, n + 2):
        for i in range(1, j - 1):
            v = _wheel_general_cell(n, i, j)
            if v:
                nonlinear[(i, j)] = v
    m, rem = divmod(n, 3)
    if rem == 0:
        top = {(2 * m, n): 3 * m + 2, (2 * m + 1, n + 1): 2}
    elif rem == 1:
        top = {(2 * m + 1, n): 3 * m + 2, (2 * m + 2, n + 1): 1}
    else:
        top = {(2 * m, n): 1, (2 * m + 1, n + 1): 1}
    for (i, j), v in top.items():
        if j > i + 1:
            nonlinear[(i, j)] = Fraction(v)
    for (i, j), v in nonlinear.items():
        if v.denominator != 1:
            raise AssertionError(f"non-integral wheel Betti value at {(i, j)}: {v}")
        table.add(i, j, int(v))
    return table


def betti_wheel_compose(n: int, field_char: int = 0) -> BettiTable:
    """Wheel table assembled from the Hochster table of the rim cycle.

    beta_{i,j}(W) = beta_{i,j}(C) + beta_{i-1,j-1}(C), plus C(n, i) on the
    linear strand j = i + 1.
    """
    if n < 3:
        raise RangeError(f"wheel needs n >= 3, got {n}")
    cyc = hochster_betti(build_family(FamilySpec("cycle-graph", n)), field_char)
    table = _quotient_table()
    for (i, j), v in cyc.entries.items():
        if (i, j) != (0, 0):
            table.add(i, j, v)
            table.add(i + 1, j + 1, v)
    for i in range(1, n + 1):
        table.add(i, i + 1, comb(n, i))
    return table
