"""General Poincare-series engines: Koszul reciprocal, Golod bound, Froberg's formula.

The disjoint-path enumerator produces the bigraded counts Froberg's formula
needs for hyperlines and hypercycles whose Taylor resolution is minimal.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Sequence

from . import kernels
from .errors import InvalidInputError, InvalidSeriesError, RangeError, SizeLimitError
from .exactalg import ONE_PLUS_T, Polynomial, RationalFunction, series_expand

MAX_GENERATORS = 20
MAX_PATH_EDGES = 20


@dataclass
class BigradedCounts:
    """(r, w) -> number of surviving Koszul-homology monomials.

    ``r`` is the number of path classes multiplied together and ``w`` their
    total homological weight (edge count).  ``(0, 0)`` is the unit class.
    """

    counts: dict[tuple[int, int], int] = field(default_factory=lambda: {(0, 0): 1})

    def __post_init__(self):
        self.counts = {k: v for k, v in self.counts.items() if v}
        if self.counts.get((0, 0)) != 1:
            raise InvalidInputError("the unit class (0, 0) must have count 1")
        for (r, w), v in self.counts.items():
            if (r, w) != (0, 0) and (r < 1 or w < r or v < 0):
                raise InvalidInputError(f"bad bigraded cell ({r}, {w}) = {v}")

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.counts.get(key, 0)

    def cells(self) -> list[tuple[int, int, int]]:
        return [(r, w, v) for (r, w), v in sorted(self.counts.items())]

    def to_json(self) -> dict:
        return {"counts": [{"r": r, "w": w, "value": v} for r, w, v in self.cells()]}

    @classmethod
    def from_json(cls, obj: dict) -> BigradedCounts:
        return cls({(int(c["r"]), int(c["w"])): int(c["value"]) for c in obj["counts"]})


def koszul_poincare(h_series: RationalFunction) -> RationalFunction:
    """1 / H(-t).  The caller vouches that the algebra is Koszul."""
    if not h_series.is_power_series() or series_expand(h_series, 0)[0] != 1:
        raise InvalidSeriesError(f"Hilbert series must have constant term 1: {h_series}")
    return h_series.reflect().reciprocal()


def golod_poincare(embdim: int, total_betti: Sequence[int]) -> RationalFunction:
    """(1+t)^embdim / (1 - sum_i beta_i t^(i+1)); ``total_betti[k]`` is beta_(k+1)."""
    if embdim < 1:
        raise InvalidInputError("embedding dimension must be positive")
    if not total_betti or any(b < 0 for b in total_betti):
        raise InvalidInputError("need a nonempty list of nonnegative Betti numbers")
    den = [1, 0] + [-b for b in total_betti]
    return RationalFunction(ONE_PLUS_T ** embdim, Polynomial(den))


def _runs(subset: int, n: int, cyclic: bool) -> int:
    """Number of maximal runs of consecutive edge indices in ``subset``."""
    full = (1 << n) - 1
    if cyclic:
        if subset == full:
            return 1
        rotated = ((subset << 1) | (subset >> (n - 1))) & full
    else:
        rotated = (subset << 1) & full
    # a run starts at every set bit whose predecessor is unset
    return (subset & ~rotated).bit_count()


def disjoint_path_counts(shape: str, n: int) -> BigradedCounts:
    """Count families of pairwise vertex-disjoint paths in a line or cycle of ``n`` edges.

    A family of r non-touching index intervals with total length w is the same
    thing as a w-subset of edge indices splitting into r maximal runs, so the
    enumeration walks all edge subsets.
    """
    if shape not in ("line", "cycle"):
        raise InvalidInputError(f"shape must be 'line' or 'cycle', got {shape!r}")
    if n < (3 if shape == "cycle" else 1):
        raise RangeError(f"{shape} needs more edges, got n={n}")
    if n > MAX_PATH_EDGES:
        raise SizeLimitError(f"path enumeration capped at {MAX_PATH_EDGES} edges")
    cyclic = shape == "cycle"
    counts: dict[tuple[int, int], int] = defaultdict(int)
    counts[(0, 0)] = 1
    for s in range(1, 1 << n):
        counts[(_runs(s, n, cyclic), s.bit_count())] += 1
    return BigradedCounts(dict(counts))


def froberg_denominator(counts: BigradedCounts, top_cycle_term: int | None = None) -> Polynomial:
    """sum counts(r, w) (-1)^r t^(w+r); ``top_cycle_term=n`` adds an extra -t^(n+1)."""
    terms = dict(counts.counts)
    if top_cycle_term is not None:
        terms[(1, top_cycle_term)] = terms.get((1, top_cycle_term), 0) + 1
    c = [0] * (max(w + r for r, w in terms) + 1)
    for (r, w), v in terms.items():
        c[w + r] += -v if r % 2 else v
    return Polynomial(c)


def froberg_poincare(embdim: int, counts: BigradedCounts, top_cycle_term: int | None = None) -> RationalFunction:
    """(1+t)^embdim / H(-t, t) for a ring whose Taylor resolution is minimal."""
    if embdim < 1:
        raise InvalidInputError("embedding dimension must be positive")
    den = froberg_denominator(counts, top_cycle_term)
    if den[0] == 0:
        raise InvalidSeriesError("bigraded denominator has zero constant term")
    return RationalFunction(ONE_PLUS_T ** embdim, den)


def taylor_is_minimal(generators: Sequence[frozenset[int]]) -> bool:
    if len(generators) > MAX_GENERATORS:
        raise SizeLimitError(f"Taylor minimality check capped at {MAX_GENERATORS} generators")
    masks = [sum(1 << v for v in g) for g in generators]
    if len(set(masks)) != len(masks):
        raise InvalidInputError("generators must be distinct")
    return kernels.taylor_minimal(masks)
