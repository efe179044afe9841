"""Independence complexes, reduced homology, Hochster's formula and face-count Hilbert series."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable

from . import kernels
from .errors import InvalidInputError, SizeLimitError
from .exactalg import ONE_MINUS_T, T, Polynomial, RationalFunction
from .hypergraph import Hypergraph

HOCHSTER_MAX_VERTICES = 20
_DENSE_LIMIT = 4_000_000


def _bits(mask: int) -> list[int]:
    out, v = [], 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex on ``range(vertex_count)`` given by its facets.

    No facets (or only the empty facet) means the complex ``{emptyset}``.
    """

    vertex_count: int
    facets: tuple[frozenset[int], ...] = ()

    def __post_init__(self):
        fs = {frozenset(f) for f in self.facets}
        for f in fs:
            if f and (min(f) < 0 or max(f) >= self.vertex_count):
                raise InvalidInputError(f"facet {sorted(f)} out of range")
        maximal = [f for f in fs if not any(f < g for g in fs)]
        maximal.sort(key=lambda f: (len(f), sorted(f)))
        object.__setattr__(self, "facets", tuple(maximal))

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def face_masks(self) -> list[int]:
        """Every face (the empty face included) as a bitmask, sorted."""
        seen: set[int] = {0}
        for f in self.facets:
            fm = _mask(f)
            sub = fm
            while True:
                seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & fm
        return sorted(seen)

    def f_vector(self) -> list[int]:
        """``f[k]`` = number of faces with ``k`` vertices, ``k = 0..dim+1``."""
        f = [0] * (self.dimension + 2)
        for m in self.face_masks():
            f[m.bit_count()] += 1
        return f

    def cone(self) -> SimplicialComplex:
        apex = self.vertex_count
        facets = [f | {apex} for f in self.facets] or [frozenset({apex})]
        return SimplicialComplex(self.vertex_count + 1, tuple(facets))

    def to_json(self) -> dict:
        return {"vertices": self.vertex_count, "facets": [sorted(f) for f in self.facets]}


@dataclass
class BettiTable:
    """Sparse graded Betti numbers; zero cells are never stored."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v}
        for (i, j), v in self.entries.items():
            if v < 0 or j < i:
                raise InvalidInputError(f"bad Betti cell ({i}, {j}) = {v}")

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __eq__(self, other):
        return isinstance(other, BettiTable) and self.entries == other.entries

    def add(self, i: int, j: int, value: int) -> None:
        v = self.entries.get((i, j), 0) + value
        if v:
            self.entries[(i, j)] = v
        else:
            self.entries.pop((i, j), None)

    def cells(self) -> list[tuple[int, int, int]]:
        return [(i, j, v) for (i, j), v in sorted(self.entries.items())]

    def totals(self) -> dict[int, int]:
        out: dict[int, int] = defaultdict(int)
        for (i, _), v in self.entries.items():
            out[i] += v
        return dict(sorted(out.items()))

    def diff(self, other: BettiTable) -> dict[tuple[int, int], tuple[int, int]]:
        """Cells where the tables differ, mapped to (self, other) values."""
        keys = set(self.entries) | set(other.entries)
        return {k: (self[k], other[k]) for k in sorted(keys) if self[k] != other[k]}

    def k_polynomial(self) -> Polynomial:
        """Sum of (-1)^i beta_{i,j} t^j: the Hilbert series numerator over (1-t)^|V|."""
        deg = max((j for _, j in self.entries), default=0)
        c = [0] * (deg + 1)
        for (i, j), v in self.entries.items():
            c[j] += -v if i % 2 else v
        return Polynomial(c)

    def to_json(self) -> dict:
        return {"entries": [{"i": i, "j": j, "value": v} for i, j, v in self.cells()]}

    @classmethod
    def from_json(cls, obj: dict) -> BettiTable:
        return cls({(int(e["i"]), int(e["j"])): int(e["value"]) for e in obj["entries"]})

    def to_text(self) -> str:
        if not self.entries:
            return "(empty)"
        rows = sorted({j - i for i, j in self.entries})
        cols = range(max(i for i, _ in self.entries) + 1)
        lines = ["     " + "".join(f"{i:>7}" for i in cols)]
        for s in rows:
            vals = "".join(f"{(self[(i, i + s)] or '-'):>7}" for i in cols)
            lines.append(f"{s:>3}: {vals}")
        return "\n".join(lines)


def independence_complex(h: Hypergraph) -> SimplicialComplex:
    full = (1 << h.vertex_count) - 1
    faces = set(kernels.independent_sets(h.vertex_count, h.edge_masks, full))
    facets = []
    for f in faces:
        if all((f | (1 << v)) not in faces for v in range(h.vertex_count) if not f >> v & 1):
            facets.append(frozenset(_bits(f)))
    return SimplicialComplex(h.vertex_count, tuple(facets))


# ---------------------------------------------------------------------------
# ranks

def _rank_rational(rows: list[dict[int, int]]) -> int:
    """Exact rank over Q by fraction-free elimination on sparse integer rows."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                pivots[c] = row
                break
            a, b = prow[c], row[c]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * v for k, v in row.items()}
            for k, v in prow.items():
                new[k] = new.get(k, 0) - b * v
            row = {k: v for k, v in new.items() if v}
            g = 0
            for v in row.values():
                g = gcd(g, v)
                if g == 1:
                    break
            if g > 1:
                row = {k: v // g for k, v in row.items()}
    return len(pivots)


def _rank_mod_p_sparse(rows: list[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                inv = pow(row[c], p - 2, p)
                pivots[c] = {k: v * inv % p for k, v in row.items()}
                break
            f = row[c]
            for k, v in prow.items():
                row[k] = (row.get(k, 0) - f * v) % p
            row = {k: v for k, v in row.items() if v}
    return len(pivots)


def matrix_rank(rows: list[dict[int, int]], ncols: int, field_char: int = 0) -> int:
    """Rank of a sparse integer matrix over Q (``field_char=0``) or GF(p)."""
    if not rows or ncols == 0:
        return 0
    if field_char == 0:
        return _rank_rational(rows)
    if len(rows) * ncols <= _DENSE_LIMIT:
        dense = [[row.get(c, 0) for c in range(ncols)] for row in rows]
        return kernels.rank_mod_p(dense, ncols, field_char)
    return _rank_mod_p_sparse(rows, field_char)


def _check_char(field_char: int) -> None:
    if field_char < 0 or field_char == 1:
        raise InvalidInputError("field characteristic must be 0 or a prime")
    if field_char > 1 and any(field_char % q == 0 for q in range(2, int(field_char ** 0.5) + 1)):
        raise InvalidInputError(f"{field_char} is not prime")


def homology_from_faces(face_masks: Iterable[int], field_char: int = 0) -> list[int]:
    """Reduced homology dimensions in degrees -1..dim of the complex with these faces.

    ``face_masks`` must be closed under taking subsets and contain the empty face.
    """
    by_size: dict[int, list[int]] = defaultdict(list)
    for m in face_masks:
        by_size[m.bit_count()].append(m)
    top = max(by_size)
    index = {k: {m: n for n, m in enumerate(sorted(by_size[k]))} for k in by_size}
    ranks = [0] * (top + 2)
    # ranks[k] = rank of the boundary from faces of size k to faces of size k-1
    for k in range(1, top + 1):
        lower = index[k - 1]
        rows: list[dict[int, int]] = []
        for m in sorted(by_size[k]):
            row = {}
            for pos, v in enumerate(_bits(m)):
                row[lower[m ^ (1 << v)]] = -1 if pos % 2 else 1
            rows.append(row)
        # rows here are columns of the boundary; rank is transpose-invariant
        ranks[k] = matrix_rank(rows, len(lower), field_char)
    return [len(by_size[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1)]


def reduced_homology_dims(k: SimplicialComplex, field_char: int = 0) -> list[int]:
    _check_char(field_char)
    return homology_from_faces(k.face_masks(), field_char)


def _dual_nerve_faces(support: int, inside: list[int]) -> list[int]:
    """Nerve of the facet cover of the Alexander dual of the induced complex on ``support``.

    Vertices are the edges inside the support; a set of them is a face when
    their union misses some vertex of the support.
    """
    k = len(inside)
    union = [0] * (1 << k)
    faces = [0]
    for a in range(1, 1 << k):
        low = a & -a
        union[a] = union[a ^ low] | inside[low.bit_length() - 1]
        if union[a] != support:
            faces.append(a)
    return faces


def _collapse_support(h: Hypergraph, support: int) -> int | None:
    """Shrink ``support`` by deleting dominated vertices; None if the complex is a cone.

    If every facet through v also contains some u != v, the link of v is a
    cone on u and deleting v is a homotopy equivalence.  Deleting a vertex
    from an induced independence complex is the same as dropping it from the
    support, so the reduced support induces a complex with the same homology.
    """
    inside = [e for e in h.edge_masks if e & support == e]
    facets = kernels.maximal_independent_sets(h.vertex_count, inside, support)
    while True:
        if facets == [0]:
            return support
        apex = support
        for f in facets:
            apex &= f
        if apex:
            return None
        for v in _bits(support):
            bit = 1 << v
            through = [f for f in facets if f & bit]
            common = support
            for f in through:
                common &= f
            if not through or common & ~bit:
                support &= ~bit
                if through:
                    cut = {f & ~bit for f in facets}
                    facets = [f for f in cut if not any(f != g and f & g == f for g in cut)]
                break
        else:
            return support


def induced_homology(h: Hypergraph, support: int, field_char: int = 0, method: str = "auto") -> dict[int, int]:
    """Nonzero reduced homology of the independence complex restricted to ``support``.

    ``direct`` builds the induced complex and ranks its boundary matrices.
    ``dual`` ranks the (usually far smaller) nerve of the Alexander dual and
    shifts degrees by combinatorial Alexander duality.  ``auto`` first deletes
    dominated vertices, then picks ``dual`` when the remaining support holds
    fewer edges than vertices and ``direct`` otherwise.
    """
    if method not in ("auto", "direct", "dual"):
        raise InvalidInputError(f"unknown homology method {method!r}")
    if method == "auto" and support:
        reduced = _collapse_support(h, support)
        if reduced is None:
            return {}
        support = reduced
    inside = [e for e in h.edge_masks if e & support == e]
    m = support.bit_count()
    if not inside:
        # full simplex on the support: acyclic unless the support is empty
        return {-1: 1} if support == 0 else {}
    use_dual = method == "dual" or (method == "auto" and len(inside) < m)
    if use_dual:
        dims = homology_from_faces(_dual_nerve_faces(support, inside), field_char)
        return {m - q - 3: d for q, d in zip(range(-1, len(dims) - 1), dims) if d}
    faces = kernels.independent_sets(h.vertex_count, inside, support)
    dims = homology_from_faces(faces, field_char)
    return {q: d for q, d in zip(range(-1, len(dims) - 1), dims) if d}


def hochster_betti(h: Hypergraph, field_char: int = 0, method: str = "auto") -> BettiTable:
    """Graded Betti numbers of the hypergraph algebra via Hochster's formula.

    beta_{i,j} sums dim H~_{j-i-1} of the induced independence complex over
    vertex subsets of size j.  Supports with a vertex in no edge inside the
    support induce cones and are skipped by the subset scan.
    """
    _check_char(field_char)
    if h.vertex_count > HOCHSTER_MAX_VERTICES:
        raise SizeLimitError(f"Hochster enumeration capped at {HOCHSTER_MAX_VERTICES} vertices, got {h.vertex_count}")
    table = BettiTable()
    for support in kernels.covered_supports(h.vertex_count, h.edge_masks):
        j = support.bit_count()
        for q, dim in induced_homology(h, support, field_char, method).items():
            table.add(j - q - 1, j, dim)
    return table


def hilbert_from_complex(k: SimplicialComplex) -> RationalFunction:
    """Sum over faces F of (t/(1-t))^|F|."""
    f = k.f_vector()
    top = len(f) - 1
    num = Polynomial()
    for size, count in enumerate(f):
        num = num + count * (T ** size) * (ONE_MINUS_T ** (top - size))
    return RationalFunction(num, ONE_MINUS_T ** top)
