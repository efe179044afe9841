"""Uniform hypergraph families and their edge ideals.

Vertex layouts (0-based):

* hyperline ``(n, d, a)``: edge ``i`` is the block ``[i(d-a), i(d-a)+d)``;
  its last ``a`` vertices are shared with edge ``i+1``.
* hypercycle: the same blocks taken modulo ``n(d-a)``, so the last edge wraps
  onto the first ``a`` vertices.
* hyperstar: core ``0..a-1`` first, then edge ``i`` adds the private block
  ``[a + i(d-a), a + (i+1)(d-a))``.
* wheel ``n``: center ``0``, rim ``1..n``; rim edges ``{i, i+1}`` and
  ``{n, 1}`` come first, then the spokes ``{0, i}``.
* line-graph and cycle-graph are the hyperline and hypercycle with ``d=2, a=1``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import InvalidFamilyError, UnsupportedParameterError

FAMILIES = ("hyperline", "hypercycle", "hyperstar", "line-graph", "cycle-graph", "wheel")
GRAPH_FAMILIES = ("line-graph", "cycle-graph", "wheel")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    d: int = 2
    alpha: int = 1

    def problems(self) -> list[str]:
        """Violated invariants, empty when the parameters are well formed."""
        out = []
        if self.family not in FAMILIES:
            out.append(f"unknown family {self.family!r}")
            return out
        if self.family in GRAPH_FAMILIES and (self.d, self.alpha) != (2, 1):
            out.append(f"{self.family} requires d=2, alpha=1")
        if self.d < 2:
            out.append("d must be at least 2")
        if not 1 <= self.alpha < self.d:
            out.append("need 1 <= alpha < d")
        min_n = 3 if self.family in ("hypercycle", "cycle-graph", "wheel") else 1
        if self.n < min_n:
            out.append(f"{self.family} requires n >= {min_n}")
        return out

    @property
    def kind(self) -> str:
        """The hypergraph family after folding the plain-graph aliases."""
        return {"line-graph": "hyperline", "cycle-graph": "hypercycle"}.get(self.family, self.family)

    def expected_vertex_count(self) -> int:
        n, d, a = self.n, self.d, self.alpha
        kind = self.kind
        if kind == "hyperline":
            return n * d - (n - 1) * a
        if kind == "hypercycle":
            return n * (d - a)
        if kind == "hyperstar":
            return n * (d - a) + a
        return n + 1


@dataclass(frozen=True)
class Hypergraph:
    vertex_count: int
    edges: tuple[frozenset[int], ...] = field(default=())

    def __post_init__(self):
        edges = tuple(frozenset(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for e in edges:
            if not e or min(e) < 0 or max(e) >= self.vertex_count:
                raise InvalidFamilyError(f"edge {sorted(e)} out of range")
        if len(set(edges)) != len(edges):
            raise InvalidFamilyError("duplicate edges")

    @property
    def edge_masks(self) -> list[int]:
        return [sum(1 << v for v in e) for e in self.edges]

    def uniformity(self) -> int | None:
        sizes = {len(e) for e in self.edges}
        return sizes.pop() if len(sizes) == 1 else None

    def to_json(self) -> dict:
        return {"vertices": self.vertex_count, "edges": [sorted(e) for e in self.edges]}

    @classmethod
    def from_json(cls, obj: dict) -> Hypergraph:
        return cls(int(obj["vertices"]), tuple(frozenset(e) for e in obj["edges"]))


def build_family(spec: FamilySpec) -> Hypergraph:
    problems = spec.problems()
    if problems:
        raise InvalidFamilyError("; ".join(problems))
    n, d, a = spec.n, spec.d, spec.alpha
    kind = spec.kind
    if kind in ("hyperline", "hypercycle") and 2 * a > d:
        raise UnsupportedParameterError(f"2*alpha > d ({a=}, {d=}) is not supported")
    step = d - a
    if kind == "hyperline":
        edges = [range(i * step, i * step + d) for i in range(n)]
        nv = n * d - (n - 1) * a
    elif kind == "hypercycle":
        nv = n * step
        edges = [[(i * step + k) % nv for k in range(d)] for i in range(n)]
    elif kind == "hyperstar":
        core = list(range(a))
        edges = [core + list(range(a + i * step, a + (i + 1) * step)) for i in range(n)]
        nv = n * step + a
    else:
        rim = [(i, i % n + 1) for i in range(1, n + 1)]
        spokes = [(0, i) for i in range(1, n + 1)]
        edges = rim + spokes
        nv = n + 1
    return Hypergraph(nv, tuple(frozenset(e) for e in edges))


@dataclass
class ValidationReport:
    spec: FamilySpec
    checks: list[tuple[str, bool, str]]
    intersections: list[list[int]]
    free_vertices: list[list[int]]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def to_json(self) -> dict:
        return {
            "spec": {"family": self.spec.family, "n": self.spec.n, "d": self.spec.d, "alpha": self.spec.alpha},
            "checks": [{"description": d, "pass": ok, "detail": detail} for d, ok, detail in self.checks],
            "intersections": self.intersections,
            "free_vertices": self.free_vertices,
            "verdict": "pass" if self.passed else "fail",
        }


def _required_intersection(spec: FamilySpec, i: int, j: int) -> int:
    n, a = spec.n, spec.alpha
    if spec.kind == "hyperline":
        return a if abs(i - j) == 1 else 0
    if spec.kind == "hypercycle":
        return a if (i - j) % n in (1, n - 1) else 0
    return a


def free_vertices(h: Hypergraph) -> list[list[int]]:
    """For each edge, the vertices belonging to no other edge."""
    out = []
    for i, e in enumerate(h.edges):
        others = set().union(*(f for j, f in enumerate(h.edges) if j != i))
        out.append(sorted(e - others))
    return out


def validate_family(h: Hypergraph, spec: FamilySpec) -> ValidationReport:
    checks: list[tuple[str, bool, str]] = []
    problems = spec.problems()
    checks.append(("family parameters", not problems, "; ".join(problems) or "ok"))
    m = len(h.edges)
    inter = [[len(h.edges[i] & h.edges[j]) for j in range(m)] for i in range(m)]
    frees = free_vertices(h)
    if problems:
        return ValidationReport(spec, checks, inter, frees)

    uni = h.uniformity()
    checks.append(("d-uniform", uni == spec.d, f"edge sizes {sorted({len(e) for e in h.edges})}"))
    nv = spec.expected_vertex_count()
    checks.append(("vertex count", h.vertex_count == nv, f"expected {nv}, got {h.vertex_count}"))

    if spec.family == "wheel":
        checks.extend(_wheel_checks(h, spec.n))
    else:
        checks.append(("edge count", m == spec.n, f"expected {spec.n}, got {m}"))
        bad = [
            (i, j, inter[i][j], _required_intersection(spec, i, j))
            for i, j in combinations(range(m), 2)
            if inter[i][j] != _required_intersection(spec, i, j)
        ]
        checks.append(("intersection pattern", not bad, f"mismatches (i, j, got, want): {bad}" if bad else "ok"))
        if spec.kind == "hyperstar" and h.edges:
            core = frozenset.intersection(*h.edges)
            # a lone edge has no distinguished core; any alpha of its vertices will do
            ok = len(core) == spec.alpha or (len(h.edges) == 1 and len(core) >= spec.alpha)
            checks.append(("common core size", ok, f"core {sorted(core)}"))
        covered = set().union(*h.edges) if h.edges else set()
        checks.append(("no isolated vertices", len(covered) == h.vertex_count, f"{len(covered)} covered"))
    return ValidationReport(spec, checks, inter, frees)


def _wheel_checks(h: Hypergraph, n: int) -> list[tuple[str, bool, str]]:
    deg = [0] * h.vertex_count
    for e in h.edges:
        for v in e:
            deg[v] += 1
    centers = [v for v in range(h.vertex_count) if deg[v] == n]
    out = [("edge count", len(h.edges) == 2 * n, f"expected {2 * n}, got {len(h.edges)}")]
    if n == 3:
        # K4: every vertex can serve as center
        ok = all(x == 3 for x in deg)
        out.append(("wheel structure", ok, f"degrees {deg}"))
        return out
    if len(centers) != 1:
        out.append(("wheel structure", False, f"need one center of degree {n}, degrees {deg}"))
        return out
    c = centers[0]
    rim = [e for e in h.edges if c not in e]
    rim_deg = [0] * h.vertex_count
    for e in rim:
        for v in e:
            rim_deg[v] += 1
    ok = len(rim) == n and all(rim_deg[v] == 2 for v in range(h.vertex_count) if v != c)
    # the rim must be a single n-cycle, not a union of smaller cycles
    if ok:
        start = next(v for v in range(h.vertex_count) if v != c)
        seen, prev, cur = {start}, None, start
        while True:
            nxt = next(w for e in rim if cur in e for w in e if w != cur and w != prev)
            if nxt == start:
                break
            seen.add(nxt)
            prev, cur = cur, nxt
        ok = len(seen) == n
    out.append(("wheel structure", ok, f"center {c}, rim degrees {[rim_deg[v] for v in range(h.vertex_count) if v != c]}"))
    return out


def edge_ideal(h: Hypergraph) -> list[frozenset[int]]:
    """Squarefree monomial generators, one vertex set per edge, in edge order."""
    return list(h.edges)
