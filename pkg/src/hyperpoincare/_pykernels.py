"""Pure-Python implementations of the bitmask kernels.

Vertex sets are int bitmasks (bit v set <=> vertex v present).  Every function
here has a drop-in twin in ``_ckernels.pyx``; both must return identical values.
"""
from __future__ import annotations


def covered_supports(nv: int, edge_masks) -> list[int]:
    """All masks S over ``nv`` vertices that are unions of edges contained in S.

    The empty mask is included.  Any other S has a vertex lying in no edge
    inside S, which makes the induced independence complex a cone.
    """
    edges = list(edge_masks)
    out = []
    for s in range(1 << nv):
        cover = 0
        for e in edges:
            if e & s == e:
                cover |= e
        if cover == s:
            out.append(s)
    return out


def _incident(nv: int, edges) -> list[list[int]]:
    inc: list[list[int]] = [[] for _ in range(nv)]
    for e in edges:
        for v in range(nv):
            if e >> v & 1:
                inc[v].append(e)
    return inc


def independent_sets(nv: int, edge_masks, within: int) -> list[int]:
    """Masks F inside ``within`` that contain no edge, in DFS order."""
    inc = _incident(nv, edge_masks)
    verts = [v for v in range(nv) if within >> v & 1]
    out = []

    def rec(pos: int, cur: int) -> None:
        if pos == len(verts):
            out.append(cur)
            return
        rec(pos + 1, cur)
        v = verts[pos]
        nxt = cur | (1 << v)
        for e in inc[v]:
            if nxt & e == e:
                return
        rec(pos + 1, nxt)

    rec(0, 0)
    return out


def maximal_independent_sets(nv: int, edge_masks, within: int) -> list[int]:
    """The inclusion-maximal masks among :func:`independent_sets`, same order."""
    inc = _incident(nv, edge_masks)
    verts = [v for v in range(nv) if within >> v & 1]

    def blocked(v: int, cur: int) -> bool:
        nxt = cur | (1 << v)
        return any(nxt & e == e for e in inc[v])

    return [
        f for f in independent_sets(nv, edge_masks, within)
        if all(f >> v & 1 or blocked(v, f) for v in verts)
    ]


def face_numbers(nv: int, edge_masks, within: int) -> list[int]:
    """Number of edge-free subsets of ``within`` of each cardinality 0..nv."""
    inc = _incident(nv, edge_masks)
    verts = [v for v in range(nv) if within >> v & 1]
    counts = [0] * (nv + 1)

    def rec(pos: int, cur: int, size: int) -> None:
        if pos == len(verts):
            counts[size] += 1
            return
        rec(pos + 1, cur, size)
        v = verts[pos]
        nxt = cur | (1 << v)
        for e in inc[v]:
            if nxt & e == e:
                return
        rec(pos + 1, nxt, size + 1)

    rec(0, 0, 0)
    return counts


def taylor_minimal(gen_masks) -> bool:
    """True iff removing any generator from any subset shrinks the subset's lcm support."""
    gens = list(gen_masks)
    k = len(gens)
    union = [0] * (1 << k)
    for s in range(1, 1 << k):
        low = s & -s
        union[s] = union[s ^ low] | gens[low.bit_length() - 1]
    for s in range(1, 1 << k):
        rest = s
        while rest:
            low = rest & -rest
            rest ^= low
            if union[s ^ low] == union[s]:
                return False
    return True


def rank_mod_p(rows, ncols: int, p: int) -> int:
    """Rank over GF(p) of a dense integer matrix given as a list of rows."""
    m = [[x % p for x in row] for row in rows]
    rank = 0
    nrows = len(m)
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        prow = m[rank]
        inv = pow(prow[col], p - 2, p)
        for c in range(col, ncols):
            prow[c] = prow[c] * inv % p
        for r in range(rank + 1, nrows):
            f = m[r][col]
            if f:
                row = m[r]
                for c in range(col, ncols):
                    row[c] = (row[c] - f * prow[c]) % p
        rank += 1
        if rank == nrows:
            break
    return rank
