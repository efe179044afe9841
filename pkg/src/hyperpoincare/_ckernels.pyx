# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the kernels in ``_pykernels``; identical contracts."""
from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t, int64_t


cdef uint64_t* _edge_array(edge_masks, Py_ssize_t* count) except NULL:
    edges = list(edge_masks)
    cdef Py_ssize_t n = len(edges), i
    cdef uint64_t* arr = <uint64_t*> malloc((n + 1) * sizeof(uint64_t))
    if arr == NULL:
        raise MemoryError()
    for i in range(n):
        arr[i] = <uint64_t> edges[i]
    count[0] = n
    return arr


def covered_supports(int nv, edge_masks):
    if nv > 40:
        raise ValueError("too many vertices for subset enumeration")
    cdef Py_ssize_t ne, i
    cdef uint64_t* edges = _edge_array(edge_masks, &ne)
    cdef uint64_t s, cover, e, top = (<uint64_t> 1) << nv
    out = []
    try:
        s = 0
        while s < top:
            cover = 0
            for i in range(ne):
                e = edges[i]
                if e & s == e:
                    cover |= e
            if cover == s:
                out.append(s)
            s += 1
    finally:
        free(edges)
    return out


cdef struct _Ctx:
    int nverts
    int* verts
    uint64_t** inc
    int* ninc
    int64_t* counts


cdef int _vertex_ok(_Ctx* ctx, int pos, uint64_t nxt) nogil:
    cdef int k, v = ctx.verts[pos]
    cdef uint64_t e
    for k in range(ctx.ninc[v]):
        e = ctx.inc[v][k]
        if nxt & e == e:
            return 0
    return 1


cdef void _count(_Ctx* ctx, int pos, uint64_t cur, int size) nogil:
    if pos == ctx.nverts:
        ctx.counts[size] += 1
        return
    _count(ctx, pos + 1, cur, size)
    cdef uint64_t nxt = cur | ((<uint64_t> 1) << ctx.verts[pos])
    if _vertex_ok(ctx, pos, nxt):
        _count(ctx, pos + 1, nxt, size + 1)


cdef void _collect(_Ctx* ctx, int pos, uint64_t cur, list out):
    if pos == ctx.nverts:
        out.append(cur)
        return
    _collect(ctx, pos + 1, cur, out)
    cdef uint64_t nxt = cur | ((<uint64_t> 1) << ctx.verts[pos])
    if _vertex_ok(ctx, pos, nxt):
        _collect(ctx, pos + 1, nxt, out)


cdef int _is_maximal(_Ctx* ctx, uint64_t cur) nogil:
    cdef int p, v
    for p in range(ctx.nverts):
        v = ctx.verts[p]
        if not (cur >> v) & 1 and _vertex_ok(ctx, p, cur | ((<uint64_t> 1) << v)):
            return 0
    return 1


cdef void _collect_maximal(_Ctx* ctx, int pos, uint64_t cur, list out):
    if pos == ctx.nverts:
        if _is_maximal(ctx, cur):
            out.append(cur)
        return
    _collect_maximal(ctx, pos + 1, cur, out)
    cdef uint64_t nxt = cur | ((<uint64_t> 1) << ctx.verts[pos])
    if _vertex_ok(ctx, pos, nxt):
        _collect_maximal(ctx, pos + 1, nxt, out)


cdef int _setup(_Ctx* ctx, int nv, edge_masks, uint64_t within) except -1:
    cdef Py_ssize_t ne, i
    cdef int v, k
    cdef uint64_t* edges = _edge_array(edge_masks, &ne)
    ctx.verts = <int*> malloc((nv + 1) * sizeof(int))
    ctx.ninc = <int*> malloc((nv + 1) * sizeof(int))
    ctx.inc = <uint64_t**> malloc((nv + 1) * sizeof(uint64_t*))
    ctx.counts = <int64_t*> malloc((nv + 1) * sizeof(int64_t))
    ctx.nverts = 0
    for v in range(nv):
        ctx.counts[v] = 0
        ctx.ninc[v] = 0
        ctx.inc[v] = <uint64_t*> malloc((ne + 1) * sizeof(uint64_t))
        for i in range(ne):
            if (edges[i] >> v) & 1:
                ctx.inc[v][ctx.ninc[v]] = edges[i]
                ctx.ninc[v] += 1
        if (within >> v) & 1:
            ctx.verts[ctx.nverts] = v
            ctx.nverts += 1
    ctx.counts[nv] = 0
    free(edges)
    return 0


cdef void _teardown(_Ctx* ctx, int nv):
    cdef int v
    for v in range(nv):
        free(ctx.inc[v])
    free(ctx.inc)
    free(ctx.ninc)
    free(ctx.verts)
    free(ctx.counts)


def independent_sets(int nv, edge_masks, within):
    cdef _Ctx ctx
    _setup(&ctx, nv, edge_masks, <uint64_t> within)
    out = []
    try:
        _collect(&ctx, 0, 0, out)
    finally:
        _teardown(&ctx, nv)
    return out


def maximal_independent_sets(int nv, edge_masks, within):
    cdef _Ctx ctx
    _setup(&ctx, nv, edge_masks, <uint64_t> within)
    out = []
    try:
        _collect_maximal(&ctx, 0, 0, out)
    finally:
        _teardown(&ctx, nv)
    return out


def face_numbers(int nv, edge_masks, within):
    cdef _Ctx ctx
    _setup(&ctx, nv, edge_masks, <uint64_t> within)
    cdef int k
    try:
        with nogil:
            _count(&ctx, 0, 0, 0)
        result = [ctx.counts[k] for k in range(nv + 1)]
    finally:
        _teardown(&ctx, nv)
    return result


def taylor_minimal(gen_masks):
    gens = list(gen_masks)
    cdef int k = len(gens), i
    if k > 30:
        raise ValueError("too many generators")
    cdef uint64_t n = (<uint64_t> 1) << k, s, rest, low
    cdef uint64_t* union = <uint64_t*> malloc(n * sizeof(uint64_t))
    cdef uint64_t* g = <uint64_t*> malloc((k + 1) * sizeof(uint64_t))
    cdef bint ok = True
    if union == NULL or g == NULL:
        free(union)
        free(g)
        raise MemoryError()
    for i in range(k):
        g[i] = <uint64_t> gens[i]
    with nogil:
        union[0] = 0
        s = 1
        while s < n:
            low = s & (~s + 1)
            i = 0
            while (low >> i) != 1:
                i += 1
            union[s] = union[s ^ low] | g[i]
            s += 1
        s = 1
        while s < n and ok:
            rest = s
            while rest:
                low = rest & (~rest + 1)
                rest ^= low
                if union[s ^ low] == union[s]:
                    ok = False
                    break
            s += 1
    free(union)
    free(g)
    return ok


def rank_mod_p(rows, int ncols, long long p):
    cdef Py_ssize_t nrows = len(rows), r, c, rank = 0, piv, col
    if nrows == 0 or ncols == 0:
        return 0
    cdef int64_t* m = <int64_t*> malloc(nrows * ncols * sizeof(int64_t))
    if m == NULL:
        raise MemoryError()
    cdef int64_t f, inv, tmp, base, e
    for r in range(nrows):
        row = rows[r]
        for c in range(ncols):
            m[r * ncols + c] = row[c] % p
    try:
        for col in range(ncols):
            piv = -1
            for r in range(rank, nrows):
                if m[r * ncols + col] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != rank:
                for c in range(ncols):
                    tmp = m[piv * ncols + c]
                    m[piv * ncols + c] = m[rank * ncols + c]
                    m[rank * ncols + c] = tmp
            # Fermat inverse of the pivot
            inv = 1
            base = m[rank * ncols + col]
            e = p - 2
            while e > 0:
                if e & 1:
                    inv = inv * base % p
                base = base * base % p
                e >>= 1
            for c in range(col, ncols):
                m[rank * ncols + c] = m[rank * ncols + c] * inv % p
            for r in range(rank + 1, nrows):
                f = m[r * ncols + col]
                if f != 0:
                    for c in range(col, ncols):
                        m[r * ncols + c] = (m[r * ncols + c] - f * m[rank * ncols + c]) % p
                        if m[r * ncols + c] < 0:
                            m[r * ncols + c] += p
            rank += 1
            if rank == nrows:
                break
    finally:
        free(m)
    return rank
