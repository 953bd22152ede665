# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels (see ``_pykernels`` for the reference versions).

Entries stay Python ints so results are exact at any size; the gain comes
from typed loop indices and avoiding interpreter dispatch in the inner loops.
Sparse operands use the row format described in ``_pykernels``.
"""

from math import gcd


def matmul(tuple a, tuple b):
    cdef list out = []
    cdef dict acc
    cdef tuple arow, brow, pair, pb
    cdef object x, j, v
    cdef Py_ssize_t r
    for arow in a:
        acc = {}
        for pair in arow:
            r = pair[0]
            x = pair[1]
            brow = <tuple>b[r]
            for pb in brow:
                j = pb[0]
                v = acc.get(j)
                acc[j] = x * pb[1] if v is None else v + x * pb[1]
        out.append(tuple([(j, acc[j]) for j in sorted(acc) if acc[j]]))
    return tuple(out)


def kron(tuple a, tuple b, Py_ssize_t bc):
    cdef list out = []
    cdef list row
    cdef tuple arow, brow, pa, pb
    cdef Py_ssize_t base
    cdef object x
    for arow in a:
        for brow in b:
            row = []
            for pa in arow:
                base = <Py_ssize_t>pa[0] * bc
                x = pa[1]
                for pb in brow:
                    row.append((base + <Py_ssize_t>pb[0], x * pb[1]))
            out.append(tuple(row))
    return tuple(out)


cdef _reduce_row(list row):
    cdef object g = 0
    cdef Py_ssize_t j, width = len(row)
    for j in range(width):
        if row[j]:
            g = gcd(g, row[j])
            if g == 1:
                return
    if g > 1:
        for j in range(width):
            row[j] = row[j] // g


def gauss_jordan(list rows, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t r = 0, c, i, j, p, width
    cdef list pivots = []
    cdef list prow, row
    cdef object x, best, pv, g, s, t
    for c in range(ncols):
        if r == nrows:
            break
        p = -1
        best = 0
        for i in range(r, nrows):
            x = (<list>rows[i])[c]
            if x and (p < 0 or abs(x) < best):
                p = i
                best = abs(x)
                if best == 1:
                    break
        if p < 0:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = <list>rows[r]
        width = len(prow)
        if prow[c] < 0:
            for j in range(width):
                prow[j] = -prow[j]
        _reduce_row(prow)
        pv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            row = <list>rows[i]
            x = row[c]
            if not x:
                continue
            g = gcd(pv, x)
            s = pv // g
            t = x // g
            for j in range(width):
                row[j] = s * row[j] - t * prow[j]
            _reduce_row(row)
        pivots.append(c)
        r += 1
    return pivots


def content(tuple srows, object g):
    cdef tuple row, pair
    for row in srows:
        for pair in row:
            g = gcd(g, pair[1])
            if g == 1:
                return 1
    return g
