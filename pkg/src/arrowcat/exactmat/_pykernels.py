"""Pure-Python integer kernels.

Same signatures as the compiled ``_ckernels`` extension; used when the
extension is not built or when ``ARROWCAT_PURE_PYTHON`` is set.

Sparse operands are tuples of rows, each row a tuple of ``(col, value)``
pairs sorted by column with no zero values. Elimination works on dense
rows (lists of Python ints).
"""

from math import gcd


def matmul(a, b):
    """Sparse product of ``a`` (rows over ``k`` columns) and ``b`` (``k`` rows)."""
    out = []
    for arow in a:
        acc = {}
        for r, x in arow:
            for j, y in b[r]:
                acc[j] = acc.get(j, 0) + x * y
        out.append(tuple((j, acc[j]) for j in sorted(acc) if acc[j]))
    return tuple(out)


def kron(a, b, bc):
    """Sparse Kronecker product; ``bc`` is the column count of ``b``."""
    out = []
    for arow in a:
        for brow in b:
            out.append(tuple((j * bc + q, x * y) for j, x in arow for q, y in brow))
    return tuple(out)


def _reduce_row(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return
    if g > 1:
        for j in range(len(row)):
            row[j] //= g


def gauss_jordan(rows, ncols):
    """Fraction-free Gauss-Jordan elimination in place.

    Pivots are searched among the first ``ncols`` columns only (the rest is
    an augmented right-hand side). On return the first ``len(pivots)`` rows
    are the pivot rows with a positive pivot, every other row is zero in
    each pivot column, and every row is divided by the gcd of its entries.
    """
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = -1
        best = 0
        for i in range(r, nrows):
            x = rows[i][c]
            if x and (p < 0 or abs(x) < best):
                p = i
                best = abs(x)
                if best == 1:
                    break
        if p < 0:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        if prow[c] < 0:
            for j in range(len(prow)):
                prow[j] = -prow[j]
        _reduce_row(prow)
        pv = prow[c]
        width = len(prow)
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
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


def content(srows, g):
    """gcd of ``g`` and every stored value; stops as soon as it reaches 1."""
    for row in srows:
        for _, x in row:
            g = gcd(g, x)
            if g == 1:
                return 1
    return g
