"""Matrices of exact rationals.

A matrix ``M: v -> b`` is a ``b x v`` grid, so ``compose(g, f)`` is the
ordinary product ``g . f`` with ``f`` applied first.

Internally every matrix is a set of integer numerators over one common
positive denominator, kept in lowest terms. Only nonzero numerators are
stored, row by row as sorted ``(col, value)`` pairs: the structure matrices
(identities, commutation matrices, cups, Kronecker powers of small maps)
are overwhelmingly zero. Equality of matrices is literal equality of that
canonical form.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from ..errors import DimensionMismatch, NotInvertible, NotSquare
from ._backend import kernels

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` or ``"n"`` into a canonical Fraction.

    >>> parse_rational("6/4")
    Fraction(3, 2)
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational: {text!r}")
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class RatMatrix:
    """Immutable ``rows x cols`` matrix with rational entries."""

    __slots__ = ("rows", "cols", "_srows", "_den", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        fr = [parse_rational(x) for x in entries]
        if len(fr) != rows * cols:
            raise DimensionMismatch(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(fr)}")
        den = 1
        for x in fr:
            den = lcm(den, x.denominator)
        nums = [x.numerator * (den // x.denominator) for x in fr]
        self._set(rows, cols, _sparsify(nums, rows, cols), den)

    def _set(self, rows, cols, srows, den):
        if rows < 0 or cols < 0:
            raise DimensionMismatch("negative dimension")
        if den <= 0:
            raise ValueError("denominator must be positive")
        g = kernels.content(srows, den) if den > 1 else 1
        if g > 1:
            srows = tuple(tuple((j, x // g) for j, x in row) for row in srows)
            den //= g
        self.rows = rows
        self.cols = cols
        self._srows = srows
        self._den = den
        self._hash = None

    @classmethod
    def _raw(cls, rows: int, cols: int, nums: Sequence[int], den: int = 1) -> RatMatrix:
        """Build from a dense row-major list of numerators."""
        if len(nums) != rows * cols:
            raise DimensionMismatch(f"{rows}x{cols} matrix needs {rows * cols} entries, got {len(nums)}")
        m = cls.__new__(cls)
        m._set(rows, cols, _sparsify(nums, rows, cols), den)
        return m

    @classmethod
    def _sparse(cls, rows: int, cols: int, srows: tuple, den: int = 1) -> RatMatrix:
        """Build from sparse rows (sorted ``(col, value)`` pairs, no zeros)."""
        m = cls.__new__(cls)
        m._set(rows, cols, srows, den)
        return m

    @property
    def _num(self) -> tuple[int, ...]:
        """Dense row-major numerators."""
        out = [0] * (self.rows * self.cols)
        for i, row in enumerate(self._srows):
            base = i * self.cols
            for j, x in row:
                out[base + j] = x
        return tuple(out)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> RatMatrix:
        rows = [list(r) for r in rows]
        if not rows:
            raise DimensionMismatch("matrix needs at least one row")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), ncols, [x for r in rows for x in r])

    # -- access -------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def entries(self) -> tuple[Fraction, ...]:
        d = self._den
        return tuple(Fraction(x, d) for x in self._num)

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(idx)
        for c, x in self._srows[i]:
            if c == j:
                return Fraction(x, self._den)
        return Fraction(0)

    def tolist(self) -> list[list[Fraction]]:
        e = self.entries
        return [list(e[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(x) for x in row] for row in self.tolist()]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_identity(self) -> bool:
        if self.rows != self.cols or self._den != 1:
            return False
        return all(row == ((i, 1),) for i, row in enumerate(self._srows))

    def is_zero(self) -> bool:
        return not any(self._srows)

    def is_integral(self) -> bool:
        return self._den == 1

    def is_natural(self) -> bool:
        """All entries are non-negative integers."""
        return self._den == 1 and all(x > 0 for row in self._srows for _, x in row)

    def is_permutation(self) -> bool:
        if self.rows != self.cols or self._den != 1:
            return False
        seen = set()
        for row in self._srows:
            if len(row) != 1 or row[0][1] != 1:
                return False
            seen.add(row[0][0])
        return len(seen) == self.cols

    def is_orthogonal(self) -> bool:
        """``M^T M = I`` (for a square matrix this is ``M^T = M^-1``)."""
        return self.rows == self.cols and compose(transpose(self), self).is_identity()

    # -- operators ----------------------------------------------------------

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return compose(self, other)

    def __mul__(self, scalar) -> RatMatrix:
        if isinstance(scalar, RatMatrix):
            return NotImplemented
        c = parse_rational(scalar)
        if c == 0:
            return zeros(self.rows, self.cols)
        k = c.numerator
        return RatMatrix._sparse(self.rows, self.cols, tuple(tuple((j, x * k) for j, x in row) for row in self._srows),
                                 self._den * c.denominator)

    __rmul__ = __mul__

    def __add__(self, other: RatMatrix) -> RatMatrix:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        d = lcm(self._den, other._den)
        s, t = d // self._den, d // other._den
        out = []
        for ra, rb in zip(self._srows, other._srows):
            acc = {j: x * s for j, x in ra}
            for j, y in rb:
                acc[j] = acc.get(j, 0) + y * t
            out.append(tuple((j, acc[j]) for j in sorted(acc) if acc[j]))
        return RatMatrix._sparse(self.rows, self.cols, tuple(out), d)

    def __neg__(self) -> RatMatrix:
        return RatMatrix._sparse(self.rows, self.cols, tuple(tuple((j, -x) for j, x in row) for row in self._srows),
                                 self._den)

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and self._den == other._den and self._srows == other._srows)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self._den, self._srows))
        return self._hash

    def __repr__(self) -> str:
        if self.rows * self.cols <= 36:
            return f"RatMatrix({self.to_strings()})"
        return f"RatMatrix(<{self.rows}x{self.cols}>)"


# -- constructors -------------------------------------------------------------

def _sparsify(nums: Sequence[int], rows: int, cols: int) -> tuple:
    return tuple(
        tuple((j, nums[i * cols + j]) for j in range(cols) if nums[i * cols + j])
        for i in range(rows)
    )


def identity(n: int) -> RatMatrix:
    return RatMatrix._sparse(n, n, tuple(((i, 1),) for i in range(n)))


def zeros(rows: int, cols: int) -> RatMatrix:
    return RatMatrix._sparse(rows, cols, ((),) * rows)


def scalar(x) -> RatMatrix:
    return RatMatrix(1, 1, [x])


def basis_vector(n: int, i: int) -> RatMatrix:
    """Column vector ``e_i`` in ``Q^n``."""
    nums = [0] * n
    nums[i] = 1
    return RatMatrix._raw(n, 1, nums)


def permutation_matrix(perm: Sequence[int]) -> RatMatrix:
    """Matrix sending ``e_j`` to ``e_perm[j]``."""
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation: {perm}")
    srows = [None] * n
    for j, i in enumerate(perm):
        srows[i] = ((j, 1),)
    return RatMatrix._sparse(n, n, tuple(srows))


def from_columns(columns: Sequence[RatMatrix]) -> RatMatrix:
    rows = columns[0].rows
    if any(c.shape != (rows, 1) for c in columns):
        raise DimensionMismatch("columns must share a height")
    grid = [[c[i, 0] for c in columns] for i in range(rows)]
    return RatMatrix.from_rows(grid)


# -- operations ---------------------------------------------------------------

def compose(g: RatMatrix, f: RatMatrix) -> RatMatrix:
    """``g . f``: apply ``f`` first. Requires ``rows(f) == cols(g)``."""
    if f.rows != g.cols:
        raise DimensionMismatch(f"cannot compose {g.rows}x{g.cols} after {f.rows}x{f.cols}")
    return RatMatrix._sparse(g.rows, f.cols, kernels.matmul(g._srows, f._srows), g._den * f._den)


def kronecker(m: RatMatrix, n: RatMatrix) -> RatMatrix:
    """Block matrix whose ``(i, j)`` block is ``m[i, j] * n``."""
    srows = kernels.kron(m._srows, n._srows, n.cols)
    return RatMatrix._sparse(m.rows * n.rows, m.cols * n.cols, srows, m._den * n._den)


def kron_all(*ms: RatMatrix) -> RatMatrix:
    out = ms[0]
    for m in ms[1:]:
        out = kronecker(out, m)
    return out


def transpose(m: RatMatrix) -> RatMatrix:
    cols = [[] for _ in range(m.cols)]
    for i, row in enumerate(m._srows):
        for j, x in row:
            cols[j].append((i, x))
    return RatMatrix._sparse(m.cols, m.rows, tuple(tuple(c) for c in cols), m._den)


def commutation_matrix(m: int, n: int) -> RatMatrix:
    """The permutation ``K`` with ``K (x (x) y) = y (x) x`` for ``x in Q^m, y in Q^n``."""
    if m < 1 or n < 1:
        raise DimensionMismatch("commutation matrix needs positive dimensions")
    size = m * n
    srows = [None] * size
    for i in range(m):
        for j in range(n):
            srows[j * m + i] = ((i * n + j, 1),)
    return RatMatrix._sparse(size, size, tuple(srows))


def _eliminate(a: RatMatrix, b: RatMatrix | None = None):
    """Run Gauss-Jordan on ``[a | b]``; return (rows, pivots)."""
    if b is None:
        an = a._num
        rows = [list(an[i * a.cols:(i + 1) * a.cols]) for i in range(a.rows)]
    else:
        if b.rows != a.rows:
            raise DimensionMismatch("right-hand side height differs")
        # a x = b  <=>  (b.den * a.num) x = a.den * b.num
        sa, sb = b._den, a._den
        an, bn = a._num, b._num
        rows = [
            [x * sa for x in an[i * a.cols:(i + 1) * a.cols]]
            + [y * sb for y in bn[i * b.cols:(i + 1) * b.cols]]
            for i in range(a.rows)
        ]
    pivots = kernels.gauss_jordan(rows, a.cols)
    return rows, pivots


def rank(m: RatMatrix) -> int:
    return len(_eliminate(m)[1])


def solve(a: RatMatrix, b: RatMatrix) -> RatMatrix | None:
    """Return one exact solution ``x`` of ``a x = b`` or ``None`` if inconsistent.

    Free variables are set to zero; use :func:`rank` to decide uniqueness.
    """
    rows, pivots = _eliminate(a, b)
    n = a.cols
    r = len(pivots)
    for row in rows[r:]:
        if any(row[n:]):
            return None
    out = [[0] * b.cols for _ in range(n)]
    den = 1
    for k, c in enumerate(pivots):
        den = lcm(den, rows[k][c])
    for k, c in enumerate(pivots):
        row = rows[k]
        s = den // row[c]
        out[c] = [y * s for y in row[n:]]
    return RatMatrix._raw(n, b.cols, [x for r_ in out for x in r_], den)


def invert(m: RatMatrix) -> RatMatrix:
    """Exact inverse by fraction-free elimination; raises NotInvertible."""
    if not m.is_square():
        raise NotSquare(f"cannot invert a {m.rows}x{m.cols} matrix")
    if m.is_permutation():
        return transpose(m)
    rows, pivots = _eliminate(m, identity(m.rows))
    if len(pivots) < m.rows:
        raise NotInvertible(f"matrix of rank {len(pivots)} < {m.rows}")
    n = m.rows
    den = 1
    for k in range(n):
        den = lcm(den, rows[k][k])
    inv = []
    for k in range(n):
        s = den // rows[k][k]
        inv.extend(y * s for y in rows[k][n:])
    return RatMatrix._raw(n, n, inv, den)


def is_invertible(m: RatMatrix) -> bool:
    return m.is_square() and rank(m) == m.rows


def nullspace_dim(m: RatMatrix) -> int:
    return m.cols - rank(m)
