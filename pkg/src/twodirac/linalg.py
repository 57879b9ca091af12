"""Small exact linear-algebra kit.

``Matrix`` is an immutable dense matrix whose entries live in any exact field
implementing the usual arithmetic operators: here either rationals
(``int``/``fractions.Fraction``) or ``GaussianRational``.  Division only
happens inside ``rank``/``det``/``inverse``, which promote plain ints to
``Fraction`` first, so integer-entried matrices are safe everywhere.

For the rank computations in the ellipticity scans there is a dedicated
fraction-free (Bareiss-style) elimination over Gaussian integers,
``rank_bareiss``, which avoids per-step rational normalization entirely.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Callable, Iterable, Sequence, Tuple

from .scalars import GR_ONE, GR_ZERO, GaussianRational, Rational


class Matrix:
    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rs = tuple(tuple(r) for r in rows)
        if not rs or not rs[0]:
            raise ValueError("matrix must be non-empty")
        w = len(rs[0])
        if any(len(r) != w for r in rs):
            raise ValueError("ragged rows")
        self.rows = rs

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(tuple(a + b for a, b in zip(ra, rb))
                      for ra, rb in zip(self.rows, other.rows))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(tuple(a - b for a, b in zip(ra, rb))
                      for ra, rb in zip(self.rows, other.rows))

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(-a for a in r) for r in self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        bcols = tuple(zip(*other.rows))
        return Matrix(tuple(sum(a * b for a, b in zip(row, col))
                            for col in bcols)
                      for row in self.rows)

    def apply(self, vec: Sequence) -> tuple:
        """Matrix-vector product."""
        if len(vec) != self.ncols:
            raise ValueError(f"shape mismatch {self.shape} applied to len {len(vec)}")
        return tuple(sum(a * x for a, x in zip(row, vec)) for row in self.rows)

    def scaled(self, s) -> "Matrix":
        return Matrix(tuple(s * a for a in r) for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows))

    def map(self, fn: Callable) -> "Matrix":
        return Matrix(tuple(fn(a) for a in r) for r in self.rows)

    def is_zero(self) -> bool:
        return all(not a for r in self.rows for a in r)

    def trace(self):
        if self.nrows != self.ncols:
            raise ValueError("trace of non-square matrix")
        return sum(self.rows[i][i] for i in range(self.nrows))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(a) for a in r) for r in self.rows)
        return f"Matrix[{body}]"


# -- constructors -----------------------------------------------------------

def qmat(rows: Iterable[Iterable[Rational]]) -> Matrix:
    """Matrix over rationals (entries kept as int/Fraction as given)."""
    return Matrix(rows)


def gmat(rows: Iterable[Iterable]) -> Matrix:
    """Matrix over GaussianRational, coercing rational entries."""
    return Matrix(tuple(x if isinstance(x, GaussianRational) else GaussianRational(x)
                        for x in r) for r in rows)


def identity_q(n: int) -> Matrix:
    return Matrix(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros_q(r: int, c: int) -> Matrix:
    return Matrix((0,) * c for _ in range(r))


def identity_g(n: int) -> Matrix:
    return Matrix(tuple(GR_ONE if i == j else GR_ZERO for j in range(n))
                  for i in range(n))


def zeros_g(r: int, c: int) -> Matrix:
    return Matrix((GR_ZERO,) * c for _ in range(r))


def hstack(*ms: Matrix) -> Matrix:
    if len({m.nrows for m in ms}) != 1:
        raise ValueError("hstack: row counts differ")
    return Matrix(tuple(x for m in ms for x in m.rows[i]) for i in range(ms[0].nrows))


def vstack(*ms: Matrix) -> Matrix:
    if len({m.ncols for m in ms}) != 1:
        raise ValueError("vstack: column counts differ")
    return Matrix(r for m in ms for r in m.rows)


def block(grid: Sequence[Sequence[Matrix]]) -> Matrix:
    return vstack(*(hstack(*row) for row in grid))


def submatrix(m: Matrix, r0: int, r1: int, c0: int, c1: int) -> Matrix:
    return Matrix(r[c0:c1] for r in m.rows[r0:r1])


# -- vectors ------------------------------------------------------------------

def vdot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError("vdot: length mismatch")
    return sum(a * b for a, b in zip(u, v))


def vadd(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vscale(s, u: Sequence) -> tuple:
    return tuple(s * a for a in u)


def vneg(u: Sequence) -> tuple:
    return tuple(-a for a in u)


def is_zero_vec(u: Sequence) -> bool:
    return all(not a for a in u)


# -- exact elimination --------------------------------------------------------

def _promote(x):
    # ints must become Fractions before any division
    return Fraction(x) if isinstance(x, int) else x


def rank(m: Matrix) -> int:
    """Rank by straightforward field elimination (exact, any field entries)."""
    rows = [[_promote(x) for x in r] for r in m.rows]
    nr, nc = m.shape
    rk = 0
    for col in range(nc):
        piv = next((r for r in range(rk, nr) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        prow = rows[rk]
        inv = 1 / prow[col]
        for r in range(rk + 1, nr):
            f = rows[r][col]
            if f:
                f = f * inv
                rows[r] = [a - f * b for a, b in zip(rows[r], prow)]
        rk += 1
        if rk == nr:
            break
    return rk


def det(m: Matrix):
    """Determinant by exact elimination with division."""
    if m.nrows != m.ncols:
        raise ValueError("det of non-square matrix")
    n = m.nrows
    rows = [[_promote(x) for x in r] for r in m.rows]
    one = GR_ONE if isinstance(rows[0][0], GaussianRational) else Fraction(1)
    result = one
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            return one - one
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            result = -result
        p = rows[col][col]
        result = result * p
        inv = one / p
        prow = rows[col]
        for r in range(col + 1, n):
            f = rows[r][col]
            if f:
                f = f * inv
                rows[r] = [a - f * b for a, b in zip(rows[r], prow)]
    return result


def inverse(m: Matrix) -> Matrix:
    """Inverse by exact Gauss-Jordan elimination."""
    if m.nrows != m.ncols:
        raise ValueError("inverse of non-square matrix")
    n = m.nrows
    gaussian = isinstance(m.rows[0][0], GaussianRational)
    one = GR_ONE if gaussian else Fraction(1)
    zero = GR_ZERO if gaussian else Fraction(0)
    rows = [[_promote(x) for x in r] + [one if i == j else zero for j in range(n)]
            for i, r in enumerate(m.rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = one / rows[col][col]
        rows[col] = [inv * a for a in rows[col]]
        prow = rows[col]
        for r in range(n):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], prow)]
    return Matrix(tuple(r[n:]) for r in rows)


# -- fraction-free rank over Gaussian integers --------------------------------

def _den(x: Rational) -> int:
    return x.denominator if isinstance(x, Fraction) else 1


def _gauss_int_rows(m: Matrix) -> list:
    """Scale each row to Gaussian-integer pairs (row scaling preserves rank)."""
    out = []
    for r in m.rows:
        mult = 1
        for e in r:
            mult = lcm(mult, _den(e.re), _den(e.im))
        row = []
        for e in r:
            a = e.re * mult
            b = e.im * mult
            row.append((a if isinstance(a, int) else a.numerator,
                        b if isinstance(b, int) else b.numerator))
        out.append(row)
    return out


def _bareiss_rank(rows: list) -> int:
    """Fraction-free elimination on mutable rows of (int, int) pairs.

    After each pivot step every entry is a minor of the original matrix, so
    the division by the previous pivot is exact (Sylvester identity); column
    skipping for rank-deficient columns does not disturb this.
    """
    nr = len(rows)
    if nr == 0:
        return 0
    nc = len(rows[0])
    rk = 0
    pre, pim, pnrm = 1, 0, 1
    for col in range(nc):
        if rk == nr:
            break
        piv = None
        for r in range(rk, nr):
            a, b = rows[r][col]
            if a or b:
                piv = r
                break
        if piv is None:
            continue
        if piv != rk:
            rows[rk], rows[piv] = rows[piv], rows[rk]
        prow = rows[rk]
        pa, pb = prow[col]
        for r in range(rk + 1, nr):
            row = rows[r]
            ra, rb = row[col]
            for c in range(col + 1, nc):
                xa, xb = row[c]
                ya, yb = prow[c]
                ta = pa * xa - pb * xb - ra * ya + rb * yb
                tb = pa * xb + pb * xa - ra * yb - rb * ya
                row[c] = ((ta * pre + tb * pim) // pnrm,
                          (tb * pre - ta * pim) // pnrm)
            row[col] = (0, 0)
        pre, pim = pa, pb
        pnrm = pa * pa + pb * pb
        rk += 1
    return rk


def rank_bareiss(m: Matrix) -> int:
    """Exact rank of a GaussianRational matrix, fraction-free."""
    return _bareiss_rank(_gauss_int_rows(m))
