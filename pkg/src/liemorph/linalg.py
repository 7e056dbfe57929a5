"""Dense exact linear algebra over the rationals.

Scalars are ``fractions.Fraction`` (arbitrary-precision, always stored in
lowest terms with positive denominator), so elimination is exact and every
rank or kernel dimension is an integer fact, not a tolerance call.

Pivoting is deterministic: leftmost eligible column, first nonzero row.
Identical inputs produce identical echelon forms, kernels and particular
solutions on every platform.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


def frac(x) -> Fraction:
    """Coerce ints, strings or Fractions to an exact Fraction."""
    return x if isinstance(x, Fraction) else Fraction(x)


def vector(entries: Iterable) -> Vector:
    return tuple(frac(e) for e in entries)


def vec_zero(n: int) -> Vector:
    return (Fraction(0),) * n


def vec_unit(n: int, i: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def vec_add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def vec_neg(x: Vector) -> Vector:
    return tuple(-a for a in x)


def vec_scale(c, x: Vector) -> Vector:
    c = frac(c)
    return tuple(c * a for a in x)


def vec_is_zero(x: Vector) -> bool:
    return all(a == 0 for a in x)


class Matrix:
    """Immutable dense matrix of Fractions, row-major.

    ``cols`` must be passed explicitly when constructing a matrix with no
    rows; zero-row and zero-column matrices are legal (they show up as
    coboundary matrices into or out of a zero cochain space).
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        data = tuple(vector(row) for row in entries)
        self.entries: tuple[Vector, ...] = data
        self.rows = len(data)
        if data:
            widths = {len(r) for r in data}
            if len(widths) != 1:
                raise ValueError("ragged rows: widths %s" % sorted(widths))
            self.cols = widths.pop()
            if cols is not None and cols != self.cols:
                raise ValueError("cols=%d disagrees with row width %d" % (cols, self.cols))
        else:
            if cols is None:
                raise ValueError("a matrix with no rows needs an explicit column count")
            self.cols = cols

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls([vec_zero(cols) for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([vec_unit(n, i) for i in range(n)], cols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        cols = [vector(c) for c in columns]
        if cols:
            heights = {len(c) for c in cols}
            if len(heights) != 1:
                raise ValueError("ragged columns")
            rows = heights.pop()
        elif rows is None:
            raise ValueError("a matrix with no columns needs an explicit row count")
        return cls([tuple(c[i] for c in cols) for i in range(rows)], cols=len(cols))

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def mul_vec(self, v: Sequence) -> Vector:
        v = vector(v)
        if len(v) != self.cols:
            raise ValueError("vector length %d != cols %d" % (len(v), self.cols))
        return tuple(sum((r[j] * v[j] for j in range(self.cols)), Fraction(0)) for r in self.entries)

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch %sx%s @ %sx%s" % (self.rows, self.cols, other.rows, other.cols))
        return Matrix(
            [
                tuple(
                    sum((self.entries[i][k] * other.entries[k][j] for k in range(self.cols)), Fraction(0))
                    for j in range(other.cols)
                )
                for i in range(self.rows)
            ],
            cols=other.cols,
        )

    def add(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([vec_add(a, b) for a, b in zip(self.entries, other.entries)], cols=self.cols)

    def sub(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([vec_sub(a, b) for a, b in zip(self.entries, other.entries)], cols=self.cols)

    def scaled(self, c) -> "Matrix":
        return Matrix([vec_scale(c, r) for r in self.entries], cols=self.cols)

    def augment(self, v: Sequence) -> "Matrix":
        v = vector(v)
        if len(v) != self.rows:
            raise ValueError("vector length %d != rows %d" % (len(v), self.rows))
        return Matrix([r + (v[i],) for i, r in enumerate(self.entries)], cols=self.cols + 1)

    def is_zero(self) -> bool:
        return all(vec_is_zero(r) for r in self.entries)

    def _same_shape(self, other: "Matrix"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        return "Matrix(%d x %d)" % (self.rows, self.cols)


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row-echelon form with its pivot columns.

    Gauss-Jordan elimination: scan columns left to right, take the first
    nonzero entry at or below the current pivot row, normalize to 1 and
    clear the whole column.  Exact and deterministic.
    """
    work = [list(r) for r in m.entries]
    pivots: list[int] = []
    prow = 0
    for col in range(m.cols):
        found = -1
        for r in range(prow, m.rows):
            if work[r][col] != 0:
                found = r
                break
        if found < 0:
            continue
        if found != prow:
            work[prow], work[found] = work[found], work[prow]
        inv = 1 / work[prow][col]
        if inv != 1:
            work[prow] = [inv * e for e in work[prow]]
        for r in range(m.rows):
            if r == prow:
                continue
            f = work[r][col]
            if f != 0:
                prow_row = work[prow]
                work[r] = [e - f * prow_row[j] for j, e in enumerate(work[r])]
        pivots.append(col)
        prow += 1
        if prow == m.rows:
            break
    return Matrix(work, cols=m.cols), tuple(pivots)


def rank(m: Matrix) -> int:
    """Number of pivots of rref(m)."""
    return len(rref(m)[1])


def _kernel_from_rref(r: Matrix, pivots: tuple[int, ...], cols: int) -> list[Vector]:
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * cols
        v[fc] = Fraction(1)
        for prow, pc in enumerate(pivots):
            v[pc] = -r.entries[prow][fc]
        basis.append(tuple(v))
    return basis


def nullspace(m: Matrix) -> list[Vector]:
    """Basis of {v : m v = 0}, one vector per free column, in column order."""
    r, pivots = rref(m)
    return _kernel_from_rref(r, pivots, m.cols)


def solve_affine(m: Matrix, b: Sequence) -> tuple[Vector, list[Vector]] | None:
    """Solve m x = b exactly.

    Returns ``None`` when b is outside the column space (a legitimate
    outcome, not an error); otherwise one particular solution (free
    variables set to zero) together with a kernel basis describing the
    full solution set.
    """
    b = vector(b)
    aug = m.augment(b)
    r, pivots = rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    particular = [Fraction(0)] * m.cols
    for prow, pc in enumerate(pivots):
        particular[pc] = r.entries[prow][m.cols]
    stripped = Matrix([row[: m.cols] for row in r.entries], cols=m.cols)
    kernel = _kernel_from_rref(stripped, pivots, m.cols)
    return tuple(particular), kernel


def inverse(m: Matrix) -> Matrix:
    """Exact inverse; raises ValueError on non-square or singular input."""
    if m.rows != m.cols:
        raise ValueError("inverse of a non-square matrix")
    n = m.rows
    aug = Matrix([m.entries[i] + vec_unit(n, i) for i in range(n)], cols=2 * n)
    r, pivots = rref(aug)
    if pivots != tuple(range(n)):
        raise ValueError("singular matrix")
    return Matrix([row[n:] for row in r.entries], cols=n)
