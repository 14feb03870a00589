"""Dense exact matrices over the integers and the rationals.

Entries are Python ``int`` or ``fractions.Fraction``; a matrix holding only
ints is an integer matrix.  Everything here is immutable and exact.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Sequence

from ..errors import PreconditionError

Number = int | Fraction


def _as_number(x) -> Number:
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        return _as_number(Fraction(x))
    raise TypeError(f"matrix entries must be int or Fraction, got {type(x).__name__}")


class Matrix:
    """Immutable dense matrix with exact entries.

    ``Matrix([[1, 1, 1], [0, 1, 2]])`` builds a 2x3 integer matrix.  A matrix
    with no rows still carries a column count, which is needed for empty
    kernel bases and empty row spans.
    """

    __slots__ = ("_rows", "_ncols")

    def __init__(self, rows: Iterable[Iterable] = (), ncols: int | None = None):
        data = tuple(tuple(_as_number(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != width:
                raise ValueError(f"rows have {width} entries, expected {ncols}")
            ncols = width
        self._rows = data
        self._ncols = ncols or 0

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> Matrix:
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @property
    def rows(self) -> tuple[tuple[Number, ...], ...]:
        return self._rows

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self._ncols)

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self._rows[i][j]
        return self._rows[idx]

    def __iter__(self):
        return iter(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._ncols, self._rows))

    def __repr__(self) -> str:
        return f"Matrix({[list(r) for r in self._rows]!r})"

    def column(self, j: int) -> tuple[Number, ...]:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[tuple[Number, ...]]:
        return [self.column(j) for j in range(self._ncols)]

    @property
    def T(self) -> Matrix:
        return Matrix(self.columns(), ncols=self.nrows)

    def is_integer(self) -> bool:
        return all(isinstance(x, int) for r in self._rows for x in r)

    def tolist(self) -> list[list[Number]]:
        return [list(r) for r in self._rows]

    def vstack(self, other: Matrix) -> Matrix:
        if self._ncols != other.ncols:
            raise PreconditionError("vstack: column counts differ")
        return Matrix(self._rows + other.rows, ncols=self._ncols)

    def select_columns(self, cols: Sequence[int]) -> Matrix:
        return Matrix([[r[j] for j in cols] for r in self._rows], ncols=len(cols))

    def __matmul__(self, other: Matrix) -> Matrix:
        if self._ncols != other.nrows:
            raise PreconditionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        return Matrix(
            [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._rows],
            ncols=other.ncols,
        )

    def scale_columns(self, factors: Sequence[Number]) -> Matrix:
        return Matrix([[x * f for x, f in zip(r, factors)] for r in self._rows], ncols=self._ncols)


def _integer_rows(M: Matrix) -> list[list[int]]:
    # clear denominators row by row; row scaling preserves rank and row span
    out = []
    for r in M.rows:
        den = lcm(*(Fraction(x).denominator for x in r)) if r else 1
        out.append([int(x * den) for x in r])
    return out


def _bareiss(a: list[list[int]]) -> tuple[int, int, int]:
    """Fraction-free elimination in place.

    Returns (rank, last pivot, sign of the row permutation); for a square
    nonsingular input the last pivot is the determinant up to that sign.
    """
    n = len(a)
    ncols = len(a[0]) if a else 0
    prev = 1
    sign = 1
    r = 0
    for c in range(ncols):
        if r == n:
            break
        p = next((i for i in range(r, n) if a[i][c] != 0), None)
        if p is None:
            continue
        if p != r:
            a[p], a[r] = a[r], a[p]
            sign = -sign
        piv = a[r][c]
        for i in range(r + 1, n):
            ai = a[i]
            f = ai[c]
            for j in range(c + 1, ncols):
                ai[j] = (piv * ai[j] - f * a[r][j]) // prev
            ai[c] = 0
        prev = piv
        r += 1
    return r, prev, sign


def rank(M: Matrix) -> int:
    """Rank over the rationals (fraction-free elimination)."""
    if M.nrows == 0 or M.ncols == 0:
        return 0
    return _bareiss(_integer_rows(M))[0]


def det(M: Matrix) -> Number:
    """Determinant of a square matrix, computed fraction-free."""
    n = M.nrows
    if n != M.ncols:
        raise PreconditionError(f"determinant of non-square {M.shape} matrix")
    if n == 0:
        return 1
    if M.is_integer():
        a = [list(r) for r in M.rows]
        scale = 1
    else:
        dens = [lcm(*(Fraction(x).denominator for x in r)) for r in M.rows]
        a = [[int(x * dd) for x in r] for r, dd in zip(M.rows, dens)]
        scale = 1
        for dd in dens:
            scale *= dd
    # the last Bareiss pivot is only the determinant if the corner is reached
    r, last, sign = _bareiss(a)
    if r < n:
        return 0
    value = Fraction(sign * last, scale)
    return value.numerator if value.denominator == 1 else value


def rref(M: Matrix) -> Matrix:
    """Reduced row echelon form over Q with zero rows dropped.

    Two matrices with the same column count have equal row spans exactly
    when their rref values are equal.
    """
    a = [[Fraction(x) for x in r] for r in M.rows]
    n, ncols = len(a), M.ncols
    r = 0
    for c in range(ncols):
        if r == n:
            break
        p = next((i for i in range(r, n) if a[i][c] != 0), None)
        if p is None:
            continue
        a[p], a[r] = a[r], a[p]
        piv = a[r][c]
        if piv != 1:
            a[r] = [x / piv for x in a[r]]
        for i in range(n):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    return Matrix(a[:r], ncols=ncols)


def rowspan_equal(M: Matrix, N: Matrix) -> bool:
    """True iff the rational row spans of ``M`` and ``N`` coincide."""
    if M.ncols != N.ncols:
        raise PreconditionError(
            f"row spans live in different spaces: {M.ncols} vs {N.ncols} columns"
        )
    return rref(M) == rref(N)


def rowspan_contains(M: Matrix, N: Matrix) -> bool:
    """True iff every row of ``N`` lies in the rational row span of ``M``."""
    if M.ncols != N.ncols:
        raise PreconditionError("column counts differ")
    return rank(M.vstack(N)) == rank(M)


def solve(M: Matrix, b: Sequence[Number]) -> tuple[Fraction, ...] | None:
    """One rational solution of ``M x = b``, or None if inconsistent."""
    if len(b) != M.nrows:
        raise PreconditionError("right-hand side length does not match row count")
    aug = Matrix([list(r) + [bi] for r, bi in zip(M.rows, b)], ncols=M.ncols + 1)
    R = rref(aug)
    x = [Fraction(0)] * M.ncols
    for row in R.rows:
        lead = next(j for j, v in enumerate(row) if v != 0)
        if lead == M.ncols:
            return None
        x[lead] = row[-1]
    return tuple(x)


def inverse(M: Matrix) -> Matrix:
    """Exact inverse; integer-valued entries come back as ints."""
    n = M.nrows
    if n != M.ncols:
        raise PreconditionError("inverse of a non-square matrix")
    aug = Matrix([list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(M.rows)])
    R = rref(aug)
    if R.nrows < n or any(R[i, i] != 1 for i in range(n)):
        raise PreconditionError("matrix is singular")
    return Matrix([r[n:] for r in R.rows], ncols=n)


def maximal_minors(M: Matrix) -> list[Number]:
    """All maximal minors, columns subsets in lexicographic order.

    For an r x n matrix with r <= n these are the r x r minors; otherwise the
    n x n minors over row subsets.
    """
    r, n = M.shape
    if r <= n:
        return [det(M.select_columns(cols)) for cols in combinations(range(n), r)]
    return [det(Matrix([M[i] for i in rows])) for rows in combinations(range(r), n)]


def is_positroid(M: Matrix) -> bool:
    """True iff every maximal minor is nonnegative (rows <= cols required)."""
    if M.nrows > M.ncols:
        raise PreconditionError("positroid test needs rows <= cols")
    return all(x >= 0 for x in maximal_minors(M))
