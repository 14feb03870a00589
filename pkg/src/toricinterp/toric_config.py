"""Lattice configurations defining equivariantly embedded toric varieties.

A configuration is an integer matrix ``A`` of shape ``(m+1, d+1)`` and full
row rank whose row span contains ``(1, ..., 1)``.  Its columns are the torus
weights of the embedding ``X_A`` in ``P^d``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Sequence

from .errors import FormatError, PreconditionError
from .exact import Matrix, det, hermite_form, inverse, rank, rowspan_equal, solve, sublattice_index
from .polygon import convex_hull_points

MatrixLike = Matrix | Sequence[Sequence[int]]


def _as_matrix(A) -> Matrix:
    if isinstance(A, Configuration):
        return A.matrix
    if isinstance(A, Matrix):
        return A
    return Matrix(A)


@dataclass(frozen=True)
class Configuration:
    matrix: Matrix
    first_row_ones: bool = field(compare=False)

    @property
    def m(self) -> int:
        """Torus dimension."""
        return self.matrix.nrows - 1

    @property
    def d(self) -> int:
        """Dimension of the ambient projective space."""
        return self.matrix.ncols - 1

    @property
    def exponents(self) -> Matrix:
        """Rows 2..m+1, the exponent vectors of the monomial map."""
        if not self.first_row_ones:
            raise PreconditionError("first row is not all-ones; normalize the configuration first")
        return Matrix(self.matrix.rows[1:], ncols=self.matrix.ncols)

    def columns(self) -> list[tuple[int, ...]]:
        return self.matrix.columns()


def validate(matrix: MatrixLike) -> Configuration:
    """Check that ``matrix`` defines a toric variety and wrap it.

    The matrix is stored exactly as given.  Raises ``PreconditionError`` if it
    is rank deficient or if ``(1, ..., 1)`` is not in its rational row span.
    """
    M = _as_matrix(matrix)
    if not M.is_integer():
        raise PreconditionError("configuration entries must be integers")
    if M.nrows == 0 or M.ncols == 0:
        raise PreconditionError("configuration matrix is empty")
    r = rank(M)
    if r < M.nrows:
        raise PreconditionError(f"rank deficient: rank {r} < {M.nrows} rows")
    ones = Matrix([[1] * M.ncols])
    if rank(M.vstack(ones)) != r:
        raise PreconditionError("the all-ones vector is not in the row span")
    return Configuration(M, first_row_ones=all(x == 1 for x in M[0]))


def curve_matrix(ell: Sequence[int]) -> Matrix:
    """The 2 x (d+1) matrix with rows ``(1, ..., 1)`` and ``ell``."""
    return Matrix([[1] * len(ell), list(ell)])


def rational_normal_curve(d: int) -> Configuration:
    return validate(curve_matrix(range(d + 1)))


def normalize(A: MatrixLike) -> Configuration:
    """Left-multiply by a unimodular matrix so the first row becomes all-ones.

    Possible exactly when ``(1, ..., 1)`` is an integer combination of the
    rows.  The integer row lattice, hence the monomial parametrization up to
    a torus automorphism, is unchanged.
    """
    conf = A if isinstance(A, Configuration) else validate(A)
    if conf.first_row_ones:
        return conf
    M = conf.matrix
    n = M.nrows
    # integer solutions of lam @ M = ones, via the Hermite form of M
    H, U = hermite_form(M)
    lam = solve(H.T, [1] * M.ncols)
    if lam is None or any(x.denominator != 1 for x in lam):
        raise PreconditionError(
            "the all-ones vector is not an integer combination of the rows"
        )
    lam_row = Matrix([[int(x) for x in lam]]) @ U
    # complete lam_row (primitive, since lam_row @ M = ones) to a unimodular matrix
    _, W = hermite_form(lam_row.T)
    Winv = inverse(W)
    completed = Winv.T
    if completed[0] != lam_row[0]:
        completed = Matrix([[-x for x in r] for r in completed.rows])
    out = completed @ M
    return validate(out)


def monomial_eval(A: Configuration, t: Sequence) -> tuple[Fraction, ...]:
    """The point ``(t^a_0 : ... : t^a_d)`` as exact rationals."""
    exps = A.exponents
    t = tuple(Fraction(x) for x in t)
    if len(t) != A.m:
        raise PreconditionError(f"torus point needs {A.m} coordinates, got {len(t)}")
    if any(x == 0 for x in t):
        raise PreconditionError("torus point has a zero coordinate")
    return tuple(
        prod((t[r] ** exps[r, j] for r in range(A.m)), start=Fraction(1))
        for j in range(exps.ncols)
    )


def _affine_chart(M: Matrix) -> list[int]:
    """Rows of M which, with a homogenizing row, form a basis of the row span."""
    lam = solve(M.T, [1] * M.ncols)
    basis = Matrix([[sum(l * x for l, x in zip(lam, col)) for col in M.columns()]])
    chosen = []
    for i, row in enumerate(M.rows):
        cand = basis.vstack(Matrix([row]))
        if rank(cand) > basis.nrows:
            basis = cand
            chosen.append(i)
    return chosen


def degree(A: Configuration | MatrixLike) -> int:
    """Degree of ``X_A``: normalized volume relative to the lattice of the columns.

    Supported for torus dimension 1 and 2.  Each simplex of a fan
    triangulation contributes ``|det|`` of its homogeneous columns; the sum
    is divided by the index of the column lattice.  Both quantities scale by
    the same factor under a change of row basis, so rows need not start with
    the all-ones vector.
    """
    conf = A if isinstance(A, Configuration) else validate(A)
    M = conf.matrix
    m = conf.m
    if m not in (1, 2):
        raise PreconditionError(f"degree is supported for torus dimension 1 or 2, got {m}")
    chart = _affine_chart(M)
    pts = [tuple(M[r, j] for r in chart) for j in range(M.ncols)]
    col_of = {}
    for j, p in enumerate(pts):
        col_of.setdefault(p, j)
    if m == 1:
        lo, hi = min(pts), max(pts)
        simplices = [(col_of[lo], col_of[hi])]
    else:
        hull = convex_hull_points(pts)
        cols = [col_of[p] for p in hull]
        simplices = [(cols[0], cols[i], cols[i + 1]) for i in range(1, len(cols) - 1)]
    total = sum(abs(det(M.select_columns(s))) for s in simplices)
    index = sublattice_index(M.columns(), M.nrows)
    vol, rem = divmod(total, index)
    if rem:
        raise ArithmeticError("normalized volume is not an integer")
    return vol


def affine_equivalent(A, B) -> bool:
    """``X_A == X_B``, decided by equality of rational row spans.

    Accepts configurations or plain matrices; a rank-deficient matrix such as
    ``[[1,1,1,1],[0,1,2,3],[1,2,3,4]]`` still determines its row span.
    """
    MA, MB = _as_matrix(A), _as_matrix(B)
    if MA.ncols != MB.ncols:
        raise PreconditionError(
            f"configurations live in different projective spaces: {MA.ncols - 1} vs {MB.ncols - 1}"
        )
    return rowspan_equal(MA, MB)


# -- matrix text format -------------------------------------------------------


def format_matrix(M: Matrix) -> str:
    """``rows cols`` on the first line, then one whitespace-separated row per line."""
    lines = [f"{M.nrows} {M.ncols}"]
    lines += [" ".join(str(x) for x in row) for row in M.rows]
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> Matrix:
    """Inverse of ``format_matrix``; entries may be integers or ``p/q`` rationals."""
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty matrix text")
    try:
        nrows, ncols = (int(x) for x in lines[0])
    except ValueError:
        raise FormatError(f"bad header line {' '.join(lines[0])!r}; expected 'rows cols'") from None
    body = lines[1:]
    if len(body) != nrows:
        raise FormatError(f"header announces {nrows} rows, found {len(body)}")
    rows = []
    for k, toks in enumerate(body):
        if len(toks) != ncols:
            raise FormatError(f"row {k + 1} has {len(toks)} entries, expected {ncols}")
        try:
            rows.append([_parse_number(tok) for tok in toks])
        except (ValueError, ZeroDivisionError):
            raise FormatError(f"row {k + 1}: non-numeric entry") from None
    return Matrix(rows, ncols=ncols)


def _parse_number(tok: str):
    if "/" in tok:
        v = Fraction(tok)
        return v.numerator if v.denominator == 1 else v
    return int(tok)
