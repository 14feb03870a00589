"""Higher osculating spaces of toric varieties and their toric interpolants.

Rows of every jet-type matrix here are labelled by multi-indices ``i`` with
``|i| <= k`` ordered by degree, then lexicographically with the first
coordinate dominant: for m = 2, k = 2 that is
``(0,0), (1,0), (0,1), (2,0), (1,1), (0,2)``.  The first ``m + 1`` rows
therefore reproduce the configuration matrix itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import PreconditionError
from .exact import Matrix, rank, rowspan_equal, rref
from .toric_config import Configuration, _as_matrix

MultiIndex = tuple[int, ...]


def _compositions(m: int, total: int) -> list[MultiIndex]:
    if m == 0:
        return [()] if total == 0 else []
    return [(first,) + rest for first in range(total, -1, -1) for rest in _compositions(m - 1, total - first)]


@lru_cache(maxsize=None)
def jet_indices(m: int, k: int) -> tuple[MultiIndex, ...]:
    """All multi-indices of degree at most ``k``, in row order."""
    return tuple(i for deg in range(k + 1) for i in _compositions(m, deg))


def multi_indices(m: int, k: int) -> tuple[MultiIndex, ...]:
    """Labels of the extension rows: multi-indices with ``2 <= |i| <= k``."""
    return tuple(i for i in jet_indices(m, k) if sum(i) >= 2)


def gbinom(a: int, i: int) -> int:
    """``a (a-1) ... (a-i+1) / i!``, defined for negative ``a`` too."""
    if a >= 0:
        return math.comb(a, i)
    return math.prod(range(a - i + 1, a + 1)) // math.factorial(i)


def _conf(A) -> Configuration:
    """Exponent configuration: only the all-ones first row is required, not full rank."""
    if isinstance(A, Configuration):
        return A
    M = _as_matrix(A)
    if not M.is_integer():
        raise PreconditionError("configuration entries must be integers")
    if M.nrows == 0 or any(x != 1 for x in M[0]):
        raise PreconditionError("first row must be all-ones (normalize the configuration first)")
    return Configuration(M, first_row_ones=True)


def _check_k(k: int) -> None:
    if k < 1:
        raise PreconditionError("order k must be at least 1")


def build_Ak(A, k: int) -> Matrix:
    """``A^(k)``: ``A`` stacked over rows ``binom(a_j, i)`` for ``2 <= |i| <= k``."""
    conf = _conf(A)
    _check_k(k)
    exps = conf.exponents
    if any(x < 0 for row in exps.rows for x in row):
        raise PreconditionError("build_Ak needs nonnegative exponents")
    cols = exps.columns()
    extra = [[math.prod(math.comb(a, e) for a, e in zip(col, i)) for col in cols] for i in multi_indices(conf.m, k)]
    return conf.matrix.vstack(Matrix(extra, ncols=conf.matrix.ncols))


def build_Ak_tilde(A, k: int) -> Matrix:
    """``Ã^(k)``: ``A`` stacked over rows of power products ``a_j^i``."""
    conf = _conf(A)
    _check_k(k)
    cols = conf.exponents.columns()
    extra = [[math.prod(a**e for a, e in zip(col, i)) for col in cols] for i in multi_indices(conf.m, k)]
    return conf.matrix.vstack(Matrix(extra, ncols=conf.matrix.ncols))


@lru_cache(maxsize=None)
def _stirling2(n: int, k: int) -> int:
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * _stirling2(n - 1, k) + _stirling2(n - 1, k - 1)


def transition_matrix(m: int, k: int) -> Matrix:
    """Integer ``M_k`` with ``build_Ak_tilde(A, k) == M_k @ build_Ak(A, k)``.

    Expands ``a^p = sum_q S(p, q) q! binom(a, q)`` coordinatewise, so the
    entry at (i, q) is ``prod_r S(i_r, q_r) q_r!``.  Lower triangular with
    diagonal ``prod_r i_r!``.
    """
    _check_k(k)
    idx = jet_indices(m, k)
    return Matrix(
        [[math.prod(_stirling2(p, q) * math.factorial(q) for p, q in zip(i, j)) for j in idx] for i in idx],
        ncols=len(idx),
    )


def transition_det_formula(m: int, k: int) -> int:
    """``prod over 2 <= |i| <= k of i_1! ... i_m!``."""
    return math.prod(math.prod(math.factorial(e) for e in i) for i in multi_indices(m, k))


@dataclass(frozen=True)
class JetMatrix:
    base: Configuration
    order: int
    point: tuple[Fraction, ...]
    entries: Matrix

    @property
    def row_labels(self) -> tuple[MultiIndex, ...]:
        return jet_indices(self.base.m, self.order)


def _point(t: Sequence, m: int) -> tuple[Fraction, ...]:
    if isinstance(t, (int, Fraction)):
        t = [t] * m
    t = tuple(Fraction(x) for x in t)
    if len(t) != m:
        raise PreconditionError(f"torus point needs {m} coordinates, got {len(t)}")
    if any(x == 0 for x in t):
        raise PreconditionError("torus point has a zero coordinate")
    return t


def jet_matrix(B, k: int, t: Sequence = 1) -> JetMatrix:
    """Hasse derivatives of order <= k of the monomial map of ``B`` at ``t``.

    Entry (i, j) is ``prod_r binom(b_rj, i_r) * t_r^(b_rj - i_r)``; negative
    exponents are allowed since ``t`` has no zero coordinate.
    """
    conf = _conf(B)
    if k < 0:
        raise PreconditionError("order k must be nonnegative")
    exps = conf.exponents
    t = _point(t, conf.m)
    rows = []
    for i in jet_indices(conf.m, k):
        row = []
        for col in exps.columns():
            c = math.prod(gbinom(b, e) for b, e in zip(col, i))
            if c:
                row.append(c * math.prod((tr ** (b - e) for tr, b, e in zip(t, col, i)), start=Fraction(1)))
            else:
                row.append(0)
        rows.append(row)
    return JetMatrix(conf, k, t, Matrix(rows, ncols=conf.matrix.ncols))


def osculating_space(A, k: int, t: Sequence = 1) -> Matrix:
    """Reduced row echelon basis of the k-th osculating space at ``t``."""
    return rref(jet_matrix(A, k, t).entries)


def torus_translate(M: Matrix, A, t: Sequence) -> Matrix:
    """Scale column j of ``M`` by ``t^a_j`` (the torus action of ``A``)."""
    conf = _conf(A)
    t = _point(t, conf.m)
    factors = [math.prod((tr**a for tr, a in zip(t, col)), start=Fraction(1)) for col in conf.exponents.columns()]
    return M.scale_columns(factors)


@dataclass(frozen=True)
class InterpolantReport:
    contains: bool
    tangent_equals_osculating: bool
    osculating_dim: int
    interpolant_matrix: Matrix

    @property
    def ok(self) -> bool:
        return self.contains and self.tangent_equals_osculating


def verify_interpolant(A, k: int, t: Sequence = 1) -> InterpolantReport:
    """Check that ``X_{A^(k)}`` contains ``X_A`` and is tangent to order k at ``t``.

    ``X_{A^(k)}`` is parametrized by ``(t, u)`` with one extra variable per
    extension row; the point of ``X_A`` at ``t`` is reached with all ``u = 1``.
    The tangent space there is compared with the k-th osculating space of
    ``X_A`` at ``t``.
    """
    conf = _conf(A)
    Ak = build_Ak(conf, k)
    contains = set(conf.matrix.rows) <= set(Ak.rows)
    pt = _point(t, conf.m)
    oscul = jet_matrix(conf, k, pt).entries
    big = _conf(Ak)
    tangent = jet_matrix(big, 1, pt + (Fraction(1),) * (big.m - conf.m)).entries
    return InterpolantReport(
        contains=contains,
        tangent_equals_osculating=rowspan_equal(tangent, oscul),
        osculating_dim=rank(oscul),
        interpolant_matrix=Ak,
    )


def tangent_determines(A, B) -> bool:
    """Whether the tangent spaces at ``1`` (the row spans) agree, i.e. ``X_A == X_B``."""
    MA, MB = _as_matrix(A), _as_matrix(B)
    if MA.ncols != MB.ncols:
        raise PreconditionError("configurations have different numbers of columns")
    return rowspan_equal(MA, MB)
