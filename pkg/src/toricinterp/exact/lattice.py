"""Integer normal forms and lattices.

Hermite and Smith forms are computed with explicit unimodular transforms so
callers can read off kernels and indices.  Everything stays in Python ints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from ..errors import PreconditionError
from .matrix import Matrix, rank


def _require_integer(M: Matrix, what: str) -> None:
    if not M.is_integer():
        raise PreconditionError(f"{what} needs an integer matrix")


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def hermite_form(M: Matrix) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U @ M == H``.  ``H`` is in
    row echelon form, pivots are positive, entries above a pivot lie in
    ``[0, pivot)``, and zero rows sit at the bottom.
    """
    _require_integer(M, "hermite_form")
    n, ncols = M.shape
    a = [list(r) for r in M.rows]
    u = _identity(n)

    def sub(i, k, q):
        # row_i -= q * row_k
        a[i] = [x - q * y for x, y in zip(a[i], a[k])]
        u[i] = [x - q * y for x, y in zip(u[i], u[k])]

    r = 0
    for c in range(ncols):
        if r == n:
            break
        while True:
            nz = [i for i in range(r, n) if a[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(a[i][c]))
            a[p], a[r] = a[r], a[p]
            u[p], u[r] = u[r], u[p]
            clean = True
            for i in range(r + 1, n):
                if a[i][c]:
                    sub(i, r, a[i][c] // a[r][c])
                    if a[i][c]:
                        clean = False
            if clean:
                break
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = a[i][c] // a[r][c]
            if q:
                sub(i, r, q)
        r += 1
    return Matrix(a, ncols=ncols), Matrix(u, ncols=n)


def smith_form(M: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form ``(U, D, V)`` with ``U @ M @ V == D``.

    ``U`` and ``V`` are unimodular; ``D`` is diagonal with nonnegative
    entries, each dividing the next.
    """
    _require_integer(M, "smith_form")
    n, m = M.shape
    a = [list(r) for r in M.rows]
    u = _identity(n)
    v = _identity(m)

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def row_op(i, k, q):
        # row_i -= q * row_k
        a[i] = [x - q * y for x, y in zip(a[i], a[k])]
        u[i] = [x - q * y for x, y in zip(u[i], u[k])]

    def col_op(j, k, q):
        # col_j -= q * col_k
        for row in a:
            row[j] -= q * row[k]
        for row in v:
            row[j] -= q * row[k]

    for t in range(min(n, m)):
        cand = [(abs(a[i][j]), i, j) for i in range(t, n) for j in range(t, m) if a[i][j]]
        if not cand:
            break
        _, i0, j0 = min(cand)
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            for i in range(t + 1, n):
                if a[i][t]:
                    row_op(i, t, a[i][t] // a[t][t])
            for j in range(t + 1, m):
                if a[t][j]:
                    col_op(j, t, a[t][j] // a[t][t])
            rest = [(abs(a[i][t]), i, t) for i in range(t + 1, n) if a[i][t]]
            rest += [(abs(a[t][j]), t, j) for j in range(t + 1, m) if a[t][j]]
            if rest:
                _, i1, j1 = min(rest)
                if i1 != t:
                    swap_rows(t, i1)
                else:
                    swap_cols(t, j1)
                continue
            piv = a[t][t]
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, m) if a[i][j] % piv),
                None,
            )
            if bad is None:
                break
            # fold the offending row in; the next pass shrinks the pivot
            row_op(t, bad, -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return Matrix(u, ncols=n), Matrix(a, ncols=m), Matrix(v, ncols=m)


def elementary_divisors(M: Matrix) -> list[int]:
    """Nonzero diagonal entries of the Smith form, in divisibility order."""
    _, D, _ = smith_form(M)
    return [D[i, i] for i in range(min(D.shape)) if D[i, i] != 0]


@dataclass(frozen=True)
class LatticeBasis:
    """A sublattice of Z^n given by a basis in canonical Hermite form.

    Two lattices are equal exactly when their canonical bases are equal, so
    dataclass equality is lattice equality when built via ``from_generators``.
    """

    ambient_dim: int
    vectors: tuple[tuple[int, ...], ...]

    @classmethod
    def from_generators(cls, gens: Sequence[Sequence[int]], ambient_dim: int) -> LatticeBasis:
        if not gens:
            return cls(ambient_dim, ())
        H, _ = hermite_form(Matrix(gens, ncols=ambient_dim))
        vecs = tuple(r for r in H.rows if any(r))
        return cls(ambient_dim, vecs)

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def matrix(self) -> Matrix:
        return Matrix(self.vectors, ncols=self.ambient_dim)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def contains(self, v: Sequence[int]) -> bool:
        """Membership test by reduction against the echelon basis."""
        if len(v) != self.ambient_dim:
            raise PreconditionError("vector has the wrong length")
        w = list(v)
        for b in self.vectors:
            lead = next(j for j, x in enumerate(b) if x)
            q, rem = divmod(w[lead], b[lead])
            if rem:
                return False
            if q:
                w = [x - q * y for x, y in zip(w, b)]
        return not any(w)

    def issubset(self, other: LatticeBasis) -> bool:
        return all(other.contains(b) for b in self.vectors)

    def is_saturated(self) -> bool:
        """True iff the lattice equals its rational span intersected with Z^n."""
        if not self.vectors:
            return True
        return all(e == 1 for e in elementary_divisors(self.matrix()))


def kernel_lattice(M: Matrix) -> LatticeBasis:
    """Saturated integer kernel ``{v in Z^n : M v = 0}`` in canonical form."""
    _require_integer(M, "kernel_lattice")
    n = M.ncols
    if M.nrows == 0:
        return LatticeBasis.from_generators(Matrix.identity(n).rows, n)
    # U @ M^T = H; rows of U facing zero rows of H span the kernel, and
    # because U is unimodular that span is saturated
    H, U = hermite_form(M.T)
    gens = [U[i] for i in range(n) if not any(H[i])]
    return LatticeBasis.from_generators(gens, n)


def sublattice_index(gens: Sequence[Sequence[int]], dim: int) -> int | float:
    """Index of the lattice generated by ``gens`` in Z^dim (``math.inf`` if not full rank)."""
    if not gens:
        return 1 if dim == 0 else math.inf
    divs = elementary_divisors(Matrix(gens, ncols=dim))
    if len(divs) < dim:
        return math.inf
    return math.prod(divs)


def lattice_index(sub: LatticeBasis, dim: int | None = None) -> int | float:
    """Index of ``sub`` in Z^dim; infinite when ``sub`` is not full rank."""
    dim = sub.ambient_dim if dim is None else dim
    if dim != sub.ambient_dim:
        raise PreconditionError("lattice and ambient dimension disagree")
    return sublattice_index(sub.vectors, dim)


def corank(M: Matrix) -> int:
    return M.ncols - rank(M)
