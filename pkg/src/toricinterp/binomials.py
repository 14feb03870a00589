"""Binomial equations of toric varieties read off the kernel lattice.

Each basis vector ``v`` of the saturated kernel of ``A`` gives the binomial
``x^(v+) - x^(v-)``.  These describe ``X_A`` only away from the coordinate
hyperplanes (``torus_only``); no saturation to the full toric ideal is done.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence

from .errors import FormatError, PreconditionError
from .exact import corank, kernel_lattice
from .toric_config import _as_matrix


@dataclass(frozen=True)
class Binomial:
    """``x^plus - x^minus`` with disjointly supported exponent vectors."""

    plus: tuple[int, ...]
    minus: tuple[int, ...]

    torus_only = True

    def __post_init__(self):
        if len(self.plus) != len(self.minus):
            raise PreconditionError("exponent vectors differ in length")
        if any(a and b for a, b in zip(self.plus, self.minus)):
            raise PreconditionError("monomials must have disjoint supports")
        if any(a < 0 for a in self.plus + self.minus):
            raise PreconditionError("exponents must be nonnegative")

    @classmethod
    def from_vector(cls, v: Sequence[int]) -> Binomial:
        return cls(tuple(max(x, 0) for x in v), tuple(max(-x, 0) for x in v))

    @property
    def vector(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.plus, self.minus))

    @property
    def nvars(self) -> int:
        return len(self.plus)

    def degrees(self) -> tuple[int, int]:
        return (sum(self.plus), sum(self.minus))

    def is_homogeneous(self) -> bool:
        return sum(self.plus) == sum(self.minus)

    def __call__(self, x: Sequence) -> Fraction:
        x = [Fraction(v) for v in x]
        return prod((xi**e for xi, e in zip(x, self.plus)), start=Fraction(1)) - prod(
            (xi**e for xi, e in zip(x, self.minus)), start=Fraction(1)
        )

    def __neg__(self) -> Binomial:
        return Binomial(self.minus, self.plus)

    def __str__(self) -> str:
        return f"{_monomial_str(self.plus)} - {_monomial_str(self.minus)}"


def _monomial_str(exps: Sequence[int]) -> str:
    parts = [f"x{j}" if e == 1 else f"x{j}^{e}" for j, e in enumerate(exps) if e]
    return "*".join(parts) or "1"


_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def _parse_monomial(text: str) -> dict[int, int]:
    text = text.strip()
    if text == "1":
        return {}
    out: dict[int, int] = {}
    for tok in text.split("*"):
        mt = _FACTOR.match(tok.strip())
        if not mt:
            raise FormatError(f"cannot parse monomial factor {tok!r}")
        j, e = int(mt.group(1)), int(mt.group(2) or 1)
        out[j] = out.get(j, 0) + e
    return out


def parse_binomial(text: str, nvars: int | None = None) -> Binomial:
    """Parse ``x0^e0*...*xd^ed - x0^f0*...``; the inverse of ``str(Binomial)``."""
    halves = text.split(" - ")
    if len(halves) != 2:
        raise FormatError(f"expected 'monomial - monomial', got {text!r}")
    left, right = (_parse_monomial(h) for h in halves)
    top = max(list(left) + list(right), default=-1) + 1
    n = top if nvars is None else nvars
    if n < top:
        raise FormatError(f"variable index exceeds nvars={nvars}")
    plus = [0] * n
    minus = [0] * n
    for j, e in left.items():
        plus[j] = e
    for j, e in right.items():
        minus[j] = e
    # a shared variable cancels down to the disjoint-support form
    for j in range(n):
        c = min(plus[j], minus[j])
        plus[j] -= c
        minus[j] -= c
    return Binomial(tuple(plus), tuple(minus))


def binomial_generators(A) -> list[Binomial]:
    """One binomial per canonical kernel-lattice basis vector of ``A``.

    They cut out ``X_A`` inside the torus of ``P^d`` only.
    """
    M = _as_matrix(A)
    return [Binomial.from_vector(v) for v in kernel_lattice(M).vectors]


def vanishes_on_torus(b: Binomial, A) -> bool:
    """True iff ``b`` vanishes on the torus part of ``X_A`` (its vector is a kernel vector)."""
    M = _as_matrix(A)
    if b.nvars != M.ncols:
        raise PreconditionError(f"binomial has {b.nvars} variables, configuration has {M.ncols} columns")
    return kernel_lattice(M).contains(b.vector)


@dataclass(frozen=True)
class HypersurfaceReport:
    """The defining binomial of a corank-1 configuration and its equation degree.

    Irreducibility is not checked, so ``degree`` is the degree of the
    equation rather than a certified degree of the variety.
    """

    binomial: Binomial
    degree: int


def hypersurface_equation(A) -> HypersurfaceReport:
    """The primitive kernel generator of a corank-1 matrix, as a binomial.

    The sign is fixed so the first nonzero entry of the generator is positive.
    """
    M = _as_matrix(A)
    c = corank(M)
    if c != 1:
        raise PreconditionError(f"hypersurface_equation needs corank 1, got corank {c}")
    (v,) = kernel_lattice(M).vectors
    if next(x for x in v if x) < 0:
        v = tuple(-x for x in v)
    b = Binomial.from_vector(v)
    return HypersurfaceReport(b, max(b.degrees()))
