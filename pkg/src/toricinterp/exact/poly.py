"""Sparse bivariate polynomials and rational functions over Q.

A polynomial in ``x, y`` maps exponent pairs ``(i, j)`` to nonzero
``Fraction`` coefficients.  Terms are ordered graded-lexicographically with
``x > y``; that order fixes both leading terms and printed output.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Mapping

Monomial = tuple[int, int]


def _grlex(mono: Monomial) -> tuple[int, int]:
    return (mono[0] + mono[1], mono[0])


def _coeff(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Poly2:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        self._terms: dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            c = _coeff(c)
            if c:
                self._terms[(int(mono[0]), int(mono[1]))] = c

    @classmethod
    def const(cls, c) -> Poly2:
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> Poly2:
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> Poly2:
        return cls({(0, 1): 1})

    @classmethod
    def linear(cls, a, b, c) -> Poly2:
        """The polynomial ``a*x + b*y + c``."""
        return cls({(1, 0): a, (0, 1): b, (0, 0): c})

    @staticmethod
    def _lift(other) -> Poly2 | None:
        if isinstance(other, Poly2):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly2.const(other)
        return None

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in decreasing graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: _grlex(t[0]), reverse=True)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self._terms)

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def leading_term(self) -> tuple[Monomial, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self._terms, key=_grlex)
        return mono, self._terms[mono]

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __neg__(self) -> Poly2:
        return Poly2({m: -c for m, c in self._terms.items()})

    def __add__(self, other) -> Poly2:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return Poly2(out)

    __radd__ = __add__

    def __sub__(self, other) -> Poly2:
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Poly2:
        return (-self) + other

    def __mul__(self, other) -> Poly2:
        if isinstance(other, (int, Fraction)):
            return Poly2({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Poly2):
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return Poly2(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Poly2:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly2.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x, y) -> Fraction:
        return sum((c * _coeff(x) ** i * _coeff(y) ** j for (i, j), c in self._terms.items()), Fraction(0))

    def content(self) -> Fraction:
        """Positive rational ``c`` with ``self / c`` primitive with integer coefficients."""
        if not self._terms:
            return Fraction(0)
        cs = self._terms.values()
        return Fraction(gcd(*(c.numerator for c in cs)), lcm(*(c.denominator for c in cs)))

    def divmod(self, divisor: Poly2) -> tuple[Poly2, Poly2]:
        """Multivariate division in graded-lex order.

        When the divisor divides ``self`` exactly the remainder is zero.
        """
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        (gi, gj), gc = divisor.leading_term()
        q: dict[Monomial, Fraction] = {}
        r: dict[Monomial, Fraction] = {}
        p = self
        while p:
            (pi, pj), pc = p.leading_term()
            if pi >= gi and pj >= gj:
                t = Poly2({(pi - gi, pj - gj): pc / gc})
                q[(pi - gi, pj - gj)] = pc / gc
                p = p - t * divisor
            else:
                r[(pi, pj)] = pc
                p = p - Poly2({(pi, pj): pc})
        return Poly2(q), Poly2(r)

    def exact_div(self, divisor: Poly2) -> Poly2:
        q, r = self.divmod(divisor)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def __repr__(self) -> str:
        return f"Poly2({str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k, ((i, j), c) in enumerate(self.terms()):
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("x", i), ("y", j)) if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if k == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


class RatFn2:
    """Quotient of two ``Poly2``.

    The denominator is stored primitive with integer coefficients and a
    positive leading coefficient.  No gcd cancellation is attempted beyond
    exact divisibility, so equality is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = Poly2._lift(num)
        den = Poly2._lift(den)
        if num is None or den is None:
            raise TypeError("RatFn2 needs polynomial or rational arguments")
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            den = Poly2.const(1)
        elif not den.is_constant() and num.degree >= den.degree:
            q, r = num.divmod(den)
            if not r:
                num, den = q, Poly2.const(1)
        scale = den.content()
        if den.leading_term()[1] < 0:
            scale = -scale
        self.num = num * (1 / scale)
        self.den = den * (1 / scale)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Poly2)):
            other = RatFn2(other)
        if not isinstance(other, RatFn2):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None  # equality is not structural

    def __add__(self, other) -> RatFn2:
        if isinstance(other, (int, Fraction, Poly2)):
            other = RatFn2(other)
        if not isinstance(other, RatFn2):
            return NotImplemented
        if self.den == other.den:
            return RatFn2(self.num + other.num, self.den)
        return RatFn2(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RatFn2:
        return RatFn2(-self.num, self.den)

    def __sub__(self, other) -> RatFn2:
        return self + (-RatFn2(other) if not isinstance(other, RatFn2) else -other)

    def __mul__(self, other) -> RatFn2:
        if isinstance(other, (int, Fraction, Poly2)):
            other = RatFn2(other)
        if not isinstance(other, RatFn2):
            return NotImplemented
        return RatFn2(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatFn2:
        if isinstance(other, (int, Fraction, Poly2)):
            other = RatFn2(other)
        if not other.num:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFn2(self.num * other.den, self.den * other.num)

    def __call__(self, x, y) -> Fraction:
        d = self.den(x, y)
        if d == 0:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num(x, y) / d

    def __repr__(self) -> str:
        return f"RatFn2({str(self.num)!r}, {str(self.den)!r})"

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def ratfn_add(f: RatFn2, g: RatFn2) -> RatFn2:
    return f + g


def ratfn_equal(f: RatFn2, g: RatFn2) -> bool:
    return f == g
