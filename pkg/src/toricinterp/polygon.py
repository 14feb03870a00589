"""Exact geometry of convex lattice polygons.

Covers convex hulls, normalized area, lattice boundary length, lattice point
enumeration, cyclic polygons on the parabola, the polygons ``P(d)`` spanned
by the points ``(i, binom(i, 2))``, vertex multiplicities, local Euler
obstructions and canonical forms.  No floating point anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import FormatError, PreconditionError
from .exact import Matrix, Poly2, RatFn2, det

Point = tuple[int, int]


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull_points(points: Iterable[Sequence[int]]) -> list[Point]:
    """Strict convex hull by monotone chain.

    Vertices come counterclockwise starting at the lexicographically smallest
    point, collinear points dropped.  Degenerate inputs give one or two points.
    """
    pts = sorted({(int(p[0]), int(p[1])) for p in points})
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


@dataclass(frozen=True)
class LinearForm:
    """The affine function ``a*x + b*y + c`` with integer, coprime coefficients."""

    a: int
    b: int
    c: int

    @classmethod
    def through(cls, p: Point, q: Point, inside: Point) -> LinearForm:
        """Primitive form vanishing on line ``pq``, positive at ``inside``."""
        a = q[1] - p[1]
        b = p[0] - q[0]
        c = -(a * p[0] + b * p[1])
        g = math.gcd(a, b, c)
        a, b, c = a // g, b // g, c // g
        val = a * inside[0] + b * inside[1] + c
        if val == 0:
            raise PreconditionError("reference point lies on the line")
        if val < 0:
            a, b, c = -a, -b, -c
        return cls(a, b, c)

    def __call__(self, x, y):
        return self.a * x + self.b * y + self.c

    def poly(self) -> Poly2:
        return Poly2.linear(self.a, self.b, self.c)

    def coefficients(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def n_terms(self) -> int:
        return sum(1 for v in (self.a, self.b, self.c) if v)

    def __str__(self) -> str:
        # x, y, constant order, except that the first positive term leads:
        # 'y - x + 1' rather than '-x + y + 1'
        terms = [(k, v) for k, v in ((self.a, "x"), (self.b, "y"), (self.c, "")) if k]
        pos = next((i for i, (k, _) in enumerate(terms) if k > 0), 0)
        terms.insert(0, terms.pop(pos))
        out = []
        for i, (k, v) in enumerate(terms):
            mag = abs(k)
            body = v if (v and mag == 1) else (f"{mag}*{v}" if v else str(mag))
            if i == 0:
                out.append(body if k > 0 else f"-{body}")
            else:
                out.append(("+ " if k > 0 else "- ") + body)
        return " ".join(out)


@dataclass(frozen=True)
class LatticePolygon:
    """Strictly convex lattice polygon, vertices listed counterclockwise."""

    vertices: tuple[Point, ...]

    def __post_init__(self):
        verts = tuple((int(p[0]), int(p[1])) for p in self.vertices)
        object.__setattr__(self, "vertices", verts)
        n = len(verts)
        if n < 3:
            raise PreconditionError("degenerate polygon: fewer than 3 vertices")
        for i in range(n):
            if _cross(verts[i - 1], verts[i], verts[(i + 1) % n]) <= 0:
                raise PreconditionError(
                    "vertices must be counterclockwise with no three consecutive collinear"
                )
        if len(convex_hull_points(verts)) != n:
            raise PreconditionError("vertex sequence is not convex")

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[Point, Point]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def edge_forms(self) -> list[LinearForm]:
        """Inward primitive forms of the edges, in counterclockwise edge order."""
        v = self.vertices
        n = len(v)
        return [LinearForm.through(v[i], v[(i + 1) % n], v[(i + 2) % n]) for i in range(n)]

    def index_of(self, v: Sequence[int]) -> int:
        v = (int(v[0]), int(v[1]))
        try:
            return self.vertices.index(v)
        except ValueError:
            raise PreconditionError(f"{v} is not a vertex of the polygon") from None

    def contains(self, p: Sequence[int]) -> bool:
        return all(f(p[0], p[1]) >= 0 for f in self.edge_forms())

    def on_boundary(self, p: Sequence[int]) -> bool:
        forms = self.edge_forms()
        return all(f(p[0], p[1]) >= 0 for f in forms) and any(f(p[0], p[1]) == 0 for f in forms)


def convex_hull(points: Iterable[Sequence[int]]) -> LatticePolygon:
    hull = convex_hull_points(points)
    if len(hull) < 3:
        raise PreconditionError("degenerate input: points are collinear or too few")
    return LatticePolygon(tuple(hull))


def normalized_area(P: LatticePolygon) -> int:
    """Twice the Euclidean area (shoelace)."""
    v = P.vertices
    n = len(v)
    return sum(v[i][0] * v[(i + 1) % n][1] - v[(i + 1) % n][0] * v[i][1] for i in range(n))


def boundary_length(P: LatticePolygon) -> int:
    """Number of lattice points on the boundary."""
    return sum(math.gcd(q[0] - p[0], q[1] - p[1]) for p, q in P.edges())


def lattice_points(P: LatticePolygon) -> list[Point]:
    """All lattice points of ``P`` by row scan, sorted by (y, x)."""
    ys = [p[1] for p in P.vertices]
    out = []
    for y in range(min(ys), max(ys) + 1):
        xs: list[Fraction] = []
        for p, q in P.edges():
            lo, hi = sorted((p[1], q[1]))
            if not lo <= y <= hi:
                continue
            if p[1] == q[1]:
                xs += [Fraction(p[0]), Fraction(q[0])]
            else:
                xs.append(p[0] + Fraction((y - p[1]) * (q[0] - p[0]), q[1] - p[1]))
        x0, x1 = math.ceil(min(xs)), math.floor(max(xs))
        out.extend((x, y) for x in range(x0, x1 + 1))
    return out


def lattice_point_count(P: LatticePolygon) -> int:
    """Count by enumeration; cross-checked against Pick's theorem."""
    n = len(lattice_points(P))
    if 2 * n != normalized_area(P) + boundary_length(P) + 2:
        raise ArithmeticError("lattice count disagrees with Pick's theorem")
    return n


def interior_points(P: LatticePolygon) -> list[Point]:
    forms = P.edge_forms()
    return [p for p in lattice_points(P) if all(f(*p) > 0 for f in forms)]


# -- cyclic polygons --------------------------------------------------------


def _check_ell(ell: Sequence[int]) -> tuple[int, ...]:
    ell = tuple(int(x) for x in ell)
    if len(ell) < 3:
        raise PreconditionError("need at least three values of ell")
    if ell[0] != 0:
        raise PreconditionError("ell must start at 0")
    if any(a >= b for a, b in zip(ell, ell[1:])):
        raise PreconditionError("ell must be strictly increasing")
    return ell


def cyclic_polygon(ell: Sequence[int]) -> LatticePolygon:
    """Convex hull of the points ``(l, l^2)``."""
    ell = _check_ell(ell)
    return convex_hull((l, l * l) for l in ell)


def cyclic_volume(ell: Sequence[int]) -> int:
    """Closed-form normalized area of the cyclic polygon: sum of l_i l_{i+1} (l_{i+1} - l_i)."""
    ell = _check_ell(ell)
    return sum(a * b * (b - a) for a, b in zip(ell[1:], ell[2:]))


def liu_lattice_count(ell: Sequence[int], k: int = 2) -> int:
    """Lattice points of the order-k cyclic polytope on ``ell``, for k <= 2.

    Sum of the relative Euclidean volumes of the cyclic polytopes of order
    0..k: 1, the length ``l_d``, and half the normalized area.
    """
    ell = _check_ell(ell)
    if k not in (0, 1, 2):
        raise PreconditionError("lattice counts of cyclic polytopes are implemented for k <= 2 only")
    vols = [Fraction(1), Fraction(ell[-1]), Fraction(cyclic_volume(ell), 2)]
    total = sum(vols[: k + 1])
    return int(total)


def cyclic_count(ell: Sequence[int]) -> int:
    """Closed-form lattice count of the cyclic polygon."""
    return liu_lattice_count(ell, 2)


def P_polygon(d: int) -> LatticePolygon:
    """Hull of ``(i, binom(i, 2))`` for ``0 <= i <= d``; every point is a vertex."""
    if d < 2:
        raise PreconditionError("P(d) needs d >= 2")
    return convex_hull((i, math.comb(i, 2)) for i in range(d + 1))


def delta_triangle(d: int) -> LatticePolygon:
    """The triangle with vertices (0,0), (d-1, binom(d-1,2)), (d, binom(d,2))."""
    if d < 2:
        raise PreconditionError("the triangle needs d >= 2")
    return convex_hull([(0, 0), (d - 1, math.comb(d - 1, 2)), (d, math.comb(d, 2))])


# -- vertex invariants ------------------------------------------------------


def _primitive(v: tuple[int, int]) -> tuple[int, int]:
    g = math.gcd(*v)
    return (v[0] // g, v[1] // g)


def vertex_multiplicity(P: LatticePolygon, v: Sequence[int]) -> int:
    """``|det|`` of the primitive edge directions at ``v``; 1 means smooth."""
    i = P.index_of(v)
    verts = P.vertices
    here, nxt, prv = verts[i], verts[(i + 1) % len(verts)], verts[i - 1]
    e1 = _primitive((nxt[0] - here[0], nxt[1] - here[1]))
    e2 = _primitive((prv[0] - here[0], prv[1] - here[1]))
    return abs(e1[0] * e2[1] - e1[1] * e2[0])


def _hull_without(P: LatticePolygon, v: Sequence[int]) -> list[Point]:
    i = P.index_of(v)
    removed = P.vertices[i]
    return convex_hull_points(p for p in lattice_points(P) if p != removed)


def _on_hull_boundary(hull: list[Point], p: Point) -> bool:
    if len(hull) == 1:
        return p == hull[0]
    n = len(hull)
    segs = [(hull[0], hull[1])] if n == 2 else [(hull[i], hull[(i + 1) % n]) for i in range(n)]
    for a, b in segs:
        if _cross(a, b, p) == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(
            a[1], b[1]
        ) <= p[1] <= max(a[1], b[1]):
            return True
    return False


def euler_obstruction_vertex(P: LatticePolygon, v: Sequence[int]) -> int:
    """Local Euler obstruction of the normal toric surface of ``P`` at vertex ``v``.

    Computed as ``1 - c`` where ``c`` counts interior lattice points of ``P``
    lying on the boundary of the hull of the remaining lattice points once
    ``v`` is removed.
    """
    hull = _hull_without(P, v)
    c = sum(1 for p in interior_points(P) if _on_hull_boundary(hull, p))
    return 1 - c


def euler_obstruction_by_area(P: LatticePolygon, v: Sequence[int]) -> int:
    """Same invariant as ``2 - (area(P) - area(hull of P's lattice points minus v))``."""
    hull = _hull_without(P, v)
    rest = normalized_area(LatticePolygon(tuple(hull))) if len(hull) >= 3 else 0
    return 2 - (normalized_area(P) - rest)


# -- canonical forms --------------------------------------------------------


class CanonicalForm:
    """The 2-form ``coefficient * dx^dy`` of a convex polygon.

    ``edge_forms`` are the polygon's inward edge forms; the coefficient times
    their product is a polynomial, the numerator.
    """

    __slots__ = ("coefficient", "edge_forms")

    def __init__(self, coefficient: RatFn2, edge_forms: Sequence[LinearForm]):
        self.coefficient = coefficient
        self.edge_forms = tuple(edge_forms)

    def denominator(self) -> Poly2:
        out = Poly2.const(1)
        for f in self.edge_forms:
            out = out * f.poly()
        return out

    def numerator(self) -> Poly2:
        """``coefficient * prod(edge forms)``; raises if a pole lies off the edges."""
        c = self.coefficient
        return (c.num * self.denominator()).exact_div(c.den)

    def __eq__(self, other) -> bool:
        if isinstance(other, CanonicalForm):
            return self.coefficient == other.coefficient
        if isinstance(other, RatFn2):
            return self.coefficient == other
        return NotImplemented

    __hash__ = None

    def __call__(self, x, y) -> Fraction:
        return self.coefficient(x, y)

    def __str__(self) -> str:
        factors = "*".join(str(f) if f.n_terms() == 1 else f"({f})" for f in self.edge_forms)
        num = self.numerator()
        num_text = str(num) if len(num.terms()) == 1 else f"({num})"
        return f"{num_text} / ({factors})"

    def __repr__(self) -> str:
        return f"CanonicalForm({str(self)!r})"


def canonical_form_triangle(T: LatticePolygon) -> CanonicalForm:
    """``|det E| / (L1 L2 L3)`` with ``E`` the coefficient rows of the inward edge forms."""
    if len(T) != 3:
        raise PreconditionError("canonical_form_triangle needs a triangle")
    forms = T.edge_forms()
    const = abs(det(Matrix([f.coefficients() for f in forms])))
    den = forms[0].poly() * forms[1].poly() * forms[2].poly()
    return CanonicalForm(RatFn2(const, den), forms)


def canonical_form_polygon(P: LatticePolygon, anchor: int = 0) -> CanonicalForm:
    """Sum of triangle forms over the fan triangulation from vertex ``anchor``.

    For ``P(d)`` the default anchor (0, 0) produces the triangles Delta(2),
    ..., Delta(d).  Poles along the internal diagonals must cancel; the
    result is re-expressed over the product of the polygon's own edge forms.
    """
    v = P.vertices
    n = len(v)
    a = anchor % n
    total = RatFn2(0)
    for i in range(1, n - 1):
        tri = LatticePolygon((v[a], v[(a + i) % n], v[(a + i + 1) % n]))
        total = total + canonical_form_triangle(tri).coefficient
    forms = P.edge_forms()
    cf = CanonicalForm(total, forms)
    try:
        num = cf.numerator()
    except ArithmeticError:
        raise ArithmeticError("canonical form has a pole off the polygon's edges") from None
    return CanonicalForm(RatFn2(num, cf.denominator()), forms)


# -- polygon text format ----------------------------------------------------


def format_polygon(P: LatticePolygon) -> str:
    return "".join(f"{x} {y}\n" for x, y in P.vertices)


def parse_polygon(text: str) -> LatticePolygon:
    """One ``x y`` integer pair per line, counterclockwise."""
    pts = []
    for k, line in enumerate(text.splitlines()):
        toks = line.split()
        if not toks:
            continue
        if len(toks) != 2:
            raise FormatError(f"line {k + 1}: expected 'x y'")
        try:
            pts.append((int(toks[0]), int(toks[1])))
        except ValueError:
            raise FormatError(f"line {k + 1}: non-integer coordinate") from None
    return LatticePolygon(tuple(pts))
