"""Acceptance criteria, one test group per criterion, all at exact equality.

Run with ``pytest tests/test_acceptance.py -v``; the terminal summary prints a
PASS/FAIL line per criterion.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction

import pytest

from oracles import brute_force_points, shoelace2, vandermonde_minors
from toricinterp.binomials import binomial_generators, hypersurface_equation
from toricinterp.errors import PreconditionError
from toricinterp.exact import (
    Matrix,
    Poly2,
    RatFn2,
    det,
    is_positroid,
    kernel_lattice,
    maximal_minors,
    ratfn_add,
    ratfn_equal,
    rowspan_equal,
)
from toricinterp.invariants import dual_degree_normal, dual_degree_projected
from toricinterp.osculation import (
    build_Ak,
    build_Ak_tilde,
    jet_matrix,
    multi_indices,
    torus_translate,
    transition_matrix,
    verify_interpolant,
)
from toricinterp.polygon import (
    LatticePolygon,
    P_polygon,
    boundary_length,
    canonical_form_polygon,
    canonical_form_triangle,
    convex_hull,
    cyclic_count,
    cyclic_polygon,
    cyclic_volume,
    delta_triangle,
    lattice_point_count,
    normalized_area,
    vertex_multiplicity,
)
from toricinterp.toric_config import curve_matrix, rational_normal_curve

X, Y = Poly2.x(), Poly2.y()


def _rational(rng):
    return Fraction(rng.randint(1, 100), rng.randint(1, 100))


def _random_config(rng, m, ncols, top=6):
    cols = [[rng.randint(0, top) for _ in range(m)] for _ in range(ncols)]
    return Matrix([[1] * ncols] + [[c[r] for c in cols] for r in range(m)])


# -- 1 ------------------------------------------------------------------------

CURVE_CASES = [
    (ell, k)
    for r in range(3, 10)
    for ell in itertools.combinations(range(9), r)
    for k in (2, 3)
    if math.comb(1 + k, k) <= r
]


@pytest.mark.criterion(1, "interpolant property on every monomial curve with exponents in 0..8")
def test_curve_interpolants_all_subsets():
    rng = random.Random(20261017)
    failures = []
    for ell, k in CURVE_CASES:
        A = curve_matrix(ell)
        for t in [1] + [[_rational(rng)] for _ in range(3)]:
            rep = verify_interpolant(A, k, t)
            if not (rep.contains and rep.tangent_equals_osculating):
                failures.append((ell, k, t))
    assert len(CURVE_CASES) == 466 + 382
    assert failures == []


# -- 2 ------------------------------------------------------------------------

DEL_PEZZO_A2 = [
    [1, 1, 1, 1, 1, 1, 1],
    [0, 1, 0, 1, 1, 2, 2],
    [0, 0, 1, 1, 2, 1, 2],
    [0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 1, 2, 2, 4],
    [0, 0, 0, 0, 1, 0, 1],
]


def _displayed_osculating(t1, t2):
    # second osculating matrix as displayed, with row 2 column 7 read as 2 t1 t2^2
    return Matrix(
        [
            [1, t1, t2, t1 * t2, t1 * t2**2, t1**2 * t2, t1**2 * t2**2],
            [0, 1, 0, t2, t2**2, 2 * t1 * t2, 2 * t1 * t2**2],
            [0, 0, 1, t1, 2 * t1 * t2, t1**2, 2 * t1**2 * t2],
            [0, 0, 0, 0, 0, 1, t2],
            [0, 0, 0, 1, 2 * t2, 2 * t1, 4 * t1 * t2],
            [0, 0, 0, 0, 1, 0, t1],
        ]
    )


@pytest.mark.criterion(2, "Del Pezzo surface: A^(2), its binomial, interpolant at (2,5)")
def test_del_pezzo_matrix(del_pezzo):
    assert build_Ak(del_pezzo, 2) == Matrix(DEL_PEZZO_A2)


@pytest.mark.criterion(2, "Del Pezzo surface: A^(2), its binomial, interpolant at (2,5)")
def test_del_pezzo_binomial(del_pezzo):
    assert [str(b) for b in binomial_generators(build_Ak(del_pezzo, 2))] == ["x0*x4*x5 - x1*x2*x6"]


@pytest.mark.criterion(2, "Del Pezzo surface: A^(2), its binomial, interpolant at (2,5)")
def test_del_pezzo_interpolant(del_pezzo):
    rep = verify_interpolant(del_pezzo, 2, (2, 5))
    assert rep.contains and rep.tangent_equals_osculating
    assert rep.osculating_dim == 6
    assert rowspan_equal(jet_matrix(del_pezzo, 2, (2, 5)).entries, _displayed_osculating(2, 5))


# -- 3 ------------------------------------------------------------------------


@pytest.mark.criterion(3, "transition identity and determinant of M_k")
@pytest.mark.parametrize("m", [1, 2, 3])
def test_transition_identity(m):
    rng = random.Random(m)
    for k in range(1, 5):
        Mk = transition_matrix(m, k)
        expected_det = math.prod(math.prod(math.factorial(e) for e in i) for i in multi_indices(m, k))
        assert det(Mk) == expected_det
        for _ in range(5):
            A = _random_config(rng, m, rng.randint(2, 9))
            assert build_Ak_tilde(A, k) == Mk @ build_Ak(A, k)


# -- 4 ------------------------------------------------------------------------


def _random_ell(rng):
    return [0] + sorted(rng.sample(range(1, 31), rng.randint(2, 10)))


@pytest.mark.criterion(4, "cyclic polygon volume and lattice count against enumeration")
def test_cyclic_polygons_random():
    rng = random.Random(4)
    for _ in range(50):
        ell = _random_ell(rng)
        pts = [(l, l * l) for l in ell]
        # points of a convex parabola, listed by l, are already counterclockwise
        assert cyclic_volume(ell) == shoelace2(pts)
        assert cyclic_count(ell) == len(brute_force_points(pts))
        assert normalized_area(cyclic_polygon(ell)) == cyclic_volume(ell)


# -- 5 ------------------------------------------------------------------------


@pytest.mark.criterion(5, "corank-one interpolant hypersurface of degree 2^(d-1)")
@pytest.mark.parametrize("d", range(3, 11))
def test_hypersurface_degree(d):
    rep = hypersurface_equation(build_Ak(rational_normal_curve(d), d - 1))
    assert rep.degree == 2 ** (d - 1)
    w = tuple((-1) ** (d - i) * math.comb(d, i) for i in range(d + 1))
    assert rep.binomial.vector in (w, tuple(-x for x in w))


# -- 6 ------------------------------------------------------------------------

DISPLAYED_P2 = RatFn2(1, Y * (Y - X + 1) * (X - 2 * Y))
DISPLAYED_P3 = RatFn2(2 * Y - 2 * X + 3, Y * (Y - X + 1) * (Y - 2 * X + 3) * (X - Y))


def _triangle_term(i):
    return RatFn2(2 * i * (i - 1), (2 * Y - (i - 2) * X) * (2 * Y - 2 * (i - 1) * X + i * (i - 1)) * ((i - 1) * X - 2 * Y))


@pytest.mark.criterion(6, "canonical forms of P(2), P(3) and additivity up to d = 8")
def test_canonical_forms_displayed():
    assert ratfn_equal(canonical_form_polygon(P_polygon(2)).coefficient, DISPLAYED_P2)
    assert ratfn_equal(canonical_form_polygon(P_polygon(3)).coefficient, DISPLAYED_P3)


@pytest.mark.criterion(6, "canonical forms of P(2), P(3) and additivity up to d = 8")
@pytest.mark.parametrize("d", range(3, 9))
def test_canonical_form_additivity(d):
    whole = canonical_form_polygon(P_polygon(d)).coefficient
    parts = ratfn_add(canonical_form_polygon(P_polygon(d - 1)).coefficient, canonical_form_triangle(delta_triangle(d)).coefficient)
    assert ratfn_equal(whole, parts)
    summed = _triangle_term(2)
    for i in range(3, d + 1):
        summed = ratfn_add(summed, _triangle_term(i))
    assert ratfn_equal(whole, summed)


# -- 7 ------------------------------------------------------------------------


@pytest.mark.criterion(7, "area and lattice points of P(d)")
@pytest.mark.parametrize("d", range(3, 13))
def test_P_area_and_points(d):
    P = P_polygon(d)
    assert normalized_area(P) == math.comb(d + 1, 3) == shoelace2(P.vertices)
    expected = d * (d * d + 8) // 12 + 1 if d % 2 == 0 else d * (d * d + 11) // 12 + 1
    assert lattice_point_count(P) == expected == len(brute_force_points(P.vertices))


# -- 8 ------------------------------------------------------------------------


def _oracle_multiplicity(P, v):
    i = P.vertices.index(v)
    a, b = P.vertices[i - 1], P.vertices[(i + 1) % len(P.vertices)]
    u = (a[0] - v[0], a[1] - v[1])
    w = (b[0] - v[0], b[1] - v[1])
    gu, gw = math.gcd(*u), math.gcd(*w)
    return abs((u[0] // gu) * (w[1] // gw) - (u[1] // gu) * (w[0] // gw))


@pytest.mark.criterion(8, "vertex multiplicities of P(d)")
@pytest.mark.parametrize("d", range(3, 13))
def test_P_multiplicities(d):
    P = P_polygon(d)
    ends = [(0, 0), (d, math.comb(d, 2))]
    if d == 3:
        expected = 1
    else:
        expected = d - 1 if d % 2 == 0 else (d - 1) // 2
    for v in ends:
        assert vertex_multiplicity(P, v) == expected == _oracle_multiplicity(P, v)
    for v in P.vertices:
        if v not in ends:
            assert vertex_multiplicity(P, v) == 1
    if d == 3:
        assert all(vertex_multiplicity(P, v) == 1 for v in P.vertices)


# -- 9 ------------------------------------------------------------------------


@pytest.mark.criterion(9, "dual degrees of the normalization and of the projected surface")
@pytest.mark.parametrize("d", range(3, 13))
def test_dual_degrees(d):
    normal = dual_degree_normal(P_polygon(d))
    projected = dual_degree_projected(d)
    assert 2 * normal == (d**3 - 7 * d + 6 if d % 2 == 0 else d**3 - 9 * d + 8)
    assert projected == math.comb(d - 1, 2) * (d + 1)
    assert 2 * projected == d**3 - 2 * d**2 - d + 2
    if d == 3:
        assert normal == projected == 4
    else:
        assert normal != projected


# -- 10 -----------------------------------------------------------------------


@pytest.mark.criterion(10, "positroid property of the curve interpolant matrices")
@pytest.mark.parametrize("k", [1, 2, 3])
def test_positroids(k):
    n = 0
    for r in range(k + 1, 9):
        for ell in itertools.combinations(range(8), r):
            A = curve_matrix(ell)
            assert is_positroid(build_Ak(A, k)), ell
            tilde = build_Ak_tilde(A, k)
            assert maximal_minors(tilde) == vandermonde_minors(ell, k)
            assert is_positroid(tilde)
            n += 1
    assert n == sum(math.comb(8, r) for r in range(k + 1, 9))


# -- 11 -----------------------------------------------------------------------


def _random_polygon(rng, spread=12):
    while True:
        pts = [(rng.randint(-spread, spread), rng.randint(-spread, spread)) for _ in range(rng.randint(3, 9))]
        try:
            return convex_hull(pts)
        except PreconditionError:
            continue


@pytest.mark.criterion(11, "property suites with at least 50 seeded cases each")
def test_pick_consistency():
    rng = random.Random(111)
    for _ in range(60):
        P = _random_polygon(rng)
        pts = brute_force_points(P.vertices)
        assert lattice_point_count(P) == len(pts)
        assert len(pts) == Fraction(normalized_area(P), 2) + Fraction(boundary_length(P), 2) + 1


@pytest.mark.criterion(11, "property suites with at least 50 seeded cases each")
def test_torus_translation():
    rng = random.Random(112)
    for _ in range(60):
        m = rng.randint(1, 2)
        A = _random_config(rng, m, rng.randint(3, 8), top=5)
        k = rng.randint(1, 3)
        t = [_rational(rng) for _ in range(m)]
        assert rowspan_equal(jet_matrix(A, k, t).entries, torus_translate(build_Ak(A, k), A, t))


@pytest.mark.criterion(11, "property suites with at least 50 seeded cases each")
def test_kernel_anti_monotonicity():
    rng = random.Random(113)
    for _ in range(60):
        m = rng.randint(1, 3)
        A = _random_config(rng, m, rng.randint(3, 9), top=5)
        k = rng.randint(2, 3)
        small, big = kernel_lattice(build_Ak(A, k)), kernel_lattice(A)
        assert small.issubset(big)
        for v in small.vectors:
            assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in A.rows)


@pytest.mark.criterion(11, "property suites with at least 50 seeded cases each")
def test_triangulation_independence():
    rng = random.Random(114)
    for _ in range(50):
        P = _random_polygon(rng, spread=6)
        forms = [canonical_form_polygon(P, anchor=i).coefficient for i in range(len(P.vertices))]
        assert all(ratfn_equal(forms[0], f) for f in forms[1:])
