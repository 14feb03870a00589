import random
from fractions import Fraction

import pytest

from conftest import A1, A2, A3
from toricinterp.errors import FormatError, PreconditionError
from toricinterp.exact import Matrix, kernel_lattice
from toricinterp.osculation import build_Ak, build_Ak_tilde
from toricinterp.toric_config import (
    affine_equivalent,
    curve_matrix,
    degree,
    format_matrix,
    monomial_eval,
    normalize,
    parse_matrix,
    rational_normal_curve,
    validate,
)


def test_validate_examples():
    c = validate(A1)
    assert (c.m, c.d, c.first_row_ones) == (1, 3, True)
    c2 = validate(A2)
    assert c2.matrix == A2 and not c2.first_row_ones


@pytest.mark.parametrize(
    "bad, reason",
    [([[1, 1], [2, 2]], "rank deficient"), ([[0, 1, 2]], "all-ones"), ([[1, 1], [Fraction(1, 2), 0]], "integers")],
)
def test_validate_rejects(bad, reason):
    with pytest.raises(PreconditionError, match=reason):
        validate(bad)


def test_monomial_eval_examples():
    c = validate(A1)
    assert monomial_eval(c, [1]) == (1, 1, 1, 1)
    assert monomial_eval(c, [2]) == (1, 2, 4, 8)
    surface = validate(build_Ak(A1, 2))
    assert monomial_eval(surface, [2, 3]) == (1, 2, 12, 216)
    with pytest.raises(PreconditionError):
        monomial_eval(validate(A2), [2])
    with pytest.raises(PreconditionError):
        monomial_eval(c, [0])


def test_monomial_eval_negative_exponents():
    c = validate([[1, 1, 1], [-1, 0, 2]])
    assert monomial_eval(c, [Fraction(1, 2)]) == (2, 1, Fraction(1, 4))


def test_binomial_vanishing_at_random_points():
    rng = random.Random(7)
    for A in [A1, build_Ak(A1, 2), curve_matrix([0, 2, 3, 7, 8])]:
        c = validate(A)
        for _ in range(5):
            t = [Fraction(rng.randint(1, 50), rng.randint(1, 50)) for _ in range(c.m)]
            x = monomial_eval(c, t)
            for v in kernel_lattice(A).vectors:
                lhs = Fraction(1)
                rhs = Fraction(1)
                for xj, vj in zip(x, v):
                    if vj > 0:
                        lhs *= xj**vj
                    else:
                        rhs *= xj ** (-vj)
                assert lhs == rhs


@pytest.mark.parametrize("d", range(1, 8))
def test_degree_of_rational_normal_curve(d):
    assert degree(rational_normal_curve(d)) == d


def test_degree_examples():
    assert degree(build_Ak(A1, 2)) == 4
    assert degree(build_Ak_tilde(A1, 2)) == 4
    assert degree(A2) == 3
    assert degree(curve_matrix([0, 2, 5])) == 5
    with pytest.raises(PreconditionError):
        degree(build_Ak(Matrix([[1] * 5, [0, 1, 0, 1, 2], [0, 0, 1, 1, 0], [0, 0, 0, 0, 1]]), 1))


# first row is the all-ones row plus the second one
B = Matrix([[1, 2, 3, 4], [0, 1, 2, 3]])


def test_degree_invariant_under_equivalence():
    family = [A1, A2, B, normalize(B)]
    assert {degree(A) for A in family} == {3}
    assert all(affine_equivalent(A1, A) for A in family)


def test_affine_equivalent_examples():
    assert affine_equivalent(A1, A3)
    assert affine_equivalent(A1, A2)
    assert not affine_equivalent(A1, build_Ak(A1, 2))
    with pytest.raises(PreconditionError):
        affine_equivalent(A1, [[1, 1, 1], [0, 1, 2]])


def test_rank_deficient_example_rejected_by_validate():
    with pytest.raises(PreconditionError, match="rank deficient"):
        validate(A3)


def test_normalize():
    n = normalize(B)
    assert n.first_row_ones
    assert affine_equivalent(n, B)
    assert n.matrix.is_integer()
    assert normalize(A1).matrix == A1
    # ones = (row1 + row2) / 3 only over the rationals
    with pytest.raises(PreconditionError, match="integer combination"):
        normalize(A2)


def test_matrix_format_round_trip():
    for M in [A1, A2, build_Ak(A1, 3), Matrix([[1, Fraction(-3, 4)]])]:
        assert parse_matrix(format_matrix(M)) == M
    assert format_matrix(A1) == "2 4\n1 1 1 1\n0 1 2 3\n"


@pytest.mark.parametrize(
    "text", ["", "2\n1 1", "2 2\n1 1", "1 2\n1 x", "1 2\n1 2 3", "1 1\n1/0"]
)
def test_parse_matrix_rejects(text):
    with pytest.raises(FormatError):
        parse_matrix(text)
