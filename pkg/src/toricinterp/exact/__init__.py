"""Exact integer/rational linear algebra, lattices and bivariate rational functions."""

from .lattice import (
    LatticeBasis,
    corank,
    elementary_divisors,
    hermite_form,
    kernel_lattice,
    lattice_index,
    smith_form,
    sublattice_index,
)
from .matrix import (
    Matrix,
    det,
    inverse,
    is_positroid,
    maximal_minors,
    rank,
    rowspan_contains,
    rowspan_equal,
    rref,
    solve,
)
from .poly import Poly2, RatFn2, ratfn_add, ratfn_equal

__all__ = [
    "LatticeBasis",
    "Matrix",
    "Poly2",
    "RatFn2",
    "corank",
    "det",
    "elementary_divisors",
    "hermite_form",
    "inverse",
    "is_positroid",
    "kernel_lattice",
    "lattice_index",
    "maximal_minors",
    "rank",
    "ratfn_add",
    "ratfn_equal",
    "rowspan_contains",
    "rowspan_equal",
    "rref",
    "smith_form",
    "solve",
    "sublattice_index",
]
