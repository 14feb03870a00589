"""Invariants of the second interpolant surfaces of rational normal curves.

For ``d >= 3`` the surface ``X_d`` defined by ``A_d^(2)`` has polygon
``P(d)``; its normalization is the normal toric surface of all lattice
points of ``P(d)``.  This module computes their degrees, singularities and
dual degrees from the polygon and checks them against closed forms.

The dual-degree formula for the non-normal surface needs Euler obstructions
along the singular edge and at its endpoints.  Those values are supplied
explicitly (``projected_weights``); whether the edge weight is meant as an
Euler obstruction times the lattice length or as the displayed quantity
itself is left open, and for ``P(d)`` both readings coincide numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .errors import PreconditionError
from .polygon import (
    LatticePolygon,
    P_polygon,
    boundary_length,
    euler_obstruction_vertex,
    lattice_point_count,
    normalized_area,
    vertex_multiplicity,
)


def dual_degree_normal(P: LatticePolygon) -> int:
    """``3 Vol(P) - 2 perimeter(P) + sum of vertex Euler obstructions``."""
    eus = sum(euler_obstruction_vertex(P, v) for v in P.vertices)
    return 3 * normalized_area(P) - 2 * boundary_length(P) + eus


def dual_degree_weighted(P: LatticePolygon, edge_weights: Sequence[int], vertex_eus: Sequence[int]) -> int:
    """``3 Vol(P) - 2 sum(edge_weights) + sum(vertex_eus)``.

    Edges are ordered counterclockwise from the first vertex (edge ``i`` joins
    vertex ``i`` to vertex ``i+1``).
    """
    n = len(P.vertices)
    if len(edge_weights) != n or len(vertex_eus) != n:
        raise PreconditionError(f"need {n} edge weights and {n} vertex values")
    return 3 * normalized_area(P) - 2 * sum(edge_weights) + sum(vertex_eus)


def projected_weights(d: int) -> tuple[list[int], list[int]]:
    """Edge weights and vertex Euler obstructions of the non-normal surface ``X_d``.

    The long edge joining ``(d, binom(d,2))`` back to ``(0, 0)`` carries weight
    ``d/2`` (d even) or ``d`` (d odd); the unit edges weight 1.  Both endpoints
    of the long edge get ``d/2 + 1 - binom(d,2)`` (even) or
    ``d + 1 - binom(d,2)`` (odd); the other vertices are smooth, value 1.
    """
    if d < 3:
        raise PreconditionError("d must be at least 3")
    if d % 2 == 0:
        long_edge, sing = d // 2, d // 2 + 1 - math.comb(d, 2)
    else:
        long_edge, sing = d, d + 1 - math.comb(d, 2)
    return [1] * d + [long_edge], [sing] + [1] * (d - 1) + [sing]


def dual_degree_projected(d: int) -> int:
    weights, eus = projected_weights(d)
    return dual_degree_weighted(P_polygon(d), weights, eus)


def dual_degree_normal_closed(d: int) -> int:
    if d % 2 == 0:
        return (d**3 - 7 * d + 6) // 2
    return (d**3 - 9 * d + 8) // 2


def dual_degree_projected_closed(d: int) -> int:
    return math.comb(d - 1, 2) * (d + 1)


def normalization_ambient_dim(d: int) -> int:
    """``N`` with the normalization embedded in ``P^N``."""
    if d % 2 == 0:
        return d * (d * d + 8) // 12
    return d * (d * d + 11) // 12


@dataclass(frozen=True)
class SurfaceReport:
    d: int
    degree: int
    ambient_normalization_dim: int
    perimeter: int
    singular_multiplicities: tuple[int, int]
    vertex_eus: dict[tuple[int, int], int] = field(hash=False)
    dual_degree_normal: int
    dual_degree_projected: int
    is_general_projection: bool

    def to_dict(self) -> dict:
        """Key/value form in field order; vertices become ``"x,y"`` keys."""
        return {
            "d": self.d,
            "degree": self.degree,
            "ambient_normalization_dim": self.ambient_normalization_dim,
            "perimeter": self.perimeter,
            "singular_multiplicities": list(self.singular_multiplicities),
            "vertex_eus": {f"{x},{y}": e for (x, y), e in self.vertex_eus.items()},
            "dual_degree_normal": self.dual_degree_normal,
            "dual_degree_projected": self.dual_degree_projected,
            "is_general_projection": self.is_general_projection,
        }


def surface_report(d: int) -> SurfaceReport:
    if d < 3:
        raise PreconditionError("surface_report needs d >= 3")
    P = P_polygon(d)
    area = normalized_area(P)
    if area != math.comb(d + 1, 3):
        raise ArithmeticError(f"area of P({d}) is {area}, expected binom(d+1,3)")
    npts = lattice_point_count(P)
    ambient = normalization_ambient_dim(d)
    if npts != ambient + 1:
        raise ArithmeticError(f"P({d}) has {npts} lattice points, expected {ambient + 1}")
    first, last = P.vertices[0], P.vertices[-1]
    mults = (vertex_multiplicity(P, first), vertex_multiplicity(P, last))
    eus = {v: euler_obstruction_vertex(P, v) for v in P.vertices}
    normal = dual_degree_normal(P)
    projected = dual_degree_projected(d)
    if normal != dual_degree_normal_closed(d) or projected != dual_degree_projected_closed(d):
        raise ArithmeticError(f"dual degrees for d={d} disagree with their closed forms")
    # for d = 3 the dual degrees agree, but the projection has a triple line,
    # which a general projection of a smooth surface never has
    general = d != 3 and normal == projected
    return SurfaceReport(
        d=d,
        degree=area,
        ambient_normalization_dim=ambient,
        perimeter=boundary_length(P),
        singular_multiplicities=mults,
        vertex_eus=eus,
        dual_degree_normal=normal,
        dual_degree_projected=projected,
        is_general_projection=general,
    )
