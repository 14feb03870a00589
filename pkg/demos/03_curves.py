"""
Monomial curves and cyclic polygons
===================================

For a curve with exponents ell, the second interpolant is a surface whose
polygon is the cyclic polygon on the parabola.  Its matrices are positroids.
"""

import math

from toricinterp.binomials import hypersurface_equation
from toricinterp.exact import is_positroid, maximal_minors
from toricinterp.osculation import build_Ak, build_Ak_tilde
from toricinterp.polygon import cyclic_count, cyclic_polygon, cyclic_volume, lattice_point_count, normalized_area
from toricinterp.toric_config import curve_matrix, rational_normal_curve

for ell in [(0, 1, 2, 3), (0, 1, 4, 6), (0, 2, 3, 7, 8)]:
    P = cyclic_polygon(ell)
    print(
        ell,
        "volume", cyclic_volume(ell), "(hull:", normalized_area(P), ")",
        "points", cyclic_count(ell), "(enumerated:", lattice_point_count(P), ")",
    )

ell = (0, 1, 3, 4, 7)
A = curve_matrix(ell)
print("minors of the power matrix:", maximal_minors(build_Ak_tilde(A, 2))[:5], "...")
print("positroids:", is_positroid(build_Ak(A, 2)), is_positroid(build_Ak_tilde(A, 2)))

# A_d^(d-1) has corank one: a single binomial of degree 2^(d-1)
for d in range(3, 8):
    rep = hypersurface_equation(build_Ak(rational_normal_curve(d), d - 1))
    print(d, rep.degree, 2 ** (d - 1), rep.binomial)
    assert rep.binomial.vector in [
        tuple(s * (-1) ** (d - i) * math.comb(d, i) for i in range(d + 1)) for s in (1, -1)
    ]
