"""
Toric interpolants of osculating spaces
=======================================

Stacking binomial-coefficient rows under A gives A^(k).  The toric variety
of A^(k) contains X_A and its tangent space at each torus point is the k-th
osculating space of X_A there.
"""

from fractions import Fraction

from toricinterp.binomials import hypersurface_equation
from toricinterp.exact import Matrix, det
from toricinterp.osculation import (
    build_Ak,
    build_Ak_tilde,
    jet_matrix,
    transition_matrix,
    verify_interpolant,
)

A1 = Matrix([[1, 1, 1, 1], [0, 1, 2, 3]])
print("A^(2):", build_Ak(A1, 2).tolist())
print("power rows:", build_Ak_tilde(A1, 2).tolist())

# the two versions differ by an integer lower-triangular matrix
M2 = transition_matrix(1, 2)
print("M_2:", M2.tolist(), "det", det(M2))

# Hasse derivatives of (1, t, t^2, t^3) at t = 2
print("jet at t=2:", jet_matrix(A1, 2, 2).entries.tolist())

# a del Pezzo surface of degree 6 in P^6
dp = Matrix([[1] * 7, [0, 1, 0, 1, 1, 2, 2], [0, 0, 1, 1, 2, 1, 2]])
rep = verify_interpolant(dp, 2, (2, 5))
print("del Pezzo at (2,5): contains", rep.contains, " tangent = osculating", rep.tangent_equals_osculating)
print("osculating dimension:", rep.osculating_dim)
hs = hypersurface_equation(rep.interpolant_matrix)
print("interpolant:", hs.binomial, "= 0, equation degree", hs.degree)

# the check holds at other torus points too, negative coordinates included
for t in [(Fraction(1, 3), Fraction(7, 2)), (-1, 4)]:
    print(t, verify_interpolant(dp, 2, t).ok)
