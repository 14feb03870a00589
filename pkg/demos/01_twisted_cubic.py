"""
The twisted cubic three ways
============================

One curve, three matrices.  Row spans decide when two matrices give the
same toric variety, and the kernel lattice gives its equations.
"""

from toricinterp.binomials import binomial_generators, parse_binomial, vanishes_on_torus
from toricinterp.exact import Matrix, kernel_lattice, rank
from toricinterp.toric_config import affine_equivalent, degree, monomial_eval, validate

# t -> (1 : t : t^2 : t^3)
A1 = Matrix([[1, 1, 1, 1], [0, 1, 2, 3]])
# reversed weights, same curve after a rational change of rows
A2 = Matrix([[3, 2, 1, 0], [0, 1, 2, 3]])
# a redundant third row does not change the row span
A3 = Matrix([[1, 1, 1, 1], [0, 1, 2, 3], [1, 2, 3, 4]])

print("rank A1, A3:", rank(A1), rank(A3))
print("A1 ~ A2:", affine_equivalent(A1, A2), " A1 ~ A3:", affine_equivalent(A1, A3))

curve = validate(A1)
print("degree:", degree(curve), " degree via A2:", degree(A2))
print("point at t=2:", [str(x) for x in monomial_eval(curve, [2])])

# the kernel lattice and the binomials it yields
print("kernel basis:", kernel_lattice(A1).vectors)
for b in binomial_generators(A1):
    print("  ", b)

# any kernel vector works, e.g. the relation behind x0*x3 = x1*x2
b = parse_binomial("x0*x3 - x1*x2", 4)
print(b, "vanishes on the torus part:", vanishes_on_torus(b, A1))
