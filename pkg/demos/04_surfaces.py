"""
The surfaces of P(d)
====================

The second interpolant of the rational normal curve of degree d is a
surface with polygon P(d).  Its normalization, singular points, canonical
form and dual degrees are all read off the polygon.
"""

from toricinterp.exact import ratfn_add, ratfn_equal
from toricinterp.invariants import surface_report
from toricinterp.polygon import (
    P_polygon,
    canonical_form_polygon,
    canonical_form_triangle,
    delta_triangle,
    euler_obstruction_vertex,
    vertex_multiplicity,
)

P = P_polygon(6)
print("P(6):", P.vertices)
for v in P.vertices:
    print("  ", v, "multiplicity", vertex_multiplicity(P, v), "Eu", euler_obstruction_vertex(P, v))

print("Omega(P(2)) =", canonical_form_polygon(P_polygon(2)))
print("Omega(P(3)) =", canonical_form_polygon(P_polygon(3)))

# additivity: P(d) is P(d-1) with the triangle Delta(d) glued on
d = 5
glued = ratfn_add(canonical_form_polygon(P_polygon(d - 1)).coefficient, canonical_form_triangle(delta_triangle(d)).coefficient)
print("additivity at d=5:", ratfn_equal(canonical_form_polygon(P_polygon(d)).coefficient, glued))

print()
print(" d  deg   N  mult   dual(normal)  dual(proj)  general")
for d in range(3, 11):
    r = surface_report(d)
    print(
        f"{d:2d} {r.degree:4d} {r.ambient_normalization_dim:3d}  {r.singular_multiplicities[0]:3d}"
        f"   {r.dual_degree_normal:10d}  {r.dual_degree_projected:10d}  {r.is_general_projection}"
    )
