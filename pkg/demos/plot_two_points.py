"""
Two points
==========

With two points at opposite corners of the torus the system is spanned by
monomials, so everything can be counted by hand.  The counts match the
fiber formula whenever the system is nonempty.
"""

from multifiber import fcount, parse_system
from multifiber.dims import effective_two_points, fiber_multiplicity_bound
from multifiber.interp import dim_oracle, fiber_multiplicity_exact_r2, monomial_basis_two_points

for text in ["(2,2)(3,1)", "(3,2,1)(4,3)", "(1,1)(3,3)"]:
    D = parse_system(text)
    basis = monomial_basis_two_points(D)
    print(text, len(basis), fcount(D), dim_oracle(D).dim_affine, effective_two_points(D))

D = parse_system("(2,2)(3,1)")
print("fiber multiplicity", fiber_multiplicity_exact_r2(D, 1, {1}), fiber_multiplicity_bound(D, 1, {1}))
