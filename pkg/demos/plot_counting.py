"""
Virtual and fiber counts
========================

The naive count of sections of a linear system on (P^1)^n subtracts one
condition per derivative at each fat point.  Fibers of the coordinate
projections through a point can be forced into the base locus, and the
fiber count corrects for them.
"""

from multifiber import dim_report, parse_system
from multifiber.dims import fiber_terms

for text in ["(13,9,5)(11^2,7^2,3^2)", "(5,5,5)(3^6)", "(1,1,1,1,1,1,1)(3^3)"]:
    rep = dim_report(parse_system(text))
    print(text, rep.as_dict())

# the seven-fold example: every point contributes one term per coordinate
D = parse_system("(1,1,1,1,1,1,1)(3^3)")
extra = [(i, I, t) for i, I, t in fiber_terms(D) if I]
print(len(extra), "fiber corrections, total", sum(t for _, _, t in extra))
