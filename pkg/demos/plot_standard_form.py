"""
Standard forms
==============

Reflections in the Weyl group do not change the number of sections, so a
class can be pushed down until its degrees and multiplicities satisfy the
standard inequalities.  If a degree goes negative on the way, the system
is empty.
"""

from multifiber import parse_system, render_system, standard_form
from multifiber.lattice import pair_y, canonical_y

D = parse_system("(13,9,5)(11^2,7^2,3^2)")
out, trace = standard_form(D)
print(render_system(D))
for step in trace.steps:
    print("  ->", render_system(step))

# self-intersection and degree against K_Y are invariants of the orbit
K = canonical_y(D.n, D.r)
print(pair_y(D, D), pair_y(out, out))
print(pair_y(D, K), pair_y(out, K))

out, trace = standard_form(parse_system("(1,1)(2,2)"))
print("empty:", trace.empty)
