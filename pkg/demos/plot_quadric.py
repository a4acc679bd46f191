"""
The quadric class on (P^1)^3
============================

Seven general points of (P^1)^3 lie on a unique (1,1,1) surface Q.  When
q(D) <= 0 the surface splits off, so D and D - Q have the same sections.
"""

from multifiber import parse_system
from multifiber.conjecture import conjecture_test, q_value

for n in range(1, 5):
    rep = conjecture_test(parse_system(f"({n},{n},{n})({n}^7)"))
    print(n, [c.get("q") for c in rep.chain], rep.predicted_count, rep.oracle.dim_affine)

D = parse_system("(5,5,5)(3^6)")
rep = conjecture_test(D)
print(q_value(D), rep.terminal_kind, rep.predicted_count, rep.oracle.dim_affine)
