"""
From P^n to (P^1)^n
===================

Blowing up n+1 points of P^n and flopping gives the blow-up of (P^1)^n at
one fewer point.  The map on classes is an isometry, so section counts can
be moved across.
"""

from multifiber import phi_pull, phi_push
from multifiber.interp import dim_oracle
from multifiber.lattice import DivisorClassX, pair_x, pair_y

# quartics in P^7 with nine triple points
X = DivisorClassX(7, 4, (3,) * 9)
Y = phi_push(X)
print(Y)
print(phi_pull(Y) == X, pair_x(X, X), pair_y(Y, Y))
print("sections", dim_oracle(Y).dim_affine)
