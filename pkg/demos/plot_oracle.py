"""
Dimensions over a finite field
==============================

The interpolation matrix has one row per derivative condition and one
column per monomial.  Its rank at random points over F_p gives the true
dimension with probability bounded below by Schwartz-Zippel.
"""

import time

import numpy as np

from multifiber import InterpConfig, dim_oracle, parse_system
from multifiber.interp import build_matrix, random_points

D = parse_system("(1,1,1,1,1,1,1)(3^3)")
cfg = InterpConfig()
rep = dim_oracle(D, cfg)
print(rep.rows, "x", rep.cols, "rank", rep.rank, "sections", rep.dim_affine)
print("per-trial failure bound %.1e" % rep.failure_bound)

# same matrix by hand, small prime so the entries are readable
small = InterpConfig(prime=101)
pts = random_points(2, 1, 101, np.random.default_rng(0))
print(build_matrix(parse_system("(2,2)(2)"), pts, small))

t0 = time.perf_counter()
dim_oracle(parse_system("(5,5,5)(3^6)"))
print("(5,5,5)(3^6) in %.3f s" % (time.perf_counter() - t0))
