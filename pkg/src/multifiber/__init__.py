"""Linear systems of hypersurfaces with multiple base points on (P^1)^n."""

from .conjecture import conjecture_predict, conjecture_test, q_value
from .degen import NON_SPECIAL, SPECIAL, UNDECIDED, Verdict, speciality
from .dims import DimReport, dim_report, effective_two_points, fcount, fiber_multiplicity_bound, vcount
from .interp import (
    InterpConfig,
    InterpReport,
    build_matrix,
    condition_multiindices,
    dim_oracle,
    fiber_multiplicity_exact_r2,
    monomial_basis_two_points,
)
from .lattice import (
    DivisorClassX,
    DivisorClassY,
    LatticeError,
    Root,
    canonical_y,
    class_y,
    is_minus_one_class,
    pair_x,
    pair_y,
    reflect,
    weyl_generators,
)
from .notation import ParseError, parse_system, render_system
from .weyl import ReductionTrace, is_pre_standard, is_standard, phi_pull, phi_push, standard_form

__version__ = "0.1.0"
