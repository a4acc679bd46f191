"""Closed-form counts: virtual, expected and fiber dimensions.

Every function here works with *section counts* (affine dimensions of the
space of polynomials).  The projective dimension of a linear system is the
count minus one; :class:`DimReport` carries both.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, prod

from .lattice import DivisorClassY


def binom(a: int, n: int) -> int:
    """``C(a, n)``, zero whenever ``a < n``."""
    if a < n or n < 0:
        return 0
    return comb(a, n)


def _check_degrees(d):
    if any(x < 0 for x in d):
        raise ValueError(f"negative degree in {tuple(d)}")


def _mults(D: DivisorClassY):
    return [max(mi, 0) for mi in D.m]


def vcount(D: DivisorClassY) -> int:
    _check_degrees(D.d)
    n = D.n
    return prod(x + 1 for x in D.d) - sum(binom(n + mi - 1, n) for mi in _mults(D))


def fiber_terms(D: DivisorClassY):
    """Yield ``(i, I, term)`` for every nonzero summand of the fiber count.

    ``i`` is the 0-based point index, ``I`` a tuple of 0-based coordinates.
    The empty ``I`` terms are the usual point conditions.
    """
    _check_degrees(D.d)
    n, d = D.n, D.d
    for i, mi in enumerate(_mults(D)):
        for size in range(n + 1):
            for I in combinations(range(n), size):
                S = 1 + size + sum(d[c] for c in I)
                if mi >= S:
                    yield i, I, (-1) ** (size + 1) * binom(mi - S + n, n)


def fcount(D: DivisorClassY) -> int:
    return prod(x + 1 for x in D.d) + sum(t for _, _, t in fiber_terms(D))


@dataclass(frozen=True)
class DimReport:
    vcount: int
    fcount: int

    @property
    def vdim(self) -> int:
        return self.vcount - 1

    @property
    def edim(self) -> int:
        return max(self.vdim, -1)

    @property
    def fdim(self) -> int:
        return self.fcount - 1

    @property
    def efdim(self) -> int:
        return max(self.fdim, -1)

    def as_dict(self) -> dict:
        return {
            "vcount": self.vcount,
            "vdim": self.vdim,
            "edim": self.edim,
            "fcount": self.fcount,
            "fdim": self.fdim,
            "efdim": self.efdim,
        }


def dim_report(D: DivisorClassY) -> DimReport:
    return DimReport(vcount=vcount(D), fcount=fcount(D))


def effective_two_points(D: DivisorClassY) -> bool:
    """Emptiness test for at most two points: ``sum d >= m_1 + m_2``."""
    if D.r > 2:
        raise ValueError(f"effective_two_points needs r <= 2, got r={D.r}")
    m = list(D.m) + [0] * (2 - D.r)
    return sum(D.d) >= m[0] + m[1]


def _validate_fiber(D: DivisorClassY, j: int, I):
    I = tuple(sorted(set(I)))
    if not 1 <= j <= D.r:
        raise ValueError(f"point index {j} out of range 1..{D.r}")
    if not I or len(I) >= D.n or I[0] < 1 or I[-1] > D.n:
        raise ValueError(f"I must be a proper nonempty subset of 1..{D.n}, got {I}")
    return I


def fiber_multiplicity_bound(D: DivisorClassY, j: int, I) -> int:
    """Lower bound ``max(m_j - s_{I^c}, 0)`` for the multiplicity of the fiber
    ``F_{j,I}`` in the base locus.  ``j`` and ``I`` are 1-based.

    The bound is attained when ``r <= 2``.
    """
    I = _validate_fiber(D, j, I)
    s_comp = sum(D.d[c - 1] for c in range(1, D.n + 1) if c not in I)
    return max(D.m[j - 1] - s_comp, 0)
