"""Finite-field interpolation oracle and exact monomial counts for two points.

The oracle builds the matrix of all derivative conditions

    d^alpha f (p_i) = 0,   |alpha| <= m_i - 1,

for polynomials ``f`` of multidegree at most ``d`` in the affine chart
``y_1 = ... = y_n = 1``, at random points over ``F_p``, and reads the
dimension off its rank.  A random specialization can only lose rank, so the
oracle never under-reports the dimension of a very general configuration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import isqrt

import numpy as np

from ._modp import rank_mod_p
from .dims import _validate_fiber
from .lattice import DivisorClassY

DEFAULT_PRIME = 2147483647


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    return all(p % f for f in range(3, isqrt(p) + 1, 2))


@dataclass(frozen=True)
class InterpConfig:
    prime: int = DEFAULT_PRIME
    seed: int = 0
    trials: int = 3

    def __post_init__(self):
        if not _is_prime(self.prime) or self.prime >= 2**31:
            raise ValueError(f"prime must be a prime below 2**31, got {self.prime}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")

    def check_system(self, D: DivisorClassY):
        bound = 2 * max(sum(D.d), max(D.m, default=0))
        if self.prime <= bound:
            raise ValueError(
                f"prime {self.prime} too small for {D}: need > {bound}"
            )


@dataclass
class InterpReport:
    cols: int
    rows: int
    rank: int
    trial_ranks: list[int] = field(default_factory=list)
    prime: int = DEFAULT_PRIME
    seed: int = 0
    # Schwartz-Zippel bound on the chance that one trial lost rank
    failure_bound: float = 0.0

    @property
    def dim_affine(self) -> int:
        return self.cols - self.rank

    @property
    def dim_proj(self) -> int:
        return self.dim_affine - 1

    def as_dict(self) -> dict:
        return {
            "cols": self.cols,
            "rows": self.rows,
            "rank": self.rank,
            "dim_affine": self.dim_affine,
            "dim_proj": self.dim_proj,
            "trial_ranks": list(self.trial_ranks),
            "prime": self.prime,
            "seed": self.seed,
            "failure_bound": self.failure_bound,
        }


def condition_multiindices(m: int, d) -> list[tuple[int, ...]]:
    """Multi-indices ``alpha`` with ``|alpha| <= m - 1`` and ``alpha <= d``."""
    if m <= 0:
        return []
    out = []

    def rec(prefix, j, budget):
        if j == len(d):
            out.append(tuple(prefix))
            return
        for a in range(min(budget, d[j]) + 1):
            prefix.append(a)
            rec(prefix, j + 1, budget - a)
            prefix.pop()

    rec([], 0, m - 1)
    return out


def monomial_exponents(d) -> np.ndarray:
    """All ``beta`` with ``0 <= beta <= d``, one per row (lexicographic)."""
    return np.array(list(product(*(range(x + 1) for x in d))), dtype=np.int64).reshape(
        -1, len(d)
    )


def _derivative_table(x: int, dmax: int, p: int) -> np.ndarray:
    """``T[a, b] = b!/(b-a)! * x^(b-a) mod p`` (zero for ``b < a``)."""
    T = np.zeros((dmax + 1, dmax + 1), dtype=np.int64)
    for b in range(dmax + 1):
        coef = 1
        for a in range(b + 1):
            T[a, b] = coef * pow(x, b - a, p) % p
            coef = coef * (b - a) % p
    return T


def build_matrix(D: DivisorClassY, points, cfg: InterpConfig = InterpConfig()) -> np.ndarray:
    """Conditions matrix of ``D`` at the given points over ``F_p``.

    Rows run over (point, alpha), columns over the monomials ``x^beta`` in the
    order of :func:`monomial_exponents`.
    """
    p = cfg.prime
    cfg.check_system(D)
    d = D.d
    if any(x < 0 for x in d):
        raise ValueError(f"negative degree in {D}")
    pts = [tuple(int(c) % p for c in q) for q in points]
    if len(pts) != D.r:
        raise ValueError(f"expected {D.r} points, got {len(pts)}")
    for q in pts:
        if len(q) != D.n:
            raise ValueError(f"point {q} does not have {D.n} coordinates")
        if any(c == 0 for c in q):
            raise ValueError(f"point {q} has a zero coordinate")
    if len(set(pts)) != len(pts):
        raise ValueError("points must be pairwise distinct")

    betas = monomial_exponents(d)
    blocks = []
    for q, mi in zip(pts, D.m):
        alphas = condition_multiindices(mi, d)
        if not alphas:
            continue
        alphas = np.array(alphas, dtype=np.int64)
        block = np.ones((len(alphas), len(betas)), dtype=np.int64)
        for j in range(D.n):
            T = _derivative_table(q[j], d[j], p)
            block = block * T[alphas[:, j][:, None], betas[:, j][None, :]] % p
        blocks.append(block)
    if not blocks:
        return np.zeros((0, len(betas)), dtype=np.int64)
    return np.vstack(blocks)


def random_points(n: int, r: int, p: int, rng: np.random.Generator) -> list[tuple[int, ...]]:
    """``r`` distinct points of the torus ``(F_p^*)^n``."""
    pts: list[tuple[int, ...]] = []
    while len(pts) < r:
        q = tuple(int(c) for c in rng.integers(1, p, size=n))
        if q not in pts:
            pts.append(q)
    return pts


def dim_oracle(D: DivisorClassY, cfg: InterpConfig = InterpConfig()) -> InterpReport:
    """Dimension of ``D`` at random points, maximised over ``cfg.trials`` trials.

    Negative multiplicities are treated as zero.  Trial ``t`` draws its points
    from ``default_rng([seed, t])``, so the report only depends on ``(D, cfg)``.
    """
    D = DivisorClassY(D.d, tuple(max(x, 0) for x in D.m))
    ranks = []
    M = None
    for t in range(cfg.trials):
        rng = np.random.default_rng([cfg.seed, t])
        M = build_matrix(D, random_points(D.n, D.r, cfg.prime, rng), cfg)
        ranks.append(rank_mod_p(M, cfg.prime))
        if ranks[-1] == min(M.shape):
            break
    rank = max(ranks)
    # each entry has degree <= sum(d) in the point coordinates
    bound = min(1.0, rank * sum(D.d) / (cfg.prime - 1))
    return InterpReport(
        cols=M.shape[1],
        rows=M.shape[0],
        rank=rank,
        trial_ranks=ranks,
        prime=cfg.prime,
        seed=cfg.seed,
        failure_bound=bound,
    )


def _two_point_mults(D: DivisorClassY):
    if D.r > 2:
        raise ValueError(f"two-point machinery needs r <= 2, got r={D.r}")
    m = [max(x, 0) for x in D.m] + [0] * (2 - D.r)
    return m[0], m[1]


def monomial_basis_two_points(D: DivisorClassY) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Monomials ``prod x_i^a_i y_i^b_i`` spanning the system when the two
    points are ``([0:1],...)`` and ``([1:0],...)``.

    Returned as ``(a, b)`` exponent pairs with ``a + b = d``,
    ``sum a >= m_1`` and ``sum b >= m_2``.
    """
    m1, m2 = _two_point_mults(D)
    total = sum(D.d)
    out = []
    for a in product(*(range(x + 1) for x in D.d)):
        sa = sum(a)
        if sa >= m1 and total - sa >= m2:
            out.append((a, tuple(x - y for x, y in zip(D.d, a))))
    return out


def fiber_multiplicity_exact_r2(D: DivisorClassY, j: int, I) -> int:
    """Exact multiplicity of the fiber ``F_{j,I}`` in the base locus for
    ``r <= 2``, read off the monomial basis.  ``j`` and ``I`` are 1-based.
    """
    _two_point_mults(D)
    padded = DivisorClassY(D.d, tuple(D.m) + (0,) * (2 - D.r))
    I = _validate_fiber(padded, j, I)
    basis = monomial_basis_two_points(D)
    if not basis:
        raise ValueError(f"{D} is empty")
    side = 0 if j == 1 else 1
    return min(sum(mono[side][c - 1] for c in I) for mono in basis)
