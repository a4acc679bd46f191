"""Picard lattices of blow-ups of (P^1)^n and P^n.

A class on the blow-up ``Y`` of ``(P^1)^n`` at ``r`` points is written

    D = d_1 H_1 + ... + d_n H_n - m_1 E_1 - ... - m_r E_r

and stored as the pair of integer tuples ``(d, m)``.  Note the sign: ``m``
holds the *subtracted* coefficients, so the exceptional divisor ``E_1`` itself
has ``m = (-1, 0, ...)``.  Classes on the blow-up ``X`` of ``P^n`` at ``s``
points are ``d0 H - sum m_k E_k``.

All arithmetic uses Python integers, so nothing can overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class LatticeError(ValueError):
    """Raised on malformed classes or incompatible lattices."""


@dataclass(frozen=True, eq=False)
class DivisorClassY:
    d: tuple[int, ...]
    m: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "d", tuple(int(x) for x in self.d))
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        if len(self.d) < 1:
            raise LatticeError("a class needs at least one H coefficient")

    @property
    def n(self) -> int:
        return len(self.d)

    @property
    def r(self) -> int:
        return len(self.m)

    @classmethod
    def zero(cls, n: int, r: int) -> "DivisorClassY":
        return cls((0,) * n, (0,) * r)

    @classmethod
    def H(cls, i: int, n: int, r: int) -> "DivisorClassY":
        """The class ``H_i`` (1-based index)."""
        if not 1 <= i <= n:
            raise LatticeError(f"H index {i} out of range 1..{n}")
        d = [0] * n
        d[i - 1] = 1
        return cls(d, (0,) * r)

    @classmethod
    def E(cls, j: int, n: int, r: int) -> "DivisorClassY":
        """The exceptional class ``E_j`` (1-based), i.e. ``m_j = -1``."""
        if not 1 <= j <= r:
            raise LatticeError(f"E index {j} out of range 1..{r}")
        m = [0] * r
        m[j - 1] = -1
        return cls((0,) * n, m)

    # Root instances compare equal to plain classes with the same coefficients.
    def __eq__(self, other):
        if not isinstance(other, DivisorClassY):
            return NotImplemented
        return self.d == other.d and self.m == other.m

    def __hash__(self):
        return hash((self.d, self.m))

    def _check(self, other: "DivisorClassY"):
        if (self.n, self.r) != (other.n, other.r):
            raise LatticeError(
                f"lattice mismatch: (n, r) = {(self.n, self.r)} vs {(other.n, other.r)}"
            )

    def __add__(self, other: "DivisorClassY") -> "DivisorClassY":
        self._check(other)
        return DivisorClassY(
            tuple(a + b for a, b in zip(self.d, other.d)),
            tuple(a + b for a, b in zip(self.m, other.m)),
        )

    def __neg__(self) -> "DivisorClassY":
        return DivisorClassY(tuple(-a for a in self.d), tuple(-a for a in self.m))

    def __sub__(self, other: "DivisorClassY") -> "DivisorClassY":
        return self + (-other)

    def __rmul__(self, k: int) -> "DivisorClassY":
        return DivisorClassY(tuple(k * a for a in self.d), tuple(k * a for a in self.m))

    def __str__(self) -> str:
        return f"({','.join(map(str, self.d))})({','.join(map(str, self.m))})"


@dataclass(frozen=True)
class DivisorClassX:
    n: int
    d0: int
    m: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "d0", int(self.d0))
        object.__setattr__(self, "m", tuple(int(x) for x in self.m))
        if self.n < 2:
            raise LatticeError("P^n needs n >= 2")

    @property
    def s(self) -> int:
        return len(self.m)

    def __add__(self, other: "DivisorClassX") -> "DivisorClassX":
        if (self.n, self.s) != (other.n, other.s):
            raise LatticeError("lattice mismatch")
        return DivisorClassX(
            self.n, self.d0 + other.d0, tuple(a + b for a, b in zip(self.m, other.m))
        )


def pair_y(A: DivisorClassY, B: DivisorClassY) -> int:
    """Intersection pairing on Pic(Y).

    ``H_i.H_j = 1 - delta_ij``, ``E_k.E_s = -delta_ks``, ``H_i.E_k = 0``.
    """
    A._check(B)
    sa, sb = sum(A.d), sum(B.d)
    # sum_{i != j} a_i b_j = (sum a)(sum b) - sum a_i b_i
    hh = sa * sb - sum(a * b for a, b in zip(A.d, B.d))
    ee = sum(a * b for a, b in zip(A.m, B.m))
    return hh - ee


def pair_x(A: DivisorClassX, B: DivisorClassX) -> int:
    """Pairing on Pic(X): ``H^2 = n - 1``, ``E_i.E_j = -delta_ij``."""
    if (A.n, A.s) != (B.n, B.s):
        raise LatticeError("lattice mismatch")
    return (A.n - 1) * A.d0 * B.d0 - sum(a * b for a, b in zip(A.m, B.m))


def canonical_y(n: int, r: int) -> DivisorClassY:
    """``K_Y = -2 sum H_i + (n-1) sum E_j``."""
    if n < 2:
        raise LatticeError("n must be >= 2")
    return DivisorClassY((-2,) * n, (-(n - 1),) * r)


def is_minus_one_class(D: DivisorClassY) -> bool:
    """Numerical (-1)-class test: ``D^2 = -1`` and ``D.K_Y = -(n-1)``.

    Irreducibility of the class is not checked.
    """
    K = canonical_y(D.n, D.r)
    return pair_y(D, D) == -1 and pair_y(D, K) == -(D.n - 1)


class Root(DivisorClassY):
    """A class of self-intersection -2."""

    def __post_init__(self):
        super().__post_init__()
        if pair_y(self, self) != -2:
            raise LatticeError(f"{self} is not a root: self-pairing {pair_y(self, self)}")


def as_root(D: DivisorClassY) -> Root:
    return D if isinstance(D, Root) else Root(D.d, D.m)


def reflect(D: DivisorClassY, R: DivisorClassY) -> DivisorClassY:
    """Picard-Lefschetz reflection ``D -> D + (D.R) R``."""
    R = as_root(R)
    k = pair_y(D, R)
    if k == 0:
        return D
    return D + k * R


def weyl_generators(n: int, r: int) -> list[Root]:
    """The ``n + r - 1`` simple roots generating W(Y).

    Order: ``H_1 - E_1 - E_2``, then ``H_i - H_{i+1}``, then ``E_j - E_{j+1}``.
    """
    if r < 2:
        raise LatticeError("the Weyl generators need r >= 2")
    if n < 2:
        raise LatticeError("n must be >= 2")
    H = lambda i: DivisorClassY.H(i, n, r)
    E = lambda j: DivisorClassY.E(j, n, r)
    roots = [H(1) - E(1) - E(2)]
    roots += [H(i) - H(i + 1) for i in range(1, n)]
    roots += [E(j) - E(j + 1) for j in range(1, r)]
    return [as_root(R) for R in roots]


def class_y(d: Sequence[int], m: Sequence[int] = ()) -> DivisorClassY:
    return DivisorClassY(tuple(d), tuple(m))
