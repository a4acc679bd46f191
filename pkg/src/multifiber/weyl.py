"""Weyl-group reduction to standard form and the P^n <-> (P^1)^n correspondence."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .lattice import DivisorClassX, DivisorClassY, LatticeError


def _sorted_desc(xs):
    # stable on ties
    return tuple(sorted(xs, reverse=True))


def _guard(d, m) -> int:
    m1 = m[0] if len(m) > 0 else 0
    m2 = m[1] if len(m) > 1 else 0
    return sum(d[1:]) - m1 - m2


def is_pre_standard(D: DivisorClassY) -> bool:
    d, m = D.d, D.m
    if any(d[i] < d[i + 1] for i in range(len(d) - 1)) or d[-1] < 0:
        return False
    if any(m[i] < m[i + 1] for i in range(len(m) - 1)):
        return False
    return _guard(d, m) >= 0


def is_standard(D: DivisorClassY) -> bool:
    if not is_pre_standard(D):
        return False
    return D.r == 0 or D.m[-1] >= 0


@dataclass
class ReductionTrace:
    """Classes visited by the standard-form loop.

    ``steps[i]`` is the sorted class after the ``i``-th reflection.  ``outcome``
    is the final class, or ``None`` when the system is empty.
    """

    start: DivisorClassY
    steps: list[DivisorClassY] = field(default_factory=list)
    outcome: Optional[DivisorClassY] = None

    @property
    def empty(self) -> bool:
        return self.outcome is None


def standard_form(D: DivisorClassY) -> tuple[Optional[DivisorClassY], ReductionTrace]:
    """Reduce ``D`` along its Weyl orbit.

    Repeatedly sorts ``d`` and ``m`` and reflects in ``H_1 - E_1 - E_2`` while
    ``k = d_2 + ... + d_n - m_1 - m_2`` is negative.  Returns ``(None, trace)``
    if some degree turns negative, meaning the linear system is empty.
    Fewer than two points are padded with zero multiplicities internally.
    """
    r = D.r
    d = list(_sorted_desc(D.d))
    m = list(_sorted_desc(D.m)) + [0] * max(0, 2 - r)
    trace = ReductionTrace(start=D)
    while min(d) >= 0:
        k = _guard(d, m)
        if k >= 0:
            break
        d[0] += k
        m[0] += k
        m[1] += k
        d = list(_sorted_desc(d))
        m = list(_sorted_desc(m))
        trace.steps.append(DivisorClassY(d, _drop_padding(m, r)))
    if min(d) < 0:
        return None, trace
    out = DivisorClassY(d, _drop_padding(m, r))
    trace.outcome = out
    return out, trace


def _drop_padding(m, r):
    # padded slots are zero or negative after reflections; drop them from the tail
    if r >= 2:
        return tuple(m)
    m = sorted(m, reverse=True)
    return tuple(m[:r])


def phi_push(D: DivisorClassX) -> DivisorClassY:
    """Transport a class from the blow-up of P^n at ``s`` points to (P^1)^n.

    ``H -> sum H_i - (n-1) E_1``, ``E_i -> H_{n+1-i} - E_1`` for ``i <= n``,
    ``E_{n+1} -> E_2`` and ``E_i -> E_{i-n+1}`` beyond that.
    """
    n, s = D.n, D.s
    if s < n + 1:
        raise LatticeError(f"phi_push needs s >= n + 1 points, got s={s}, n={n}")
    m = D.m
    # coefficient of H_i comes from H and from E_{n+1-i}
    d = tuple(D.d0 - m[n - i] for i in range(1, n + 1))
    m1 = (n - 1) * D.d0 - sum(m[:n])
    return DivisorClassY(d, (m1,) + tuple(m[n:]))


def phi_pull(D: DivisorClassY) -> DivisorClassX:
    """Inverse of :func:`phi_push`."""
    n, r = D.n, D.r
    if r < 2:
        raise LatticeError(f"phi_pull needs r >= 2, got r={r}")
    d0 = sum(D.d) - D.m[0]
    first = tuple(d0 - D.d[n - k] for k in range(1, n + 1))
    return DivisorClassX(n, d0, first + tuple(D.m[1:]))
