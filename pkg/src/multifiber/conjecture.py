"""Predictions for (P^1)^3 driven by the quadric class Q = (1,1,1)(1^7).

For a class ``D`` in standard form on ``(P^1)^3`` put

    q(D) = (d_1+1)(d_2+1)(d_3+1) - d_1 d_2 d_3 - sum_{i<=7} m_i (m_i+1) / 2.

When ``q(D) <= 0`` the prediction is ``h^0(D) = h^0(D - Q)``.  Otherwise ``D``
is predicted fiber non-special, and special exactly when ``m_1 > d_3 + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import prod
from typing import Optional

from .dims import dim_report
from .interp import InterpConfig, InterpReport, dim_oracle
from .lattice import DivisorClassY
from .weyl import is_standard, standard_form

REDUCE_BY_Q = "reduce-by-Q"
SPECIAL = "special"
NON_SPECIAL = "non-special"


def _need_three(D: DivisorClassY):
    if D.n != 3:
        raise ValueError(f"only defined on (P^1)^3, got n={D.n}")


def q_value(D: DivisorClassY) -> int:
    _need_three(D)
    d1, d2, d3 = D.d
    # m past the seventh point does not meet Q
    tail = sum(mi * (mi + 1) // 2 for mi in D.m[:7])
    return prod(x + 1 for x in D.d) - d1 * d2 * d3 - tail


def minus_q(D: DivisorClassY) -> DivisorClassY:
    _need_three(D)
    k = min(D.r, 7)
    return DivisorClassY(
        tuple(x - 1 for x in D.d),
        tuple(mi - 1 for mi in D.m[:k]) + tuple(D.m[k:]),
    )


def conjecture_predict(D: DivisorClassY) -> str:
    _need_three(D)
    if not is_standard(D):
        raise ValueError(f"{D} is not in standard form")
    if q_value(D) <= 0:
        return REDUCE_BY_Q
    m1 = D.m[0] if D.r else 0
    return SPECIAL if m1 > D.d[-1] + 1 else NON_SPECIAL


@dataclass
class ConjectureReport:
    system: DivisorClassY
    chain: list[dict] = field(default_factory=list)
    predicted_count: int = 0
    terminal_kind: Optional[str] = None
    oracle: Optional[InterpReport] = None

    @property
    def agree(self) -> bool:
        return self.oracle is not None and self.oracle.dim_affine == self.predicted_count

    def as_dict(self) -> dict:
        return {
            "system": str(self.system),
            "chain": self.chain,
            "predicted_count": self.predicted_count,
            "terminal_kind": self.terminal_kind,
            "oracle": None if self.oracle is None else self.oracle.as_dict(),
            "agree": self.agree,
        }


def predict_count(D: DivisorClassY) -> ConjectureReport:
    """Follow ``D -> D - Q`` while ``q <= 0`` and read off the predicted
    section count at the end of the chain.  Classes are re-standardized
    after every subtraction; an empty standard form predicts zero.
    """
    _need_three(D)
    rep = ConjectureReport(system=D)
    cur = D
    while True:
        if min(cur.d) < 0:
            rep.chain.append({"class": str(cur), "empty": True})
            rep.predicted_count = 0
            return rep
        std, _ = standard_form(cur)
        if std is None:
            rep.chain.append({"class": str(cur), "empty": True})
            rep.predicted_count = 0
            return rep
        std = DivisorClassY(std.d, tuple(x for x in std.m if x > 0))
        kind = conjecture_predict(std)
        rep.chain.append({"class": str(cur), "std": str(std), "q": q_value(std), "prediction": kind})
        if kind == REDUCE_BY_Q:
            cur = minus_q(std)
            continue
        rep.terminal_kind = kind
        rep.predicted_count = max(dim_report(std).fcount, 0)
        return rep


def conjecture_test(D: DivisorClassY, cfg: InterpConfig = InterpConfig()) -> ConjectureReport:
    """Compare the predicted section count of ``D`` with the oracle."""
    rep = predict_count(D)
    rep.oracle = dim_oracle(D, cfg)
    return rep
