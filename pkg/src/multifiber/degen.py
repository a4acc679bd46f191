"""Speciality by degeneration.

A system ``L = L_(d)(m)`` is first moved to its standard form.  With at most
two points the fiber count is exact, so speciality is decided directly.
Otherwise the largest degree ``d_1`` is split as ``(k - 1) + 1 + (d_1 - k)``
and the points are shared out between the two halves:

    L1 = L_(k-1, d_2, ..., d_n)(m_1, ..., m_s)
    L2 = L_(d_1-k, d_2, ..., d_n)(m_{s+1}, ..., m_r)

If both halves are non-special, their fiber counts have the same sign, every
``m_i`` with ``i <= s`` is at most ``k`` and every later ``m_j`` is at most
``d_1 - k + 1``, then the standard form is fiber non-special, which pins
down the dimension of ``L`` exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .dims import dim_report, fcount
from .lattice import DivisorClassY
from .weyl import standard_form

NON_SPECIAL = "non-special"
SPECIAL = "special"
UNDECIDED = "undecided"


@dataclass
class DegenTrace:
    system: DivisorClassY
    std: Optional[DivisorClassY] = None
    rule: str = ""
    split: Optional[tuple[int, int]] = None
    children: list["DegenTrace"] = field(default_factory=list)

    def walk(self):
        yield self
        for c in self.children:
            yield from c.walk()

    def as_dict(self) -> dict:
        out = {"system": str(self.system), "rule": self.rule}
        if self.std is not None:
            out["std"] = str(self.std)
        if self.split is not None:
            out["split"] = {"k": self.split[0], "s": self.split[1]}
            out["children"] = [c.as_dict() for c in self.children]
        return out


@dataclass
class Verdict:
    kind: str
    trace: DegenTrace
    certificate: Optional[dict] = None
    truncated: bool = False
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "truncated": self.truncated,
            "certificate": self.certificate,
            "notes": list(self.notes),
            "trace": self.trace.as_dict(),
        }


_NOTES = [
    "special certificate: efdim(std) > efdim(input)",
    "two-point base case: special iff efdim(std) > edim(input)",
    "splits tried with s closest to r/2 first",
    "split bound for trailing points: m_j <= d_1 - k + 1",
    "k ranges over 1..d_1",
]
_COMPAT_NOTES = [
    "special certificate: fdim(std) > edim(input) (literal)",
    "splits tried with s ascending (literal)",
    "two-point base case: special iff fdim >= edim (literal)",
    "split bound for trailing points: m_j <= d_n - k (literal)",
    "k ranges over 1..d_1 - 1 (literal)",
]


def _clean(D: DivisorClassY) -> DivisorClassY:
    # points of multiplicity <= 0 impose nothing
    return DivisorClassY(D.d, tuple(x for x in D.m if x > 0))


class _Search:
    def __init__(self, max_depth: Optional[int], strict_compat: bool):
        self.max_depth = max_depth
        self.strict = strict_compat
        self.memo: dict = {}
        self.truncated = False

    def run(self, D: DivisorClassY, depth: int) -> tuple[str, DegenTrace, Optional[dict]]:
        left = None if self.max_depth is None else self.max_depth - depth
        key = (D.d, D.m, left)
        if key not in self.memo:
            self.memo[key] = self._decide(D, depth)
        return self.memo[key]

    def _decide(self, D, depth):
        trace = DegenTrace(system=D)
        std, _ = standard_form(D)
        if std is None:
            trace.rule = "empty"
            return NON_SPECIAL, trace, None
        std = _clean(std)
        trace.std = std
        here = dim_report(D)
        rep = dim_report(std)
        # dim(D) = dim(std) >= efdim(std)
        beaten = here.edim if self.strict else here.efdim
        if rep.fdim > beaten:
            trace.rule = "fiber-certificate"
            cert = {
                "std": str(std),
                "fcount_std": rep.fcount,
                "vcount": here.vcount,
                "fcount": here.fcount,
            }
            return SPECIAL, trace, cert

        if std.r <= 2:
            trace.rule = "two-point"
            # two points: dim(D) = efdim(std) exactly
            if self.strict:
                special = rep.fdim >= rep.edim
            else:
                special = rep.efdim > here.edim
            return (SPECIAL if special else NON_SPECIAL), trace, None

        if self.max_depth is not None and depth >= self.max_depth:
            self.truncated = True
            trace.rule = "depth-limit"
            return UNDECIDED, trace, None

        d, m, r = std.d, std.m, std.r
        d1, rest = d[0], d[1:]
        top = d1 - 1 if self.strict else d1
        if self.strict:
            s_order = range(1, r)
        else:
            s_order = sorted(range(1, r), key=lambda s: (abs(2 * s - r), s))
        for k in range(1, top + 1):
            tail_bound = d[-1] - k if self.strict else d1 - k + 1
            for s in s_order:
                if m[0] > k or m[s] > tail_bound:
                    continue
                L1 = DivisorClassY((k - 1,) + rest, m[:s])
                L2 = DivisorClassY((d1 - k,) + rest, m[s:])
                if fcount(L1) * fcount(L2) < 0:
                    continue
                v1, t1, _ = self.run(L1, depth + 1)
                if v1 != NON_SPECIAL:
                    continue
                v2, t2, _ = self.run(L2, depth + 1)
                if v2 != NON_SPECIAL:
                    continue
                for child in (L1, L2):
                    rc = dim_report(child)
                    assert rc.efdim == rc.edim, f"non-special child {child} has efdim != edim"
                trace.rule = "split"
                trace.split = (k, s)
                trace.children = [t1, t2]
                # the split proves dim(D) = dim(std) = efdim(std)
                if rep.efdim > here.edim:
                    cert = {
                        "std": str(std),
                        "fcount_std": rep.fcount,
                        "vcount": here.vcount,
                        "fcount": here.fcount,
                    }
                    return SPECIAL, trace, cert
                return NON_SPECIAL, trace, None
        trace.rule = "no-split"
        return UNDECIDED, trace, None


def speciality(
    D: DivisorClassY, max_depth: Optional[int] = None, strict_compat: bool = False
) -> Verdict:
    """Decide whether ``D`` is special, non-special, or leave it undecided.

    A non-special answer is always a proof (modulo the two-point theorem and
    the degeneration theorem); a special answer comes with the standard form
    whose fiber count exceeds the input's.

    ``strict_compat`` uses the uncorrected rules instead: special as soon
    as ``fdim(std) > edim``, ``>=`` in the two-point test,
    ``m_j <= d_n - k``, ``k < d_1`` and ``s`` ascending.
    ``max_depth`` caps the recursion; hitting it makes the affected branches
    undecided and sets ``truncated``.
    """
    if any(x < 0 for x in D.d) or any(x < 0 for x in D.m):
        raise ValueError(f"speciality needs d >= 0 and m >= 0, got {D}")
    search = _Search(max_depth, strict_compat)
    kind, trace, cert = search.run(D, 0)
    return Verdict(
        kind=kind,
        trace=trace,
        certificate=cert,
        truncated=search.truncated,
        notes=list(_COMPAT_NOTES if strict_compat else _NOTES),
    )
