"""Text notation ``(d_1,...,d_n)(m_1^e_1,...,m_k^e_k)`` for linear systems.

``m^e`` repeats the multiplicity ``m`` ``e`` times.  Whitespace is ignored.
"""

from __future__ import annotations

from itertools import groupby

from .lattice import DivisorClassY


class ParseError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{msg} at position {pos}: {text!r}")


class _Reader:
    def __init__(self, text: str, allow_negative: bool):
        self.text = text
        self.s = "".join(text.split())
        # map positions in the squeezed string back to the original
        self.where = [i for i, ch in enumerate(text) if not ch.isspace()]
        self.i = 0
        self.neg = allow_negative

    def pos(self) -> int:
        if self.i < len(self.where):
            return self.where[self.i]
        return len(self.text)

    def fail(self, msg):
        raise ParseError(msg, self.text, self.pos())

    def peek(self) -> str:
        return self.s[self.i] if self.i < len(self.s) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.fail(f"expected {ch!r}")
        self.i += 1

    def integer(self) -> int:
        start = self.i
        if self.neg and self.peek() == "-":
            self.i += 1
        while self.peek().isdigit():
            self.i += 1
        tok = self.s[start : self.i]
        if tok in ("", "-"):
            self.i = start
            self.fail("expected a non-negative integer" if not self.neg else "expected an integer")
        return int(tok)

    def group(self, mults: bool) -> list[int]:
        self.expect("(")
        out: list[int] = []
        if mults and self.peek() == ")":
            self.i += 1
            return out
        while True:
            v = self.integer()
            if mults and self.peek() == "^":
                self.i += 1
                e = self.integer()
                if e < 0:
                    self.fail("negative exponent")
                out.extend([v] * e)
            else:
                out.append(v)
            if self.peek() == ",":
                self.i += 1
                continue
            self.expect(")")
            return out


def parse_system(text: str, allow_negative: bool = False) -> DivisorClassY:
    """Parse ``"(13,9,5)(11^2,7^2,3^2)"`` into a :class:`DivisorClassY`.

    Multiplicities keep the order they are written in.  Raises
    :class:`ParseError` with the offending position.
    """
    rd = _Reader(text, allow_negative)
    d = rd.group(mults=False)
    m = rd.group(mults=True)
    if rd.peek():
        rd.fail("trailing input")
    return DivisorClassY(tuple(d), tuple(m))


def render_mults(m) -> str:
    parts = []
    for v, run in groupby(sorted(m, reverse=True)):
        e = len(list(run))
        parts.append(f"{v}^{e}" if e > 1 else f"{v}")
    return "(" + ",".join(parts) + ")"


def render_system(D: DivisorClassY) -> str:
    """Inverse of :func:`parse_system`, multiplicities sorted non-increasing."""
    return "(" + ",".join(map(str, D.d)) + ")" + render_mults(D.m)
