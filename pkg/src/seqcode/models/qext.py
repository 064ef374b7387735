"""The naturals extended by two absorbing atoms a0 and a1.

Operation tables, with n standard, a an atom, x arbitrary:

    a + x = a      n + a = a      n * a = a
    a * 0 = 0      a * x = a  (x != 0)

Successor is addition of 1, so each atom is its own successor.  Note the
deliberate asymmetry: 0 * a = a while a * 0 = 0, so the corner cases are
not commutative and checkers must not assume they are.  The atom swap
(identity on standard elements) preserves every operation, which is what
makes the two atoms indistinguishable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class QElem:
    """Element of the extended carrier: a standard natural or one of two atoms."""

    atom: Optional[int] = None  # 0 or 1 picks an atom; None means standard
    n: int = 0                  # the standard value; forced to 0 for atoms

    def __post_init__(self):
        if self.atom not in (None, 0, 1):
            raise ValueError(f"atom must be None, 0, or 1, got {self.atom!r}")
        if self.atom is None and self.n < 0:
            raise ValueError(f"standard part must be nonnegative, got {self.n}")
        if self.atom is not None and self.n != 0:
            raise ValueError("atoms carry no standard part")

    @property
    def is_atom(self) -> bool:
        return self.atom is not None

    def __repr__(self):
        return f"a{self.atom}" if self.is_atom else f"Std({self.n})"


def std(n: int) -> QElem:
    return QElem(None, n)


A0 = QElem(0, 0)
A1 = QElem(1, 0)
ZERO = std(0)
ONE = std(1)


def add(x: QElem, y: QElem) -> QElem:
    if x.is_atom:
        return x
    if y.is_atom:
        return y
    return std(x.n + y.n)


def mul(x: QElem, y: QElem) -> QElem:
    if x.is_atom:
        return ZERO if y == ZERO else x
    if y.is_atom:
        return y
    return std(x.n * y.n)


def succ(x: QElem) -> QElem:
    return add(x, ONE)


def pred(x: QElem) -> Optional[QElem]:
    """Some y with succ(y) == x, or None; only 0 has no predecessor."""
    if x.is_atom:
        return x
    return std(x.n - 1) if x.n > 0 else None


def qext_swap(x: QElem) -> QElem:
    """Swap the two atoms; identity on standard elements."""
    if not x.is_atom:
        return x
    return A1 if x.atom == 0 else A0


def fmt(x: QElem) -> str:
    return f"a{x.atom}" if x.is_atom else str(x.n)
