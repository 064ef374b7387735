"""Executable axioms and derived laws for the model laboratory.

Each entry is a closed universal statement in at most three variables; the
checker supplies assignments and we evaluate the matrix.  Existential
subformulas are decided exactly through model hooks (direct subtraction or
predecessor computation), never by unbounded search, and any witness a
hook produces is re-verified on the spot.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from seqcode.models import qext


@dataclass(frozen=True)
class Axiom:
    id: str
    arity: int
    statement: str
    needs_order: bool
    holds: Callable  # holds(model, args) -> bool


def _succ(m, x):
    return m.add(x, m.one)


def _subtraction(m, a):
    if not m.le(a[0], a[1]):
        return True
    z = m.subtract(a[0], a[1])
    return z is not None and m.add(z, a[0]) == a[1]


CORE_AXIOMS = (
    Axiom("A1", 1, "x + 0 = x", False,
          lambda m, a: m.add(a[0], m.zero) == a[0]),
    Axiom("A2", 2, "x + y = y + x", False,
          lambda m, a: m.add(a[0], a[1]) == m.add(a[1], a[0])),
    Axiom("A3", 3, "(x + y) + z = x + (y + z)", False,
          lambda m, a: m.add(m.add(a[0], a[1]), a[2]) == m.add(a[0], m.add(a[1], a[2]))),
    Axiom("M1", 1, "x * 1 = x", False,
          lambda m, a: m.mul(a[0], m.one) == a[0]),
    Axiom("M2", 2, "x * y = y * x", False,
          lambda m, a: m.mul(a[0], a[1]) == m.mul(a[1], a[0])),
    Axiom("M3", 3, "(x * y) * z = x * (y * z)", False,
          lambda m, a: m.mul(m.mul(a[0], a[1]), a[2]) == m.mul(a[0], m.mul(a[1], a[2]))),
    Axiom("AM", 3, "x * (y + z) = x*y + x*z", False,
          lambda m, a: m.mul(a[0], m.add(a[1], a[2])) == m.add(m.mul(a[0], a[1]), m.mul(a[0], a[2]))),
    Axiom("O1", 2, "x <= y or y <= x", True,
          lambda m, a: m.le(a[0], a[1]) or m.le(a[1], a[0])),
    Axiom("O2", 3, "(x <= y and y <= z) -> x <= z", True,
          lambda m, a: not (m.le(a[0], a[1]) and m.le(a[1], a[2])) or m.le(a[0], a[2])),
    Axiom("S1", 1, "not (x + 1 <= x)", True,
          lambda m, a: not m.le(_succ(m, a[0]), a[0])),
    Axiom("S2", 2, "x <= y -> (x = y or x + 1 <= y)", True,
          lambda m, a: not m.le(a[0], a[1]) or a[0] == a[1] or m.le(_succ(m, a[0]), a[1])),
    Axiom("OA", 3, "x <= y -> x + z <= y + z", True,
          lambda m, a: not m.le(a[0], a[1]) or m.le(m.add(a[0], a[2]), m.add(a[1], a[2]))),
    Axiom("OM", 3, "x <= y -> x * z <= y * z", True,
          lambda m, a: not m.le(a[0], a[1]) or m.le(m.mul(a[0], a[2]), m.mul(a[1], a[2]))),
)

DERIVED_LAWS = (
    Axiom("LE_ANTISYM", 2, "(x <= y and y <= x) -> x = y", True,
          lambda m, a: not (m.le(a[0], a[1]) and m.le(a[1], a[0])) or a[0] == a[1]),
    Axiom("ADD_CANCEL_LE", 3, "x + z <= y + z -> x <= y", True,
          lambda m, a: not m.le(m.add(a[0], a[2]), m.add(a[1], a[2])) or m.le(a[0], a[1])),
    Axiom("MUL_ZERO", 1, "x * 0 = 0", False,
          lambda m, a: m.mul(a[0], m.zero) == m.zero),
    Axiom("ZERO_MIN", 1, "0 <= x", True,
          lambda m, a: m.le(m.zero, a[0])),
    Axiom("MUL_CANCEL_LE", 3, "(z != 0 and x*z <= y*z) -> x <= y", True,
          lambda m, a: a[2] == m.zero or not m.le(m.mul(a[0], a[2]), m.mul(a[1], a[2])) or m.le(a[0], a[1])),
    Axiom("LE_SUCC_SPLIT", 2, "x <= y + 1 <-> (x <= y or x = y + 1)", True,
          lambda m, a: m.le(a[0], _succ(m, a[1])) == (m.le(a[0], a[1]) or a[0] == _succ(m, a[1]))),
)

SUBTRACTION = Axiom("SUBTRACTION", 2, "x <= y -> exists z (z + x = y)", True, _subtraction)

REGISTRY = {ax.id: ax for ax in CORE_AXIOMS + DERIVED_LAWS + (SUBTRACTION,)}


def _q3(m, a):
    if a[0] == m.zero:
        return True
    y = m.pred(a[0])
    return y is not None and _succ(m, y) == a[0]


Q_AXIOMS = (
    Axiom("Q1", 2, "S(x) = S(y) -> x = y", False,
          lambda m, a: _succ(m, a[0]) != _succ(m, a[1]) or a[0] == a[1]),
    Axiom("Q2", 1, "S(x) != 0", False,
          lambda m, a: _succ(m, a[0]) != m.zero),
    Axiom("Q3", 1, "x != 0 -> exists y (x = S(y))", False, _q3),
    Axiom("Q4", 1, "x + 0 = x", False,
          lambda m, a: m.add(a[0], m.zero) == a[0]),
    Axiom("Q5", 2, "x + S(y) = S(x + y)", False,
          lambda m, a: m.add(a[0], _succ(m, a[1])) == _succ(m, m.add(a[0], a[1]))),
    Axiom("Q6", 1, "x * 0 = 0", False,
          lambda m, a: m.mul(a[0], m.zero) == m.zero),
    Axiom("Q7", 2, "x * S(y) = x*y + x", False,
          lambda m, a: m.mul(a[0], _succ(m, a[1])) == m.add(m.mul(a[0], a[1]), a[0])),
)


def _automorphism(m, a):
    f = qext.qext_swap
    x, y = a
    return (
        f(m.add(x, y)) == m.add(f(x), f(y))
        and f(m.mul(x, y)) == m.mul(f(x), f(y))
        and f(f(x)) == x
        and f(_succ(m, x)) == _succ(m, f(x))
        and f(m.zero) == m.zero
        and f(m.one) == m.one
    )


AUTOMORPHISM = Axiom(
    "AUTOMORPHISM", 2,
    "the atom swap preserves 0, 1, successor, + and *, and is an involution",
    False, _automorphism,
)
