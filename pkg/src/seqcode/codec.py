"""Sequence coding over arbitrary-precision naturals.

A finite sequence is a single natural ``w`` plus an externally carried
length.  ``w`` packs two numbers through the quadratic pairing
``(u + v)**2 + u``; entry ``i`` is the remainder of ``u`` modulo
``1 + (i+1)*v``.  Appending rebases the code onto a larger modulus family
and plants the new entry at the next position, so earlier entries decode
unchanged and every natural, however large, is admissible as an entry.

Numbers that are not of pairing shape still decode: the totalized reader
``beta_total`` maps them to all zeros, which keeps every operation here
total.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from seqcode._decimal import decimal_str, parse_decimal
from seqcode.witness import lcm_upto, recode_extend


class NotAPairCode(ValueError):
    """Raised when a number is not of the form (x + y)**2 + x."""


def _natural(n: int, what: str) -> int:
    if n < 0:
        raise ValueError(f"{what} must be nonnegative, got {n}")
    return n


def isqrt(n: int) -> int:
    """Floor square root: the unique s with s*s <= n < (s+1)*(s+1).

    Newton iteration on integers only; never goes anywhere near floats, so
    it is exact for naturals of any size.
    """
    _natural(n, "n")
    if n == 0:
        return 0
    s = 1 << ((n.bit_length() + 1) // 2)  # s >= sqrt(n), so the iteration descends
    while True:
        t = (s + n // s) // 2
        if t >= s:
            return s
        s = t


def pair(x: int, y: int) -> int:
    """Pack two naturals into one: (x + y)**2 + x."""
    _natural(x, "x")
    _natural(y, "y")
    return (x + y) ** 2 + x


def unpair(w: int) -> tuple[int, int]:
    """Invert ``pair``; raises NotAPairCode when w has no preimage.

    For s = isqrt(w) the only candidate is x = w - s*s, y = s - x, and it
    works exactly when w - s*s <= s.
    """
    _natural(w, "w")
    s = isqrt(w)
    x = w - s * s
    if x > s:
        raise NotAPairCode(w)
    return x, s - x


def is_pair_code(w: int) -> bool:
    """True iff w = pair(x, y) for some x, y."""
    s = isqrt(w)
    return w - s * s <= s


def beta(w: int, i: int) -> int | None:
    """Entry i of the code w, or None when w is not a pair code.

    With w = pair(u, v) this is u modulo 1 + (i+1)*v; over the naturals the
    remainder always exists and is automatically at most (i+1)*v.
    """
    _natural(i, "i")
    try:
        u, v = unpair(w)
    except NotAPairCode:
        return None
    return u % (1 + (i + 1) * v)


def beta_total(w: int, i: int) -> int:
    """Totalized entry reader: like ``beta`` but 0 on non-codes.

    A non-code has every position undefined, so position 0 already fails
    and the whole read collapses to 0; on pair codes the two readers agree.
    """
    value = beta(w, i)
    return 0 if value is None else value


@dataclass(frozen=True)
class SeqHandle:
    """A coded sequence: entry count plus the packed code.

    The length lives outside the code; codes are not self-delimiting.
    """

    len: int
    w: int

    def to_json(self) -> dict[str, str]:
        return {"len": decimal_str(self.len), "w": decimal_str(self.w)}

    @classmethod
    def from_json(cls, obj: dict) -> "SeqHandle":
        return cls(
            _natural(parse_decimal(obj["len"]), "len"),
            _natural(parse_decimal(obj["w"]), "w"),
        )


def seq_empty() -> SeqHandle:
    """The canonical empty sequence: length 0 with code 0 (= pair(0, 0))."""
    return SeqHandle(0, 0)


def seq_append(s: SeqHandle, x: int) -> SeqHandle:
    """Append x after position s.len - 1 without disturbing earlier entries.

    The code is first normalized to pairing shape, then rebased: the new
    modulus base v1 is the least positive multiple of lcm(1..k+1) that is
    at least max(v0, x).  Divisibility by every position gap keeps the
    moduli pairwise coprime, and v1 >= x makes x a legal remainder at the
    new position.
    """
    _natural(x, "x")
    k = s.len
    u0, v0 = unpair(normalize(s.w, k))
    step = lcm_upto(k + 1)
    v1 = ((max(v0, x, 1) + step - 1) // step) * step
    u1 = recode_extend(u0, v0, v1, x, k)
    return SeqHandle(k + 1, pair(u1, v1))


def seq_build(xs: Iterable[int]) -> SeqHandle:
    """Encode the given naturals by repeated ``seq_append``."""
    handle = seq_empty()
    for x in xs:
        handle = seq_append(handle, x)
    return handle


def seq_decode(s: SeqHandle) -> list[int]:
    """All entries of the handle: [beta_total(s.w, i) for i < s.len]."""
    return [beta_total(s.w, i) for i in range(s.len)]


def normalize(w: int, k: int) -> int:
    """A pair code whose first k plain entries equal beta_total(w, .).

    Pair codes already decode identically under ``beta`` and ``beta_total``
    and are returned unchanged.  Anything else is rebuilt entry by entry
    (which, for a non-code, re-encodes k zeros).  k = 0 always yields the
    canonical empty code 0.
    """
    _natural(w, "w")
    _natural(k, "k")
    if k == 0:
        return 0
    if is_pair_code(w):
        return w
    rebuilt = seq_empty()
    for i in range(k):
        rebuilt = seq_append(rebuilt, beta_total(w, i))
    return rebuilt.w


def verify_seq_step(w: int, k: int, x: int, w_new: int) -> bool:
    """Check one append against the decoded contract.

    True iff w_new decodes like w on every position below k and decodes to
    x at position k itself.
    """
    if beta_total(w_new, k) != x:
        return False
    return all(beta_total(w_new, i) == beta_total(w, i) for i in range(k))
