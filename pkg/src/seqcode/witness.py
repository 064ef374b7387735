"""Constructive modular witnesses backing the sequence codec.

Everything here is built from +, * and divisibility alone, and everything
returns checkable objects: products divisible by a whole family of moduli,
explicit modular inverses together with their quotients, and recoded
residue systems.  Certificates re-verify by direct evaluation instead of
trusting their own construction.  ``crt`` is the deliberately independent
cross-check: it reconstructs residue systems with extended gcd, an
algorithm the constructive route never touches.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from seqcode._decimal import decimal_str, parse_decimal


class ZeroModulus(ZeroDivisionError):
    """Remainder taken against modulus 0; no z < 0 can exist."""


class DomainError(ValueError):
    """Arguments would force a difference below zero."""


class PreconditionViolated(ValueError):
    """A stated divisibility or bound requirement does not hold."""


class NotCoprime(ValueError):
    """CRT moduli share a nontrivial factor."""


def rem(x: int, m: int) -> int:
    """The unique z < m with x = z + q*m for some q.

    Raises ZeroModulus for m = 0, where no such z exists.
    """
    if m == 0:
        raise ZeroModulus("x rem 0 is undefined")
    return x % m


def divides(d: int, x: int) -> bool:
    """True iff x = q*d for some q; divides(0, x) holds only for x = 0."""
    if d == 0:
        return x == 0
    return x % d == 0


def lcm_upto(k: int) -> int:
    """Least common multiple of 1..k (1 when k = 0)."""
    return math.lcm(*range(2, k + 1)) if k >= 2 else 1


def divisor_product(k: int, v: int) -> int:
    """Product of 1 + t*v over t = 1..k; the empty product is 1.

    The result is divisible by every factor 1 + t*v with t <= k, which is
    what lets ``recode_extend`` use it as a term that vanishes modulo all
    smaller-position moduli at once.
    """
    u = 1
    for t in range(1, k + 1):
        u *= 1 + t * v
    return u


@dataclass(frozen=True)
class FactorWitness:
    """Closed-form inverse of 1 + kprime*v modulo 1 + i*v, for v = z*(i - kprime).

    The defining identity is exact over the naturals:

        (1 + kprime*v) * pprime == 1 + (1 + i*v) * qprime
    """

    kprime: int
    i: int
    z: int
    pprime: int
    qprime: int

    @property
    def v(self) -> int:
        return self.z * (self.i - self.kprime)

    def verify(self) -> bool:
        """Re-evaluate the defining identity from scratch."""
        if self.kprime < 1 or self.i < self.kprime + 1:
            return False
        v = self.v
        return (1 + self.kprime * v) * self.pprime == 1 + (1 + self.i * v) * self.qprime

    def to_json(self) -> dict[str, str]:
        return {
            "type": "factor-inverse",
            "kprime": decimal_str(self.kprime),
            "i": decimal_str(self.i),
            "z": decimal_str(self.z),
            "pprime": decimal_str(self.pprime),
            "qprime": decimal_str(self.qprime),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "FactorWitness":
        return cls(*(parse_decimal(obj[f]) for f in ("kprime", "i", "z", "pprime", "qprime")))


def factor_inverse(kprime: int, i: int, z: int) -> FactorWitness:
    """Invert the single factor 1 + kprime*v modulo 1 + i*v, with v = z*(i - kprime).

    The witness is polynomial in the inputs:

        pprime = 1 + kprime + i*kprime*(i - (kprime+1))*z
        qprime = kprime + kprime**2 * (i - (kprime+1))*z

    When i = kprime + 1 the z terms vanish and the pair collapses to
    (1 + kprime, kprime), which still satisfies the identity.
    """
    if kprime < 1:
        raise DomainError(f"kprime must be at least 1, got {kprime}")
    if i < kprime + 1:
        raise DomainError(f"need i >= kprime + 1, got i={i} with kprime={kprime}")
    gap = i - (kprime + 1)
    witness = FactorWitness(
        kprime=kprime,
        i=i,
        z=z,
        pprime=1 + kprime + i * kprime * gap * z,
        qprime=kprime + kprime * kprime * gap * z,
    )
    if not witness.verify():  # witnesses are never trusted from construction
        raise RuntimeError(f"factor witness failed its own identity: {witness}")
    return witness


@dataclass(frozen=True)
class InverseCertificate:
    """Witness that divisor_product(k, v) is invertible modulo 1 + i*v.

    Carries the inverse p and the quotient q with u*p == 1 + (1 + i*v)*q,
    together with the applicability conditions: i > k and (i - j) | v for
    every 0 < j <= k.
    """

    k: int
    v: int
    i: int
    u: int
    p: int
    q: int

    def verify(self) -> bool:
        """Re-check every stated invariant by direct evaluation."""
        if self.i <= self.k:
            return False
        if any(not divides(self.i - j, self.v) for j in range(1, self.k + 1)):
            return False
        if self.u != divisor_product(self.k, self.v):
            return False
        return self.u * self.p == 1 + (1 + self.i * self.v) * self.q

    def to_json(self) -> dict[str, str]:
        return {
            "type": "product-inverse",
            "k": decimal_str(self.k),
            "v": decimal_str(self.v),
            "i": decimal_str(self.i),
            "u": decimal_str(self.u),
            "p": decimal_str(self.p),
            "q": decimal_str(self.q),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "InverseCertificate":
        return cls(*(parse_decimal(obj[f]) for f in ("k", "v", "i", "u", "p", "q")))


def product_inverse(k: int, v: int, i: int) -> InverseCertificate:
    """Build the inverse certificate for divisor_product(k, v) modulo 1 + i*v.

    Level 0 is (p, q) = (1, 0).  Going from level t-1 to t multiplies in the
    factor inverse of 1 + t*v (its z is v // (i - t), exact by precondition)
    and recombines the quotient as q + q' + q*q'*(1 + i*v), so each level
    stays certificate-checkable on its own.
    """
    if i <= k:
        raise PreconditionViolated(f"need i > k, got i={i}, k={k}")
    for j in range(1, k + 1):
        if not divides(i - j, v):
            raise PreconditionViolated(f"i - {j} = {i - j} must divide v = {v}")
    p, q = 1, 0
    modulus = 1 + i * v
    for t in range(1, k + 1):
        step = factor_inverse(t, i, v // (i - t))
        p, q = p * step.pprime, q + step.qprime + q * step.qprime * modulus
    cert = InverseCertificate(k=k, v=v, i=i, u=divisor_product(k, v), p=p, q=q)
    if not cert.verify():  # certificates are never trusted from construction
        raise RuntimeError(f"inverse certificate failed its own identity: {cert}")
    return cert


def recode_extend(u: int, v: int, vprime: int, x: int, k: int) -> int:
    """Carry k remainders of u onto the moduli 1 + t*vprime and plant x next.

    Requires vprime divisible by 1..k, vprime >= v, and (k+1)*vprime >= x.
    Returns u' with

        u' rem (1 + t*vprime) == u rem (1 + t*v)   for 1 <= t <= k,
        u' rem (1 + (k+1)*vprime) == x.

    Built bottom-up.  The level-t correction term carries the factor
    divisor_product(t, vprime), so it is invisible to every position below
    t; multiplied by the certified inverse it is exactly 1 modulo
    1 + (t+1)*vprime, which plants the level-t target there.
    """
    for t in range(1, k + 1):
        if not divides(t, vprime):
            raise PreconditionViolated(f"vprime = {vprime} must be divisible by {t}")
    if vprime < v:
        raise PreconditionViolated(f"need vprime >= v, got vprime={vprime}, v={v}")
    if (k + 1) * vprime < x:
        raise PreconditionViolated(f"need (k+1)*vprime >= x, got {(k + 1) * vprime} < {x}")
    if k == 0:
        return x
    acc = rem(u, 1 + v)
    for t in range(1, k + 1):
        target = x if t == k else rem(u, 1 + (t + 1) * v)
        cert = product_inverse(t, vprime, t + 1)
        acc = acc + (target + acc * (t + 1) * vprime) * cert.u * cert.p
    return acc


@dataclass(frozen=True)
class RecodeWitness:
    """Audit record for one recode_extend call: the inputs plus claimed output."""

    u: int
    v: int
    vprime: int
    x: int
    k: int
    uprime: int

    def verify(self) -> bool:
        for t in range(1, self.k + 1):
            if rem(self.uprime, 1 + t * self.vprime) != rem(self.u, 1 + t * self.v):
                return False
        return rem(self.uprime, 1 + (self.k + 1) * self.vprime) == self.x

    def to_json(self) -> dict[str, str]:
        return {
            "type": "recode",
            "u": decimal_str(self.u),
            "v": decimal_str(self.v),
            "vprime": decimal_str(self.vprime),
            "x": decimal_str(self.x),
            "k": decimal_str(self.k),
            "uprime": decimal_str(self.uprime),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "RecodeWitness":
        return cls(*(parse_decimal(obj[f]) for f in ("u", "v", "vprime", "x", "k", "uprime")))


_WITNESS_TYPES = {
    "factor-inverse": FactorWitness,
    "product-inverse": InverseCertificate,
    "recode": RecodeWitness,
}


def witness_from_json(obj: dict):
    """Deserialize any witness by its "type" tag."""
    try:
        cls = _WITNESS_TYPES[obj["type"]]
    except KeyError:
        raise ValueError(f"unknown witness type: {obj.get('type')!r}") from None
    return cls.from_json(obj)


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    # returns (g, s, t) with a*s + b*t == g == gcd(a, b)
    s, s0, t, t0, r, r0 = 1, 0, 0, 1, a, b
    while r0:
        quot = r // r0
        r, r0 = r0, r - quot * r0
        s, s0 = s0, s - quot * s0
        t, t0 = t0, t - quot * t0
    return r, s, t


def crt(residues: Sequence[int], moduli: Sequence[int]) -> int:
    """Least u with u % moduli[t] == residues[t] for every t.

    Independent reconstruction used to cross-check ``recode_extend``.  The
    moduli must be pairwise coprime (else NotCoprime) and each residue must
    lie below its modulus.
    """
    if len(residues) != len(moduli):
        raise ValueError("residues and moduli must have the same length")
    for r, m in zip(residues, moduli):
        if m < 1:
            raise PreconditionViolated(f"modulus must be positive, got {m}")
        if not 0 <= r < m:
            raise PreconditionViolated(f"residue {r} is not below modulus {m}")
    u, prod = 0, 1
    for r, m in zip(residues, moduli):
        g, s, _ = _egcd(prod % m, m)
        if g != 1:
            raise NotCoprime(f"moduli share the factor {g}")
        u += prod * (((r - u) * s) % m)
        prod *= m
    return u
