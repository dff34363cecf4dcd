"""Arithmetic in GF(2^m).

Field elements are ints below 2^m, read as polynomials over GF(2) modulo a
fixed irreducible modulus (bit i = coefficient of x^i). Addition is xor.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

MAX_M = 16


def _poly_divmod(a: int, b: int) -> tuple[int, int]:
    """Quotient and remainder of GF(2)[x] division."""
    db = b.bit_length() - 1
    q = 0
    while a.bit_length() - 1 >= db and a:
        shift = a.bit_length() - 1 - db
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def is_irreducible(poly: int) -> bool:
    """Trial division by every polynomial of degree 1 .. deg/2."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for cand in range(1 << d, 1 << (d + 1)):
            if _poly_divmod(poly, cand)[1] == 0:
                return False
    return True


@lru_cache(maxsize=None)
def default_modulus(m: int) -> int:
    """The smallest irreducible polynomial of degree m, e.g. x^2+x+1 for m=2.

    Candidates with zero constant term are skipped (they are divisible by x;
    only x itself is irreducible and it makes a degenerate modulus).
    """
    for cand in range((1 << m) | 1, 1 << (m + 1), 2):
        if is_irreducible(cand):
            return cand
    raise AssertionError("irreducible polynomial exists for every degree")


@dataclass(frozen=True)
class FieldSpec:
    """GF(2^m) with an explicit modulus; q = 2^m."""

    m: int
    modulus: int

    def __post_init__(self):
        if not 1 <= self.m <= MAX_M:
            raise ValueError(f"extension degree must be in 1..{MAX_M}")
        if self.modulus.bit_length() - 1 != self.m:
            raise ValueError(f"modulus degree {self.modulus.bit_length() - 1} != m={self.m}")
        if not is_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus:#x} is reducible")

    @property
    def q(self) -> int:
        return 1 << self.m

    def elements(self) -> range:
        return range(self.q)


def field_for_q(q: int, modulus: int | None = None) -> FieldSpec:
    """FieldSpec for GF(q), q a power of two."""
    m = q.bit_length() - 1
    if q != 1 << m or m < 1:
        raise ValueError(f"q must be a power of two >= 2, got {q}")
    return FieldSpec(m, default_modulus(m) if modulus is None else modulus)


def add(a: int, b: int) -> int:
    return a ^ b


def mul(F: FieldSpec, a: int, b: int) -> int:
    p = 0
    while b:
        if b & 1:
            p ^= a
        a <<= 1
        b >>= 1
    # reduce the carry-less product modulo the field polynomial
    m = F.m
    mod = F.modulus
    while p.bit_length() > m:
        p ^= mod << (p.bit_length() - 1 - m)
    return p


def power(F: FieldSpec, a: int, e: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = mul(F, r, a)
        a = mul(F, a, a)
        e >>= 1
    return r


def inv(F: FieldSpec, a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("inverse of 0 in GF(2^m)")
    return power(F, a, F.q - 2)


def trace(F: FieldSpec, a: int) -> int:
    """Tr(a) = a + a^2 + a^4 + ... + a^(2^(m-1)), landing in {0, 1}."""
    t = 0
    x = a
    for _ in range(F.m):
        t ^= x
        x = mul(F, x, x)
    assert t in (0, 1), "trace must land in the prime field"
    return t


def frobenius_orbit(F: FieldSpec, a: int) -> list[int]:
    """[a, a^2, a^4, ...] up to the first repeat; the length divides m."""
    orbit = [a]
    x = mul(F, a, a)
    while x != a:
        orbit.append(x)
        x = mul(F, x, x)
    return orbit
