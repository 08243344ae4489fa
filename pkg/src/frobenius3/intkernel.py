"""Exact integer primitives: gcd, Bezout pairs, inverses, two-generator membership.

Python ints are unbounded, so nothing here can overflow.
"""

from math import gcd as _gcd
from typing import NamedTuple


class BezoutResult(NamedTuple):
    g: int
    m1: int
    m2: int


def gcd(a: int, b: int) -> int:
    """Nonnegative greatest common divisor; ``gcd(0, 0) == 0``."""
    return _gcd(a, b)


def _euclid(a, b):
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def extended_gcd(a: int, b: int) -> BezoutResult:
    """Return ``(g, m1, m2)`` with ``m1*a + m2*b == g == gcd(a, b)``.

    The pair is the minimal-magnitude one: ``m1`` is taken from the
    half-open window ``(-B/2, B/2]`` with ``B = |b|/g``, which forces
    ``|m2| <= |a|/(2g)`` as well. When ``|a|`` divides ``|b|`` the pair is
    ``(sign(a), 0)``; when ``|b|`` divides ``|a|`` it is ``(0, sign(b))``.
    """
    if a == 0 and b == 0:
        raise ValueError("extended_gcd(0, 0) is undefined")
    sa = -1 if a < 0 else 1
    sb = -1 if b < 0 else 1
    aa, bb = abs(a), abs(b)
    g, s, _ = _euclid(aa, bb)
    if aa == g:
        return BezoutResult(g, sa, 0)
    if bb == g:
        return BezoutResult(g, 0, sb)
    period = bb // g
    s %= period
    if 2 * s > period:
        s -= period
    t = (g - s * aa) // bb
    return BezoutResult(g, sa * s, sb * t)


def mod_inverse(x: int, m: int) -> int:
    """Return ``y`` in ``[0, m)`` with ``x*y % m == 1 % m``."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    g, m1, _ = extended_gcd(x, m)
    if g != 1:
        raise ValueError(f"{x} is not invertible modulo {m} (gcd={g})")
    return m1 % m


def is_representable_pair(a1: int, a2: int, z: int) -> bool:
    """True iff ``z = x1*a1 + x2*a2`` for some naturals ``x1, x2``.

    The smallest admissible ``x2`` is ``z * a2^-1 mod a1``; ``z`` is
    representable iff that many copies of ``a2`` still fit below ``z``.
    """
    if a1 < 1 or a2 < 1:
        raise ValueError("generators must be positive")
    if z < 0:
        raise ValueError("z must be nonnegative")
    if _gcd(a1, a2) != 1:
        raise ValueError(f"generators {a1}, {a2} are not coprime")
    y0 = z * mod_inverse(a2, a1) % a1
    return y0 * a2 <= z
