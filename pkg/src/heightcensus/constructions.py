"""Explicit polynomial families used as positive controls."""

from __future__ import annotations

from math import isqrt

from sympy import primerange

from .algnum import RealAlgebraic, surd as _surd
from .polyz import IntPoly


def eisenstein_family(N: int, d: int) -> IntPoly:
    """N t^d - p, irreducible with every root strictly inside the unit disk.

    p is the smallest prime below N that does not divide N, and p = 1 when
    N = 2 (irreducibility then follows from Eisenstein at 2 applied to the
    reversed polynomial t^d - 2).
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    if d < 1:
        raise ValueError("d must be at least 1")
    if N == 2:
        p = 1
    else:
        p = next(q for q in primerange(2, N) if N % q)
    return IntPoly([-p] + [0] * (d - 1) + [N])


def pell_power(r: int) -> tuple[int, int]:
    """(b1, b2) with (3 + 2 sqrt 2)^r = b1 + b2 sqrt 2."""
    b1, b2 = 1, 0
    for _ in range(r):
        b1, b2 = 3 * b1 + 4 * b2, 2 * b1 + 3 * b2
    return b1, b2


def _beta_large_enough(b1: int, b2: int) -> bool:
    """b1 + b2 sqrt 2 >= 4 sqrt 2 + 8, decided exactly as s >= t sqrt 2."""
    s, t = b1 - 8, 4 - b2
    if t <= 0:
        return s >= 0 or s * s <= 2 * t * t
    return s >= 0 and s * s >= 2 * t * t


def quartic_c2_max(b1: int, b2: int) -> int:
    """floor(beta / (2 sqrt 2) - 2 / sqrt 2) = floor(((b1 - 4) sqrt 2 + 2 b2) / 4)."""
    return (isqrt(2 * (b1 - 4) ** 2) + 2 * b2) // 4


def quartic_member(b1: int, b2: int, c2: int) -> IntPoly:
    """(t^2 - g t + beta)(t^2 - g' t + beta') over Z, g = c1 + c2 sqrt 2."""
    c1 = isqrt(2 * c2 * c2) + 1
    return IntPoly(
        (
            b1 * b1 - 2 * b2 * b2,
            -2 * (c1 * b1 - 2 * c2 * b2),
            2 * b1 + c1 * c1 - 2 * c2 * c2,
            -2 * c1,
            1,
        )
    )


def quartic_family(r: int) -> tuple[tuple[int, int], list[IntPoly]]:
    """The quartics built from beta = (3 + 2 sqrt 2)^r, one per admissible c2."""
    if r < 1:
        raise ValueError("r must be at least 1")
    b1, b2 = pell_power(r)
    if not _beta_large_enough(b1, b2):
        raise ValueError(f"r={r} is too small: need |beta| >= 4 sqrt 2 + 8")
    polys = [quartic_member(b1, b2, c2) for c2 in range(1, quartic_c2_max(b1, b2) + 1)]
    return (b1, b2), polys


def surd(a: int, p: int, q: int) -> RealAlgebraic:
    """The positive real a^(p/q)."""
    return _surd(a, p, q)

