"""Exact Mahler measure and Weil height.

For p of degree d with leading coefficient a and r roots on or outside the
unit circle, every product a * z_S over an r-subset S of the roots is an
algebraic integer, so

    R(t) = prod_S (t - a z_S)

lies in Z[t].  M(p) = |a z_S0| where S0 is the set of roots of modulus >= 1;
it is the unique root of R of maximal modulus and it is real.  R is built
exactly from power sums, so no precision management is involved.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Sequence

from .algnum import (
    RealAlgebraic,
    _real_roots,
    elementary_from_power_sums,
    mul,
    nth_root_positive,
    power_sums,
)
from .polyz import IntPoly, ZeroPolynomialError, _c, _content, _primitive, factor_over_Z, is_irreducible_over_Z
from .realroots import bisect_once, count_abs_greater
from .rootloc import count_unit_disk


def _reduce(c: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """(content, q) with q primitive, positive lc, no zero roots, no t^m structure."""
    g = _content(c)
    q = _primitive(c)
    z = 0
    while q[z] == 0:
        z += 1
    q = q[z:]
    step = 0
    for i, x in enumerate(q):
        if x:
            step = gcd(step, i)
    if step > 1:
        q = q[::step]
    return g, q


@lru_cache(maxsize=65536)
def outside_product_poly(q: tuple[int, ...], r: int) -> tuple[int, ...]:
    """R(t) = prod over r-subsets S of roots of (t - a * prod_S z), monic in Z[t]."""
    d = len(q) - 1
    a = q[-1]
    n = comb(d, r)
    s = power_sums(q, n * r)
    # rho_m = a^m e_r(z^m), where z^m has power sums s_m, s_2m, ...
    rho = []
    for m in range(1, n + 1):
        e = elementary_from_power_sums([s[m * j - 1] for j in range(1, r + 1)], r)
        rho.append(Fraction(a) ** m * e[r])
    e = elementary_from_power_sums(rho, n)
    coeffs = [(-1) ** (n - i) * e[n - i] for i in range(n + 1)]
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("subset-product polynomial is not integral")
    return tuple(int(c) for c in coeffs)


def _outside_count(q: tuple[int, ...]) -> int:
    rc = count_unit_disk(q)
    return rc.on_circle + rc.outside


def mahler_at_most(p, bound) -> bool:
    """Exact test M(p) <= bound, without locating M."""
    c = _c(p)
    if not c:
        raise ZeroPolynomialError("zero polynomial has no Mahler measure")
    bound = Fraction(bound)
    g, q = _reduce(c)
    if g > bound:
        return False
    return _primitive_at_most(q, bound / g)


def _primitive_at_most(q: tuple[int, ...], bound: Fraction) -> bool:
    d = len(q) - 1
    if d == 0:
        return 1 <= bound
    r = _outside_count(q)
    if r == 0:
        return q[-1] <= bound
    if r == d:
        return abs(q[0]) <= bound
    R = outside_product_poly(q, r)
    return count_abs_greater(R, bound) == 0


def mahler_exact(p) -> RealAlgebraic:
    """M(p) as an exact real algebraic number."""
    c = _c(p)
    if not c:
        raise ZeroPolynomialError("zero polynomial has no Mahler measure")
    g, q = _reduce(c)
    m = _primitive_mahler(q)
    return m if g == 1 else mul(RealAlgebraic.from_rational(g), m)


@lru_cache(maxsize=65536)
def _primitive_mahler(q: tuple[int, ...]) -> RealAlgebraic:
    d = len(q) - 1
    if d == 0:
        return RealAlgebraic.from_rational(1)
    r = _outside_count(q)
    if r == 0:
        return RealAlgebraic.from_rational(q[-1])
    if r == d:
        return RealAlgebraic.from_rational(abs(q[0]))
    return _max_modulus_root(outside_product_poly(q, r))


def _max_modulus_root(R: Sequence[int]) -> RealAlgebraic:
    """|the real root of maximal modulus| of R, as an exact value."""
    _, facs = factor_over_Z(IntPoly(R))
    cands = []
    for f, _m in facs:
        for iv in _real_roots(f.coeffs):
            cands.append([f.coeffs, iv])
    if not cands:
        raise ArithmeticError("subset-product polynomial has no real root")
    for _ in range(512):
        # lower and upper bounds on |root| for each candidate
        lows = [_abs_lo(iv) for _, iv in cands]
        best_low = max(lows)
        keep = [c for c in cands if max(abs(c[1][0]), abs(c[1][1])) >= best_low]
        if len(keep) == 1:
            f, iv = keep[0]
            x = RealAlgebraic(IntPoly(f), iv[0], iv[1])
            return x if x.sign() > 0 else _neg(x)
        for c in keep:
            c[1] = bisect_once(c[0], c[1])
        cands = keep
    raise ArithmeticError("could not separate the maximal-modulus root")


def _abs_lo(iv) -> Fraction:
    lo, hi = iv
    if lo <= 0 <= hi:
        return Fraction(0)
    return min(abs(lo), abs(hi))


def _neg(x: RealAlgebraic) -> RealAlgebraic:
    from .algnum import negate

    return negate(x)


def height_exact(p) -> RealAlgebraic:
    """H(alpha) for any root alpha of the irreducible polynomial p."""
    c = _c(p)
    if len(c) < 2:
        raise ValueError("height_exact needs a non-constant polynomial")
    f = IntPoly(_primitive(c))
    if not is_irreducible_over_Z(f):
        raise ValueError(f"{f.pretty()} is reducible")
    return _height(f.coeffs)


@lru_cache(maxsize=65536)
def _height(f: tuple[int, ...]) -> RealAlgebraic:
    return nth_root_positive(_primitive_mahler_any(f), len(f) - 1)


def _primitive_mahler_any(f: tuple[int, ...]) -> RealAlgebraic:
    _, q = _reduce(f)
    return _primitive_mahler(q)


def deg_of_height_power(p) -> int:
    """[Q(H^d) : Q] = degree of the minimal polynomial of M(p)."""
    c = _c(p)
    if len(c) < 2:
        raise ValueError("deg_of_height_power needs a non-constant polynomial")
    f = IntPoly(_primitive(c))
    if not is_irreducible_over_Z(f):
        raise ValueError(f"{f.pretty()} is reducible")
    return mahler_exact(f).degree

