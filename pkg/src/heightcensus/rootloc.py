"""Exact count of roots inside, on and outside the unit circle.

Route: strip zero roots, split into squarefree parts, and for each part
separate the factor g = gcd(f, reverse(f)) that carries every unit-circle
root and every inverse pair z, 1/z.  Circle roots of g are counted through
x = z + 1/z and a Sturm count on (-2, 2); the rest of g splits evenly.  The
circle-free cofactor goes through the Moebius map z = (w - 1)/(w + 1) and a
Routh-Hurwitz count done as a Cauchy index.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import NamedTuple

from .polyz import (
    IntPoly,
    ZeroPolynomialError,
    _c,
    _divexact,
    _eval_int,
    _gcd,
    _mul,
    _reverse,
    _sqf,
)
from .realroots import cauchy_index, count_roots


class InvariantError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class RootCount(NamedTuple):
    inside: int
    on_circle: int
    outside: int

    def __add__(self, other):  # componentwise, not tuple concatenation
        return RootCount(*(a + b for a, b in zip(self, other)))

    def scaled(self, m: int) -> "RootCount":
        return RootCount(self.inside * m, self.on_circle * m, self.outside * m)


def count_unit_disk(p) -> RootCount:
    c = _c(p)
    if not c:
        raise ZeroPolynomialError("zero polynomial has no roots to count")
    return _count(c)


@lru_cache(maxsize=200_000)
def _count(c: tuple[int, ...]) -> RootCount:
    zeros = 0
    while c[zeros] == 0:
        zeros += 1
    c = c[zeros:]
    total = RootCount(zeros, 0, 0)
    if len(c) == 1:
        return total
    _, facs = _sqf(c)
    for f, m in facs:
        total = total + _count_squarefree(f).scaled(m)
    return total


def _strip_unit_roots(g: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    n = 0
    for lin in ((-1, 1), (1, 1)):
        if len(g) > 1 and _eval_int(g, -lin[0]) == 0:
            g = _divexact(g, lin)
            n += 1
    return g, n


def _palindromic_to_x(g: tuple[int, ...]) -> tuple[int, ...]:
    """h with g(z) = z^m h(z + 1/z), for palindromic g of degree 2m."""
    m = (len(g) - 1) // 2
    h = [g[m]]
    t_prev, t_cur = (2,), (0, 1)
    for j in range(1, m + 1):
        c = g[m + j]
        for i, x in enumerate(t_cur):
            if i >= len(h):
                h.append(0)
            h[i] += c * x
        t_prev, t_cur = t_cur, _xmul_sub(t_cur, t_prev)
    while h and h[-1] == 0:
        h.pop()
    return tuple(h)


def _xmul_sub(a, b):
    out = [0] + list(a)
    for i, x in enumerate(b):
        out[i] -= x
    return tuple(out)


def _self_inversive_count(g: tuple[int, ...]) -> RootCount:
    """Count for a squarefree g whose roots are closed under z -> 1/z."""
    g, on = _strip_unit_roots(g)
    if len(g) == 1:
        return RootCount(0, on, 0)
    if g != _reverse(g):
        if tuple(-x for x in g) == _reverse(g):
            raise InvariantError("anti-palindromic factor without a root at 1")
        raise InvariantError("gcd(f, reverse f) is not self-reciprocal")
    h = _palindromic_to_x(g)
    circle_pairs = count_roots(h, -2, 2)
    n = len(g) - 1
    on += 2 * circle_pairs
    off = n - 2 * circle_pairs
    return RootCount(off // 2, on, off // 2)


def _moebius(f: tuple[int, ...]) -> tuple[int, ...]:
    """(w + 1)^n f((w - 1)/(w + 1)) for n = deg f."""
    n = len(f) - 1
    out = [0] * (n + 1)
    # (w-1)^i (w+1)^(n-i), expanded coefficient by coefficient
    for i, a in enumerate(f):
        if not a:
            continue
        wm = [comb(i, j) * (-1) ** (i - j) for j in range(i + 1)]
        wp = [comb(n - i, j) for j in range(n - i + 1)]
        for k, x in enumerate(_mul(wm, wp)):
            out[k] += a * x
    return tuple(out)


def _right_half_plane_count(q: tuple[int, ...]) -> int:
    """Roots of q with positive real part; q has none on the imaginary axis."""
    if q[-1] < 0:
        q = tuple(-x for x in q)
    n = len(q) - 1
    if n == 0:
        return 0
    # q(i w) = i^n (h(w) - i g(w)) up to sign bookkeeping below
    h = [0] * (n + 1)
    g = [0] * (n + 1)
    for j, c in enumerate(q):
        if (n - j) % 2 == 0:
            h[j] = c * (-1) ** ((n - j) // 2)
        else:
            g[j] = c * (-1) ** ((n - 1 - j) // 2)
    h = tuple(h)
    g = tuple(_strip_tuple(g))
    if not g:
        # q is even or odd in w; roots come in pairs w, -w
        raise InvariantError("imaginary-axis or symmetric roots after circle removal")
    if len(_gcd(h, g)) > 1:
        raise InvariantError("imaginary-axis or symmetric roots after circle removal")
    idx = cauchy_index(h, g)
    pr, rem = divmod(n - idx, 2)
    if rem or not 0 <= pr <= n:
        raise InvariantError("Cauchy index parity mismatch")
    return pr


def _strip_tuple(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


@lru_cache(maxsize=200_000)
def _count_squarefree(f: tuple[int, ...]) -> RootCount:
    n = len(f) - 1
    if n == 0:
        return RootCount(0, 0, 0)
    if n == 1:
        b, a = f
        if abs(b) < abs(a):
            return RootCount(1, 0, 0)
        if abs(b) == abs(a):
            return RootCount(0, 1, 0)
        return RootCount(0, 0, 1)
    g = _gcd(f, _reverse(f))
    total = RootCount(0, 0, 0)
    if len(g) > 1:
        total = _self_inversive_count(g)
        f = _divexact(f, g)
    if len(f) > 1:
        inside = _right_half_plane_count(_moebius(f))
        total = total + RootCount(inside, 0, len(f) - 1 - inside)
    return total


def circle_root_factor(p) -> tuple[IntPoly, IntPoly]:
    """Split p into (factor holding every unit-circle root, remainder).

    The first part is the product, with multiplicity, of the primitive
    irreducible factors of p that have at least one root on the circle.
    Such a factor can also carry roots off the circle (a Salem polynomial
    does), so "every root on the circle" is not promised; the remainder is
    guaranteed to have no circle root.  The remainder carries the signed
    content, so ``part * remainder == p``.
    """
    from .polyz import factor_over_Z

    c = _c(p)
    if not c:
        raise ZeroPolynomialError("zero polynomial has no roots to split")
    unit, facs = factor_over_Z(IntPoly(c))
    on: tuple[int, ...] = (1,)
    rest: tuple[int, ...] = (unit,)
    for f, m in facs:
        has_circle = _count_squarefree(f.coeffs).on_circle > 0
        for _ in range(m):
            if has_circle:
                on = _mul(on, f.coeffs)
            else:
                rest = _mul(rest, f.coeffs)
    return IntPoly(on), IntPoly(rest)


__all__ = ["RootCount", "count_unit_disk", "circle_root_factor", "InvariantError"]
