"""Sturm sequences and exact real-root isolation for integer polynomials.

Intervals are pairs of ``Fraction`` with dyadic endpoints.  An isolating
interval ``(lo, hi)`` for a squarefree ``f`` is either a point (``lo == hi``,
an exact rational root) or an open interval with ``f(lo) * f(hi) < 0`` that
contains exactly one root; the latter can be refined by sign alone.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .polyz import _c, _content, _divexact, _prem, _sign_at, _squarefree_part, _strip

Interval = tuple[Fraction, Fraction]


def _signed_rem(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """-rem(a, b) up to a positive factor, reduced by its content."""
    e = len(a) - len(b) + 1
    r = _prem(a, b)
    if not r:
        return ()
    if b[-1] < 0 and e > 0 and e % 2 == 1:
        r = tuple(-x for x in r)
    g = _content(r)
    return tuple(-x // g for x in r)


def remainder_sequence(f0: Sequence[int], f1: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Signed remainder sequence f0, f1, -rem(f0, f1), ... (positive scalings)."""
    seq = [tuple(f0), tuple(f1)]
    while seq[-1]:
        r = _signed_rem(seq[-2], seq[-1])
        if not r:
            break
        seq.append(r)
    return tuple(s for s in seq if s)


@lru_cache(maxsize=65536)
def sturm_sequence(f: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    from .polyz import _derivative

    return remainder_sequence(f, _derivative(f))


def _variations(signs) -> int:
    v = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            v += 1
        last = s
    return v


def variations_at(seq, x: Fraction) -> int:
    x = Fraction(x)
    return _variations(_sign_at(s, x.numerator, x.denominator) for s in seq)


def variations_at_inf(seq, positive: bool = True) -> int:
    signs = []
    for s in seq:
        lc = 1 if s[-1] > 0 else -1
        if not positive and (len(s) - 1) % 2 == 1:
            lc = -lc
        signs.append(lc)
    return _variations(signs)


def cauchy_index(f0: Sequence[int], f1: Sequence[int]) -> int:
    """Cauchy index of f1/f0 over the whole real line."""
    seq = remainder_sequence(_strip(f0), _strip(f1))
    return variations_at_inf(seq, False) - variations_at_inf(seq, True)


def sign_at(f: Sequence[int], x: Fraction) -> int:
    x = Fraction(x)
    return _sign_at(f, x.numerator, x.denominator)


def count_roots(f, lo=None, hi=None) -> int:
    """Number of distinct real roots of f in (lo, hi]; ``None`` means infinity."""
    c = _squarefree_part(_c(f))
    if len(c) <= 1:
        return 0
    seq = sturm_sequence(c)
    vlo = variations_at_inf(seq, False) if lo is None else variations_at(seq, lo)
    vhi = variations_at_inf(seq, True) if hi is None else variations_at(seq, hi)
    return vlo - vhi


def count_abs_greater(f, x: Fraction) -> int:
    """Number of distinct real roots r of f with |r| > x (x >= 0)."""
    c = _squarefree_part(_c(f))
    if len(c) <= 1:
        return 0
    seq = sturm_sequence(c)
    x = Fraction(x)
    right = variations_at(seq, x) - variations_at_inf(seq, True)
    left = variations_at_inf(seq, False) - variations_at(seq, -x)
    if sign_at(c, -x) == 0:
        left -= 1
    return right + left


def root_bound(f: Sequence[int]) -> int:
    """Power of two strictly larger than the modulus of every root (Cauchy)."""
    lc = abs(f[-1])
    m = max((abs(x) for x in f[:-1]), default=0)
    bound = 1 + -(-m // lc)
    b = 1
    while b <= bound:
        b *= 2
    return b


def isolate_real_roots(f) -> list[Interval]:
    """Isolating intervals of the distinct real roots of f, ascending."""
    c = _squarefree_part(_c(f))
    if len(c) <= 1:
        return []
    points: list[Fraction] = []
    while True:
        found = _isolate_sqf(c)
        if isinstance(found, Fraction):
            # exact rational root hit while bisecting: record and divide out
            points.append(found)
            c = _divexact(c, (-found.numerator, found.denominator))
            if len(c) <= 1:
                break
            continue
        break
    out = [(p, p) for p in points]
    if len(c) > 1:
        for iv in found:
            # shrink until no divided-out root lies in the closed interval
            while iv[0] < iv[1] and any(iv[0] <= p <= iv[1] for p in points):
                iv = bisect_once(c, iv)
            out.append(iv)
    out.sort(key=lambda iv: iv[0])
    return out


def _isolate_sqf(c: tuple[int, ...]):
    seq = sturm_sequence(c)
    b = Fraction(root_bound(c))
    out: list[Interval] = []
    stack = [(-b, b, variations_at(seq, -b), variations_at(seq, b))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        n = vlo - vhi
        if n == 0:
            continue
        if n == 1 and sign_at(c, lo) * sign_at(c, hi) < 0:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        if sign_at(c, mid) == 0:
            return mid
        vmid = variations_at(seq, mid)
        stack.append((mid, hi, vmid, vhi))
        stack.append((lo, mid, vlo, vmid))
    return out


def refine(f: Sequence[int], iv: Interval, eps: Fraction) -> Interval:
    """Bisect the isolating interval iv of squarefree f to width <= eps."""
    lo, hi = iv
    if lo == hi:
        return iv
    slo = sign_at(f, lo)
    while hi - lo > eps:
        mid = (lo + hi) / 2
        s = sign_at(f, mid)
        if s == 0:
            return (mid, mid)
        if s == slo:
            lo = mid
        else:
            hi = mid
    return (lo, hi)


def bisect_once(f: Sequence[int], iv: Interval) -> Interval:
    lo, hi = iv
    if lo == hi:
        return iv
    mid = (lo + hi) / 2
    s = sign_at(f, mid)
    if s == 0:
        return (mid, mid)
    return (mid, hi) if s == sign_at(f, lo) else (lo, mid)
