"""Exact real algebraic numbers.

A value is an irreducible primitive integer polynomial with positive leading
coefficient together with an isolating interval for one of its real roots.
Products and powers are formed from power sums of the roots; the resulting
integer polynomial is factored and the factor carrying the value is picked
by refining intervals on both sides until one candidate survives.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Callable, Iterable, Sequence

from sympy import factorint, integer_nthroot

from .polyz import IntPoly, _c, _compose_power, _negate_var, _primitive, _reverse, factor_over_Z, is_irreducible_over_Z
from .realroots import Interval, bisect_once, isolate_real_roots, refine as _refine_iv, sign_at

MAX_SELECT_ROUNDS = 256


class SelectionError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# power sums and Newton identities


def power_sums(f: Sequence[int], count: int) -> list[Fraction]:
    """[s_1, ..., s_count] for the roots of f (with multiplicity)."""
    n = len(f) - 1
    lc = Fraction(f[-1])
    e = [Fraction(1)] + [Fraction((-1) ** i * f[n - i]) / lc for i in range(1, n + 1)]
    s: list[Fraction] = []
    for k in range(1, count + 1):
        acc = Fraction(0)
        for i in range(1, min(k - 1, n) + 1):
            acc += (-1) ** (i - 1) * e[i] * s[k - i - 1]
        if k <= n:
            acc += (-1) ** (k - 1) * k * e[k]
        s.append(acc)
    return s


def elementary_from_power_sums(p: Sequence[Fraction], n: int) -> list[Fraction]:
    """[e_0, ..., e_n] from power sums p_1..p_n."""
    e = [Fraction(1)]
    for k in range(1, n + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * e[k - i] * p[i - 1]
        e.append(acc / k)
    return e


def poly_from_power_sums(p: Sequence[Fraction], n: int) -> tuple[int, ...]:
    """Primitive integer polynomial (positive lc) of degree n with power sums p."""
    e = elementary_from_power_sums(p, n)
    coeffs = [(-1) ** (n - i) * e[n - i] for i in range(n + 1)]
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return _primitive([int(c * den) for c in coeffs])


# ---------------------------------------------------------------------------


def _overlaps(a: Interval, b: Interval) -> bool:
    return a[0] <= b[1] and b[0] <= a[1]


def _iv_mul(a: Interval, b: Interval) -> Interval:
    ps = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return (min(ps), max(ps))


def _iv_pow(a: Interval, n: int) -> Interval:
    lo, hi = a
    if n % 2 == 1 or lo >= 0:
        return (lo**n, hi**n)
    if hi <= 0:
        return (hi**n, lo**n)
    return (Fraction(0), max(lo**n, hi**n))


@total_ordering
class RealAlgebraic:
    """A real root of an irreducible integer polynomial, held exactly."""

    __slots__ = ("minpoly", "lo", "hi", "_index")

    def __init__(self, minpoly: IntPoly, lo: Fraction, hi: Fraction, index: int | None = None):
        self.minpoly = minpoly
        if minpoly.degree == 1:
            lo = hi = Fraction(-minpoly.coeffs[0], minpoly.coeffs[1])
            index = 0
        self.lo = Fraction(lo)
        self.hi = Fraction(hi)
        self._index = index

    # -- construction ------------------------------------------------------

    @classmethod
    def from_rational(cls, x) -> "RealAlgebraic":
        x = Fraction(x)
        return cls(IntPoly((-x.numerator, x.denominator)), x, x, 0)

    @classmethod
    def from_root(cls, minpoly, index: int) -> "RealAlgebraic":
        """The index-th real root (ascending, 0-based) of an irreducible polynomial."""
        f = IntPoly(_c(minpoly))
        if f.degree < 1 or not is_irreducible_over_Z(IntPoly(_primitive(f.coeffs))):
            raise ValueError(f"{f.pretty()} is not an irreducible polynomial")
        f = IntPoly(_primitive(f.coeffs))
        roots = _real_roots(f.coeffs)
        if not 0 <= index < len(roots):
            raise ValueError(f"{f.pretty()} has {len(roots)} real roots; index {index} is out of range")
        lo, hi = roots[index]
        return cls(f, lo, hi, index)

    @classmethod
    def from_key(cls, coeffs: Iterable[int], index: int) -> "RealAlgebraic":
        return cls.from_root(IntPoly(coeffs), index)

    # -- basic properties ----------------------------------------------------

    @property
    def interval(self) -> Interval:
        return (self.lo, self.hi)

    @property
    def degree(self) -> int:
        return self.minpoly.degree

    def is_rational(self) -> bool:
        return self.minpoly.degree == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational number")
        return self.lo

    @property
    def index(self) -> int:
        if self._index is None:
            self._index = _locate(self.minpoly.coeffs, (self.lo, self.hi))
        return self._index

    def key(self) -> tuple[tuple[int, ...], int]:
        return (self.minpoly.coeffs, self.index)

    def key_text(self) -> str:
        return f"minpoly={self.minpoly};root={self.index}"

    def sign(self) -> int:
        lo, hi = self.lo, self.hi
        f = self.minpoly.coeffs
        while lo < 0 < hi:
            lo, hi = bisect_once(f, (lo, hi))
        if lo == hi:
            return (lo > 0) - (lo < 0)
        return 1 if lo >= 0 else -1

    def refine(self, eps) -> Interval:
        """An interval of width <= eps containing the value."""
        return _refine_iv(self.minpoly.coeffs, (self.lo, self.hi), Fraction(eps))

    def refined(self, eps) -> "RealAlgebraic":
        lo, hi = self.refine(eps)
        return RealAlgebraic(self.minpoly, lo, hi, self._index)

    def approx(self, digits: int = 20) -> str:
        """Decimal string correct to roughly ``digits`` significant digits."""
        import mpmath

        lo, hi = self.refine(Fraction(1, 10 ** (digits + 8)) * max(1, abs(self.lo), abs(self.hi)))
        mid = (lo + hi) / 2
        with mpmath.workdps(digits + 10):
            v = mpmath.mpf(mid.numerator) / mid.denominator
            return mpmath.nstr(v, digits, strip_zeros=False)

    def __float__(self) -> float:
        lo, hi = self.refine(Fraction(1, 2**60) * max(1, abs(self.lo)))
        return float((lo + hi) / 2)

    # -- comparisons ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, RealAlgebraic):
            if isinstance(other, (int, Fraction)):
                return self.is_rational() and self.lo == other
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __lt__(self, other) -> bool:
        if not isinstance(other, RealAlgebraic):
            other = RealAlgebraic.from_rational(other)
        return compare(self, other) < 0

    def __repr__(self) -> str:
        return f"RealAlgebraic({self.minpoly.pretty()}, root {self.index}, ~{self.approx(12)})"

    # -- arithmetic ----------------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, RealAlgebraic):
            other = RealAlgebraic.from_rational(other)
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return pow_int(self, n)

    def __abs__(self):
        return abs_(self)


@lru_cache(maxsize=65536)
def _real_roots(f: tuple[int, ...]) -> tuple[Interval, ...]:
    return tuple(isolate_real_roots(f))


def _locate(f: tuple[int, ...], iv: Interval) -> int:
    roots = _real_roots(f)
    lo, hi = iv
    for _ in range(MAX_SELECT_ROUNDS):
        hits = [i for i, r in enumerate(roots) if _overlaps(r, (lo, hi))]
        if len(hits) == 1:
            return hits[0]
        if not hits:
            raise SelectionError("interval contains no root of its minimal polynomial")
        lo, hi = bisect_once(f, (lo, hi))
    raise SelectionError("could not locate root index")


def compare(x: RealAlgebraic, y: RealAlgebraic) -> int:
    """-1, 0 or 1 according to x <, =, > y."""
    if x.minpoly == y.minpoly:
        return (x.index > y.index) - (x.index < y.index)
    # different irreducible minimal polynomials share no root
    a, b = x.interval, y.interval
    fx, fy = x.minpoly.coeffs, y.minpoly.coeffs
    while _overlaps(a, b):
        if a[1] - a[0] >= b[1] - b[0]:
            a = bisect_once(fx, a)
        else:
            b = bisect_once(fy, b)
    return -1 if a[1] < b[0] else 1


def _select(
    poly: Sequence[int],
    target: Callable[[int], Interval],
    admissible=None,
    irreducible: bool = False,
) -> RealAlgebraic:
    """Pick the root of ``poly`` equal to the value whose enclosures are target(r).

    ``target(r)`` must return enclosures that shrink to the value as r grows.
    ``admissible`` optionally maps a candidate interval to the interval that
    should be compared against the target (default: identity), or None to
    drop the candidate.
    """
    if irreducible:
        factors = [_primitive(poly)]
    else:
        factors = [f.coeffs for f, _m in factor_over_Z(IntPoly(poly))[1]]
    cands = [[f, iv] for f in factors for iv in _real_roots(f)]
    fwd = admissible or (lambda iv: iv)
    for r in range(MAX_SELECT_ROUNDS):
        t = target(r)
        keep = []
        for c in cands:
            mapped = fwd(c[1])
            if mapped is not None and _overlaps(mapped, t):
                keep.append(c)
        if len(keep) == 1:
            f, iv = keep[0]
            return RealAlgebraic(IntPoly(f), iv[0], iv[1])
        if not keep:
            raise SelectionError("no candidate root matches the target enclosure")
        for c in keep:
            c[1] = bisect_once(c[0], c[1])
        cands = keep
    raise SelectionError(f"factor selection did not converge in {MAX_SELECT_ROUNDS} rounds")


def _shrinking(x: RealAlgebraic):
    """Enclosure generator for x: halves the interval on each call."""
    state = [x.interval]
    f = x.minpoly.coeffs

    def step():
        iv = state[0]
        state[0] = bisect_once(f, iv)
        return iv

    return step


def is_zero(x: RealAlgebraic) -> bool:
    return x.is_rational() and x.lo == 0


def mul(x: RealAlgebraic, y: RealAlgebraic) -> RealAlgebraic:
    if is_zero(x) or is_zero(y):
        return RealAlgebraic.from_rational(0)
    if x.is_rational() and y.is_rational():
        return RealAlgebraic.from_rational(x.lo * y.lo)
    if y.is_rational():
        x, y = y, x
    if x.is_rational():
        q = x.lo
        n = y.degree
        # roots of f(t/q): coefficients a_i q^(n-i)
        c = [Fraction(a) * q ** (n - i) for i, a in enumerate(y.minpoly.coeffs)]
        den = math.lcm(*(v.denominator for v in c))
        f = _primitive([int(v * den) for v in c])
        iv = _iv_mul((q, q), y.interval)
        return RealAlgebraic(IntPoly(f), iv[0], iv[1])
    m, n = x.degree, y.degree
    sx = power_sums(x.minpoly.coeffs, m * n)
    sy = power_sums(y.minpoly.coeffs, m * n)
    poly = poly_from_power_sums([a * b for a, b in zip(sx, sy)], m * n)
    ex, ey = _shrinking(x), _shrinking(y)
    return _select(poly, lambda r: _iv_mul(ex(), ey()))


def abs_(x: RealAlgebraic) -> RealAlgebraic:
    if x.sign() >= 0:
        return x
    return negate(x)


def negate(x: RealAlgebraic) -> RealAlgebraic:
    f = _primitive(_negate_var(x.minpoly.coeffs))
    idx = None if x._index is None else len(_real_roots(f)) - 1 - x._index
    return RealAlgebraic(IntPoly(f), -x.hi, -x.lo, idx)


def inverse(x: RealAlgebraic) -> RealAlgebraic:
    if is_zero(x):
        raise ZeroDivisionError("zero has no inverse")
    if x.is_rational():
        return RealAlgebraic.from_rational(1 / x.lo)
    f = _primitive(_reverse(x.minpoly.coeffs))
    ex = _shrinking(x)

    def target(r):
        while True:
            lo, hi = ex()
            if lo > 0 or hi < 0:
                return (1 / hi, 1 / lo)

    return _select(f, target)


def pow_int(x: RealAlgebraic, n: int) -> RealAlgebraic:
    if n < 0:
        return pow_int(inverse(x), -n)
    if n == 0:
        return RealAlgebraic.from_rational(1)
    if n == 1:
        return x
    if x.is_rational():
        return RealAlgebraic.from_rational(x.lo**n)
    d = x.degree
    s = power_sums(x.minpoly.coeffs, d * n)
    poly = poly_from_power_sums([s[k * n - 1] for k in range(1, d + 1)], d)
    ex = _shrinking(x)
    return _select(poly, lambda r: _iv_pow(ex(), n))


def _rational_power_root(q: Fraction, ell: int) -> Fraction | None:
    """q^(1/ell) if it is rational, else None."""
    if q < 0:
        if ell % 2 == 0:
            return None
        r = _rational_power_root(-q, ell)
        return None if r is None else -r
    a, ea = integer_nthroot(q.numerator, ell)
    b, eb = integer_nthroot(q.denominator, ell)
    return Fraction(a, b) if ea and eb else None


def _prime_root(x: RealAlgebraic, ell: int) -> RealAlgebraic:
    f = x.minpoly.coeffs
    m = len(f) - 1
    if m == 1:
        r = _rational_power_root(x.lo, ell)
        if r is not None:
            return RealAlgebraic.from_rational(r)
    g = _compose_power(f, ell)
    # if N(x) is not an ell-th power in Q then x is not one in Q(x), and
    # f(t^ell) is irreducible (Capelli); otherwise factor and select
    norm = Fraction((-1) ** m * f[0], f[-1])
    irreducible = _rational_power_root(norm, ell) is None
    ex = _shrinking(x)

    def positive_image(iv):
        if iv[1] <= 0:
            return None
        return _iv_pow((max(iv[0], Fraction(0)), iv[1]), ell)

    return _select(g, lambda r: ex(), positive_image, irreducible)


def nth_root_positive(x: RealAlgebraic, n: int) -> RealAlgebraic:
    """The nonnegative real y with y^n = x."""
    if n < 1:
        raise ValueError("root order must be at least 1")
    s = x.sign()
    if s < 0:
        raise ValueError("nth_root_positive needs a nonnegative input")
    if s == 0 or n == 1:
        return x
    y = x
    for ell, e in sorted(factorint(n).items()):
        for _ in range(e):
            y = _prime_root(y, ell)
    return y


def _perfect_power(m: int) -> tuple[int, int]:
    """(c, g) with m = c^g and c not a perfect power (m >= 2)."""
    for g in range(m.bit_length(), 1, -1):
        c, exact = integer_nthroot(m, g)
        if exact:
            return c, g
    return m, 1


def is_natural_power(x: RealAlgebraic) -> tuple[int, Fraction] | None:
    """(a, b) with x = a^b, a natural and not a perfect power, or None."""
    if x.sign() <= 0:
        raise ValueError("is_natural_power needs a positive input")
    f = x.minpoly.coeffs
    n = len(f) - 1
    if f[-1] != 1 or any(f[1:-1]) or f[0] >= 0:
        return None
    m = -f[0]
    if m == 1:
        return (1, Fraction(1)) if n == 1 else None
    c, g = _perfect_power(m)
    return c, Fraction(g, n)


def surd(a: int, p: int, q: int) -> RealAlgebraic:
    """a^(p/q) for natural a and positive p, q."""
    if a < 1 or p < 1 or q < 1:
        raise ValueError("surd needs a >= 1, p >= 1, q >= 1")
    return nth_root_positive(RealAlgebraic.from_rational(a**p), q)


from_rational = RealAlgebraic.from_rational


def refine(x: RealAlgebraic, eps) -> Interval:
    return x.refine(eps)


def degree(x: RealAlgebraic) -> int:
    return x.degree
