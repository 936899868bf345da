"""Dense integer polynomials.

Coefficients are stored constant term first, so ``IntPoly((-1, -1, 1))`` is
t^2 - t - 1.  Most helpers also accept plain tuples; the ``_``-prefixed
functions work on tuples directly and are what the hot paths use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Sequence


class ZeroPolynomialError(ValueError):
    pass


def _strip(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(int(x) for x in c)


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        if isinstance(coeffs, IntPoly):
            coeffs = coeffs.coeffs
        object.__setattr__(self, "coeffs", _strip(tuple(coeffs)))

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        """Parse the canonical text form, e.g. ``"-1,-1,1"``."""
        text = text.strip().strip('"')
        if not text:
            return cls(())
        return cls(int(tok) for tok in text.split(","))

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def __repr__(self) -> str:
        return f"IntPoly({self.pretty()})"

    def pretty(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{a}{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(c * other for c in self.coeffs)
        return IntPoly(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __pow__(self, n: int) -> "IntPoly":
        out: tuple[int, ...] = (1,)
        for _ in range(n):
            out = _mul(out, self.coeffs)
        return IntPoly(out)

    def __call__(self, x):
        return eval_rational(self, x)


PolyLike = "IntPoly | Sequence[int]"


def _c(p) -> tuple[int, ...]:
    return p.coeffs if isinstance(p, IntPoly) else _strip(p)


# ---------------------------------------------------------------------------
# tuple-level arithmetic


def _mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    n = max(len(a), len(b))
    return _strip([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _sub(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    n = max(len(a), len(b))
    return _strip([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _scale(a: Sequence[int], k: int) -> tuple[int, ...]:
    return _strip([x * k for x in a])


def _derivative(a: Sequence[int]) -> tuple[int, ...]:
    return _strip([i * a[i] for i in range(1, len(a))])


def _content(a: Sequence[int]) -> int:
    return reduce(math.gcd, a, 0)


def _primitive(a: Sequence[int]) -> tuple[int, ...]:
    """Primitive part with positive leading coefficient."""
    if not a:
        return ()
    g = _content(a)
    if a[-1] < 0:
        g = -g
    return tuple(x // g for x in a)


def _prem(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b."""
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - db
    if e <= 0:
        return _strip(a)
    r = list(a)
    while r and len(r) - 1 >= db:
        lead = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for i, y in enumerate(b):
            r[i + shift] -= lead * y
        r.pop()
        while r and r[-1] == 0:
            r.pop()
        e -= 1
    if e > 0:
        f = lb**e
        r = [x * f for x in r]
    return tuple(r)


def _divexact(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Exact quotient a / b over Z; raises if b does not divide a in Z[t]."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    if len(r) - 1 < db:
        if any(r):
            raise ArithmeticError("inexact polynomial division")
        return ()
    q = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c, rem = divmod(r[k + db], lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[k] = c
        if c:
            for i, y in enumerate(b):
                r[k + i] -= c * y
    if any(r[:db]):
        raise ArithmeticError("inexact polynomial division")
    return _strip(q)


def _divmod_q(a: Sequence[int], b: Sequence[int]):
    """Division over Q; returns (quotient, remainder) as Fraction lists."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [Fraction(x) for x in a]
    db = len(b) - 1
    lb = b[-1]
    if len(a) - 1 < db:
        return [], _strip_f(a)
    q = [Fraction(0)] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = a[k + db] / lb
        q[k] = c
        if c:
            for i, y in enumerate(b):
                a[k + i] -= c * y
    return q, _strip_f(a[:db])


def _strip_f(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _divides(b: Sequence[int], a: Sequence[int]) -> bool:
    try:
        _divexact(a, b)
    except ArithmeticError:
        return False
    return True


@lru_cache(maxsize=65536)
def _gcd(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Primitive gcd over Q[t] (positive leading coefficient) via primitive PRS."""
    if not a:
        return _primitive(b)
    if not b:
        return _primitive(a)
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, (_primitive(r) if r else ())
    return _primitive(a)


def _reverse(a: Sequence[int]) -> tuple[int, ...]:
    a = list(_strip(a))
    while a and a[0] == 0:
        a.pop(0)
    return tuple(reversed(a))


def _compose_power(a: Sequence[int], m: int) -> tuple[int, ...]:
    """a(t^m)."""
    if not a:
        return ()
    out = [0] * ((len(a) - 1) * m + 1)
    for i, x in enumerate(a):
        out[i * m] = x
    return tuple(out)


def _negate_var(a: Sequence[int]) -> tuple[int, ...]:
    """a(-t)."""
    return tuple(x if i % 2 == 0 else -x for i, x in enumerate(a))


def _eval_int(a: Sequence[int], x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _sign_at(a: Sequence[int], num: int, den: int) -> int:
    """Sign of a(num/den) for den > 0, using integer Horner on den^deg a(num/den)."""
    acc = 0
    pw = 1
    n = len(a)
    if n == 0:
        return 0
    acc = a[-1]
    for i in range(n - 2, -1, -1):
        pw *= den
        acc = acc * num + a[i] * pw
    return (acc > 0) - (acc < 0)


# ---------------------------------------------------------------------------
# public operations


def content(p) -> int:
    c = _c(p)
    if not c:
        raise ZeroPolynomialError("zero polynomial has no content")
    return _content(c)


def primitive_part(p) -> IntPoly:
    """p / content(p); the sign of the leading coefficient is kept."""
    c = _c(p)
    if not c:
        raise ZeroPolynomialError("zero polynomial has no content")
    g = _content(c)
    return IntPoly(x // g for x in c)


def mul(p, q) -> IntPoly:
    return IntPoly(_mul(_c(p), _c(q)))


def derivative(p) -> IntPoly:
    return IntPoly(_derivative(_c(p)))


def reverse(p) -> IntPoly:
    """t^deg(p) p(1/t) with zero roots of p dropped first."""
    return IntPoly(_reverse(_c(p)))


def eval_rational(p, x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(_c(p)):
        acc = acc * x + c
    return acc


def gcd(p, q) -> IntPoly:
    return IntPoly(_gcd(_c(p), _c(q)))


def resultant(p, q) -> int:
    """Resultant of p and q by the subresultant PRS."""
    a, b = _c(p), _c(q)
    if not a or not b:
        raise ZeroPolynomialError("resultant of the zero polynomial")
    return _resultant(a, b)


@lru_cache(maxsize=8192)
def _resultant(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    da, db = len(a) - 1, len(b) - 1
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    ca, cb = _content(a), _content(b)
    if a[-1] < 0:
        ca = -ca
    if b[-1] < 0:
        cb = -cb
    a = tuple(x // ca for x in a)
    b = tuple(x // cb for x in b)
    t = ca**db * cb**da
    s = 1
    if da < db:
        a, b = b, a
        if da % 2 == 1 and db % 2 == 1:
            s = -1
    g = h = Fraction(1)
    while len(b) - 1 > 0:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        r = _prem(a, b)
        a = b
        if not r:
            return 0
        div = g * h**delta
        q = [Fraction(x) / div for x in r]
        assert all(x.denominator == 1 for x in q)
        b = tuple(int(x) for x in q)
        g = Fraction(a[-1])
        h = h ** (1 - delta) * g**delta
    da = len(a) - 1
    h = h ** (1 - da) * Fraction(b[-1]) ** da
    res = s * t * h
    assert res.denominator == 1
    return int(res)


def squarefree_decomposition(p) -> tuple[int, list[tuple[IntPoly, int]]]:
    """Yun decomposition.

    Returns ``(unit, factors)``: ``unit`` is the signed content, the factors
    are primitive, squarefree, pairwise coprime, with positive leading
    coefficient, and ``unit * prod(f**m)`` reconstructs ``p`` exactly.
    """
    c = _c(p)
    if not c:
        raise ZeroPolynomialError("zero polynomial has no squarefree decomposition")
    unit, facs = _sqf(c)
    return unit, [(IntPoly(f), m) for f, m in facs]


@lru_cache(maxsize=65536)
def _sqf(c: tuple[int, ...]) -> tuple[int, tuple[tuple[tuple[int, ...], int], ...]]:
    g = _content(c)
    unit = g if c[-1] > 0 else -g
    a = tuple(x // unit for x in c)
    if len(a) == 1:
        return unit, ()
    if len(a) == 2:
        return unit, ((a, 1),)
    if len(a) == 3 and a[1] * a[1] != 4 * a[0] * a[2]:
        return unit, ((a, 1),)
    out = []
    b = _derivative(a)
    cc = _gcd(a, b)
    if len(cc) == 1:
        return unit, ((a, 1),)
    w = _divexact(a, cc)
    y = _divexact(b, cc)
    z = _sub(y, _derivative(w))
    i = 1
    while len(w) > 1:
        gg = _gcd(w, z)
        if len(gg) > 1:
            out.append((gg, i))
        w = _divexact(w, gg)
        y = _divexact(z, gg)
        z = _sub(y, _derivative(w))
        i += 1
    return unit, tuple(out)


def _squarefree_part(c: Sequence[int]) -> tuple[int, ...]:
    c = _strip(c)
    if len(c) <= 1:
        return (1,)
    return _primitive(_divexact(_primitive(c), _gcd(c, _derivative(c))))


# ---------------------------------------------------------------------------
# factorization


def _isqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


@lru_cache(maxsize=65536)
def _factor_squarefree(f: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Irreducible factors of a primitive squarefree polynomial (positive lc)."""
    if len(f) <= 2:
        return (f,)
    if len(f) == 3:
        c, b, a = f
        r = _isqrt_exact(b * b - 4 * a * c)
        if r is None:
            return (f,)
        f1 = _primitive((b - r, 2 * a))
        f2 = _divexact(f, f1)
        return tuple(sorted((_primitive(f1), _primitive(f2)), key=_sort_key))
    if f[0] == 0:
        rest = _factor_squarefree(_primitive(f[1:]))
        return tuple(sorted(((0, 1),) + rest, key=_sort_key))
    from sympy import ZZ
    from sympy.polys.factortools import dup_zz_factor

    _, facs = dup_zz_factor([ZZ(x) for x in reversed(f)], ZZ)
    out = []
    for g, m in facs:
        assert m == 1
        out.append(_primitive([int(x) for x in reversed(g)]))
    return tuple(sorted(out, key=_sort_key))


def _sort_key(f: tuple[int, ...]):
    return (len(f), f)


def factor_over_Z(p) -> tuple[int, list[tuple[IntPoly, int]]]:
    """Factor p into a signed content and irreducible primitive factors.

    Factors have positive leading coefficients and come sorted by
    (degree, coefficients); ``unit * prod(f**m) == p``.
    """
    c = _c(p)
    if not c:
        raise ZeroPolynomialError("cannot factor the zero polynomial")
    unit, facs = _sqf(c)
    out: list[tuple[tuple[int, ...], int]] = []
    for f, m in facs:
        for g in _factor_squarefree(f):
            out.append((g, m))
    out.sort(key=lambda fm: (_sort_key(fm[0]), fm[1]))
    return unit, [(IntPoly(f), m) for f, m in out]


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _has_rational_root(f: Sequence[int]) -> bool:
    if f[0] == 0:
        return True
    for q in _divisors(f[-1]):
        for p_ in _divisors(f[0]):
            for s in (p_, -p_):
                if _sign_at(f, s, q) == 0:
                    return True
    return False


# small-prime witnesses: f mod p irreducible (with deg preserved) => f irreducible over Q

_WITNESS_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def _fp_strip(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a, m, p):
    a = [x % p for x in a]
    _fp_strip(a)
    dm = len(m) - 1
    inv = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for i, y in enumerate(m):
            a[shift + i] = (a[shift + i] - c * y) % p
        _fp_strip(a)
    return a


def _fp_mulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _fp_mod(out, m, p)


def _fp_gcd(a, b, p):
    a, b = _fp_strip([x % p for x in a]), _fp_strip([x % p for x in b])
    while b:
        a, b = b, _fp_mod(a, b, p)
    return a


def _fp_powmod(base, e, m, p):
    result = [1]
    base = _fp_mod(base, m, p)
    while e:
        if e & 1:
            result = _fp_mulmod(result, base, m, p)
        base = _fp_mulmod(base, base, m, p)
        e >>= 1
    return result


def _irreducible_mod_p(f: Sequence[int], p: int) -> bool:
    """Ben-Or test for f over F_p (f must keep its degree mod p)."""
    m = [x % p for x in f]
    n = len(m) - 1
    xp = [0, 1]
    for _ in range(n // 2):
        xp = _fp_powmod(xp, p, m, p)
        diff = list(xp) + [0] * max(0, 2 - len(xp))
        diff[1] = (diff[1] - 1) % p
        g = _fp_gcd(m, _fp_strip(diff), p)
        if len(g) > 1:
            return False
    return True


def irreducible_mod_p_witness(f: Sequence[int]) -> int | None:
    """Smallest prime from a fixed list modulo which f stays irreducible."""
    f = _c(f)
    for p in _WITNESS_PRIMES:
        if f[-1] % p == 0:
            continue
        if _irreducible_mod_p(f, p):
            return p
    return None


def is_irreducible_over_Z(p) -> bool:
    """True iff the primitive non-constant p has no factorization over Z."""
    c = _c(p)
    if len(c) < 2:
        raise ValueError("irreducibility is defined for non-constant polynomials")
    if _content(c) != 1:
        raise ValueError("irreducibility test expects a primitive polynomial")
    return _is_irreducible(c)


@lru_cache(maxsize=65536)
def _is_irreducible(c: tuple[int, ...]) -> bool:
    d = len(c) - 1
    if d == 1:
        return True
    if c[0] == 0:
        return False
    if d == 2:
        return _isqrt_exact(c[1] * c[1] - 4 * c[2] * c[0]) is None
    if d == 3 and abs(c[0]) <= 10**6 and abs(c[-1]) <= 10**6:
        return not _has_rational_root(c)
    if len(_gcd(c, _derivative(c))) > 1:
        return False
    if irreducible_mod_p_witness(c) is not None:
        return True
    f = _primitive(c)
    return len(_factor_squarefree(f)) == 1


def mignotte_bound(p, m: int) -> int:
    """Integer bound on |coefficients| of any degree-m factor of p (Mignotte)."""
    c = _c(p)
    norm2 = sum(x * x for x in c)
    root = math.isqrt(norm2)
    if root * root < norm2:
        root += 1
    return max(math.comb(m, j) for j in range(m + 1)) * root
