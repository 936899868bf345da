from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from heightcensus.algnum import (
    RealAlgebraic,
    abs_,
    compare,
    is_natural_power,
    mul,
    nth_root_positive,
    pow_int,
    surd,
)
from heightcensus.polyz import IntPoly

PHI = RealAlgebraic.from_root(IntPoly((-1, -1, 1)), 1)
SQRT2 = RealAlgebraic.from_root(IntPoly((-2, 0, 1)), 1)


def test_from_rational():
    z = RealAlgebraic.from_rational(0)
    assert z.minpoly == IntPoly((0, 1)) and z.interval == (0, 0)
    x = RealAlgebraic.from_rational(Fraction(3, 2))
    assert x.minpoly == IntPoly((-3, 2)) and x.interval == (Fraction(3, 2), Fraction(3, 2))
    y = RealAlgebraic.from_rational(-5)
    assert y.minpoly == IntPoly((5, 1))


def test_compare_examples():
    assert compare(SQRT2, RealAlgebraic.from_rational(Fraction(3, 2))) < 0
    assert compare(SQRT2, SQRT2.refined(Fraction(1, 10**6))) == 0
    half = nth_root_positive(PHI, 2)
    assert compare(PHI, mul(half, half)) == 0


def test_refine_examples():
    lo, hi = SQRT2.refine(Fraction(1, 100))
    assert hi - lo <= Fraction(1, 100) and lo <= Fraction(141421, 100000) <= hi
    assert RealAlgebraic.from_rational(2).refine(Fraction(1, 2)) == (2, 2)
    lo, hi = PHI.refine(Fraction(1, 10**6))
    assert lo <= Fraction(16180339, 10**7) <= hi


def test_arithmetic_examples():
    assert mul(SQRT2, SQRT2) == RealAlgebraic.from_rational(2)
    conj = RealAlgebraic.from_root(IntPoly((-1, -1, 1)), 0)
    inv_phi = abs_(conj)
    assert inv_phi.minpoly == IntPoly((-1, 1, 1))
    assert 0 < float(inv_phi) < 1
    sq = pow_int(PHI, 2)
    assert sq.minpoly == IntPoly((1, -3, 1)) and 2.6 < float(sq) < 2.7


def test_nth_root_examples():
    assert nth_root_positive(RealAlgebraic.from_rational(2), 2) == SQRT2
    r = nth_root_positive(PHI, 2)
    assert r.minpoly == IntPoly((-1, 0, -1, 0, 1)) and 1.2 < float(r) < 1.3
    assert nth_root_positive(RealAlgebraic.from_rational(8), 5).minpoly == IntPoly((-8, 0, 0, 0, 0, 1))


def test_is_natural_power_examples():
    assert is_natural_power(SQRT2) == (2, Fraction(1, 2))
    assert is_natural_power(PHI) is None
    assert is_natural_power(surd(2, 3, 5)) == (2, Fraction(3, 5))
    assert surd(4, 1, 2) == RealAlgebraic.from_rational(2)
    with pytest.raises(ValueError):
        is_natural_power(RealAlgebraic.from_rational(-2))


def _brute_natural_power(x: RealAlgebraic):
    """x = a^b with natural a iff some pow_int(x, e), e <= deg x, is a natural number."""
    for e in range(1, x.degree + 1):
        y = pow_int(x, e)
        if y.is_rational() and y.as_fraction().denominator == 1 and y.as_fraction() >= 1:
            return True
    return False


@given(st.integers(1, 40), st.integers(1, 6), st.integers(1, 4))
def test_natural_power_detection_matches_brute_force(a, p, q):
    x = surd(a, p, q)
    assert is_natural_power(x) is not None
    assert _brute_natural_power(x)
    got = is_natural_power(x)
    with mpmath.workdps(40):
        assert abs(mpmath.mpf(got[0]) ** (mpmath.mpf(got[1].numerator) / got[1].denominator) - mpmath.mpf(x.approx(35))) < 1e-25


@given(st.lists(st.integers(-6, 6), min_size=3, max_size=4).filter(lambda c: c[-1] > 0))
def test_natural_power_detection_on_random_roots(c):
    from heightcensus.polyz import is_irreducible_over_Z
    from heightcensus.realroots import isolate_real_roots

    from heightcensus.polyz import content

    p = IntPoly(c)
    if p.degree < 2 or content(p) != 1 or not is_irreducible_over_Z(p):
        return
    for i in range(len(isolate_real_roots(p))):
        x = RealAlgebraic.from_root(p, i)
        if x.sign() > 0:
            assert (is_natural_power(x) is not None) == _brute_natural_power(x)


@given(st.integers(-30, 30), st.integers(1, 9), st.integers(-30, 30), st.integers(1, 9))
def test_rational_ordering_matches_fractions(a, b, c, d):
    x, y = Fraction(a, b), Fraction(c, d)
    got = compare(RealAlgebraic.from_rational(x), RealAlgebraic.from_rational(y))
    assert got == (x > y) - (x < y)


@given(st.integers(2, 30), st.integers(2, 30), st.integers(1, 4))
def test_surd_products(a, b, q):
    assert mul(surd(a, 1, q), surd(b, 1, q)) == surd(a * b, 1, q)


def test_key_roundtrip():
    r = nth_root_positive(PHI, 2)
    assert RealAlgebraic.from_key(*r.key()) == r
    assert r.key_text() == "minpoly=-1,0,-1,0,1;root=1"
