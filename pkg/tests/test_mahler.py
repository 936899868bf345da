import random

import mpmath
from hypothesis import given
from hypothesis import strategies as st

from heightcensus.algnum import RealAlgebraic, mul, surd
from heightcensus.mahler import deg_of_height_power, height_exact, mahler_at_most, mahler_exact
from heightcensus.polyz import IntPoly, mul as pmul

coeff_lists = st.lists(st.integers(-9, 9), min_size=1, max_size=5).filter(lambda c: c[-1] != 0)


def numeric_mahler(c):
    with mpmath.workdps(60):
        if len(c) == 1:
            return abs(mpmath.mpf(c[0]))
        roots = mpmath.polyroots(list(reversed(c)), maxsteps=400, extraprec=300)
        m = abs(mpmath.mpf(c[-1]))
        for r in roots:
            m *= max(1, abs(r))
        return m


def test_examples():
    phi = mahler_exact(IntPoly((-1, -1, 1)))
    assert phi.minpoly == IntPoly((-1, -1, 1)) and 1.6 < float(phi) < 1.7
    assert mahler_exact(IntPoly((0, 0, 0, 6))) == RealAlgebraic.from_rational(6)
    two_phi = mahler_exact(pmul(IntPoly((-1, -1, 1)), IntPoly((-2, 1))))
    assert two_phi.minpoly == IntPoly((-4, -2, 1))


def test_height_examples():
    h = height_exact(IntPoly((-1, -1, 1)))
    assert h.minpoly == IntPoly((-1, 0, -1, 0, 1))
    assert height_exact(IntPoly((-8, 0, 0, 0, 0, 1))) == surd(2, 3, 5)
    assert height_exact(IntPoly((-2, 0, 0, 5))) == surd(5, 1, 3)


def test_deg_of_height_power_examples():
    assert deg_of_height_power(IntPoly((-1, -1, 1))) == 2
    assert deg_of_height_power(IntPoly((-8, 0, 0, 0, 0, 1))) == 1
    # generic quartic, two roots inside, Galois group S4
    assert deg_of_height_power(IntPoly((-3, -3, -3, 0, 1))) == 6


@given(coeff_lists)
def test_matches_numeric(c):
    m = mahler_exact(IntPoly(c))
    with mpmath.workdps(60):
        ref = numeric_mahler(c)
        assert abs(mpmath.mpf(m.approx(40)) - ref) < mpmath.mpf(10) ** -20 * max(1, ref)


@given(coeff_lists, coeff_lists)
def test_multiplicative(a, b):
    p, q = IntPoly(a), IntPoly(b)
    assert mahler_exact(pmul(p, q)) == mul(mahler_exact(p), mahler_exact(q))


def test_mahler_at_most_consistent():
    rng = random.Random(5)
    for _ in range(200):
        c = [rng.randint(-6, 6) for _ in range(rng.randint(1, 4))] + [rng.randint(1, 6)]
        m = float(mahler_exact(IntPoly(c)))
        for bound in (1, 2, 3, 5, 8, 13):
            if abs(m - bound) > 1e-9:
                assert mahler_at_most(IntPoly(c), bound) == (m < bound)
    assert mahler_at_most(IntPoly((-2, 1)), 2)
