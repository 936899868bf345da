from fractions import Fraction

import mpmath
from hypothesis import given
from hypothesis import strategies as st

from heightcensus.polyz import IntPoly, squarefree_decomposition, mul
from heightcensus.realroots import count_abs_greater, count_roots, isolate_real_roots, refine, sign_at

coeff_lists = st.lists(st.integers(-12, 12), min_size=2, max_size=7).filter(lambda c: c[-1] != 0)


def real_roots_numeric(c):
    with mpmath.workdps(60):
        roots = mpmath.polyroots(list(reversed(c)), maxsteps=300, extraprec=200)
        return sorted(float(r.real) for r in roots if abs(r.imag) < 1e-25)


def test_count_simple():
    p = IntPoly((-2, 0, 1))
    assert count_roots(p) == 2
    assert count_roots(p, Fraction(0), Fraction(2)) == 1
    assert count_abs_greater(p, Fraction(1)) == 2
    assert count_abs_greater(p, Fraction(3, 2)) == 0


@given(coeff_lists)
def test_isolation_matches_numeric(c):
    p = IntPoly(c)
    ivs = isolate_real_roots(p)
    distinct = sorted(set(round(r, 9) for r in real_roots_numeric(c)))
    assert len(ivs) == len(distinct)
    sqf = IntPoly((1,))
    for f, _ in squarefree_decomposition(p)[1]:
        sqf = mul(sqf, f)
    for lo, hi in ivs:
        assert lo <= hi
        if lo < hi:
            assert sign_at(sqf.coeffs, lo) * sign_at(sqf.coeffs, hi) < 0
        else:
            assert sign_at(sqf.coeffs, lo) == 0
    for a, b in zip(ivs, ivs[1:]):
        assert a[1] <= b[0]


def test_refine_width():
    p = IntPoly((-2, 0, 1))
    iv = isolate_real_roots(p)[1]
    lo, hi = refine(p.coeffs, iv, Fraction(1, 10**9))
    assert hi - lo <= Fraction(1, 10**9)
    assert lo <= Fraction(14142135623, 10**10) <= hi
