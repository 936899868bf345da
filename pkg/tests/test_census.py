import itertools
from collections import Counter
from fractions import Fraction
from math import gcd

import mpmath
import pytest

from heightcensus.algnum import RealAlgebraic, surd
from heightcensus.census import (
    census_A,
    census_B,
    census_mahler,
    count_algebraic,
    cumulative_counts,
    enumerate_bounded,
    fit_slope,
    parse_bound,
    slope_window,
)
from heightcensus.polyz import IntPoly


def test_parse_bound():
    assert parse_bound("3") == 3
    assert parse_bound("7/2") == Fraction(7, 2)
    assert parse_bound("3.16") == Fraction(316, 100)
    assert parse_bound("sqrt(10)") == surd(10, 1, 2)
    assert parse_bound("17^(1/4)") == surd(17, 1, 4)
    with pytest.raises(ValueError):
        parse_bound("ten")


def test_enumerate_examples():
    got = list(enumerate_bounded(1, 2, primitive_only=True))
    assert len(got) == 7
    assert {p.coeffs for p in got} == {(b, 1) for b in range(-2, 3)} | {(-1, 2), (1, 2)}
    assert len(list(enumerate_bounded(1, 1))) == 3


def test_kronecker_degree_two():
    got = {p.coeffs for p in enumerate_bounded(2, 1, primitive_only=True)}
    want = {(0, 0, 1), (0, 1, 1), (0, -1, 1), (1, 2, 1), (1, -2, 1), (-1, 0, 1), (1, 0, 1), (1, 1, 1), (1, -1, 1)}
    assert got == want


def _rational_height_counts(k: int, hmax: int) -> Counter:
    """Oracle: H(p/q) = max(|p|, q) for reduced p/q; k=0 means |p/q| >= 1."""
    out = Counter()
    for q in range(1, hmax + 1):
        for p in range(-hmax, hmax + 1):
            if gcd(p, q) != 1:
                continue
            if (abs(p) >= q) != (k == 0):
                continue
            out[max(abs(p), q)] += 1
    return out


@pytest.mark.parametrize("k", [0, 1])
def test_census_A_degree_one(k):
    recs = census_A(k, 1, 3)
    got = {int(r.key.as_fraction()): r.count for r in recs}
    assert got == dict(_rational_height_counts(k, 3))
    assert [float(r.key) for r in recs] == sorted(float(r.key) for r in recs)


def test_count_algebraic_degree_one():
    assert count_algebraic(1, 3) == sum(_rational_height_counts(0, 3).values()) + sum(
        _rational_height_counts(1, 3).values()
    )
    assert count_algebraic(1, 3) == 15


def test_census_B_examples():
    vals, n = census_B(0, 2, "sqrt(10)")
    assert n == 10 and vals == [surd(m, 1, 2) for m in range(1, 11)]
    vals, n = census_B(3, 3, 2)
    assert n == 7 and vals == [surd(m, 1, 3) for m in range(2, 9)]
    assert census_B(0, 3, 1) == ([], 0)


def test_census_mahler_degree_one():
    recs = census_mahler(0, 1, 2)
    assert [(int(r.key.as_fraction()), r.count) for r in recs] == [(1, 2), (2, 4)]
    doubled = census_mahler(0, 1, 2, identify_sign=False)
    assert [r.count for r in doubled] == [4, 8]


def _numeric_measure_and_k(c):
    with mpmath.workdps(40):
        roots = mpmath.polyroots(list(reversed(c)), maxsteps=200, extraprec=100)
        m = abs(mpmath.mpf(c[-1]))
        k = 0
        for r in roots:
            m *= max(1, abs(r))
            k += abs(r) < 1
        return float(m), k


def test_census_mahler_against_brute_force():
    d, k, mmax = 2, 1, 3
    got = Counter()
    for r in census_mahler(k, d, mmax):
        got[round(float(r.key), 9)] += r.count
    ref = Counter()
    lim = [3 * 1, 3 * 2, 3 * 1]
    for c in itertools.product(*(range(-b, b + 1) for b in lim[:2]), range(1, lim[2] + 1)):
        if c[0] == 0 and c[1] == 0:
            pass
        m, kk = _numeric_measure_and_k(list(c))
        if kk == k and m <= mmax + 1e-9:
            ref[round(m, 9)] += 1
    assert got == ref


def test_thread_count_independence():
    a = census_A(1, 2, 3, threads=1)
    b = census_A(1, 2, 3, threads=3)
    assert [(r.key, r.count, r.deg_Hd) for r in a] == [(r.key, r.count, r.deg_Hd) for r in b]


def test_cumulative_counts_monotone_and_consistent():
    counts = cumulative_counts(1, 2, [2, 3])
    assert counts[0] <= counts[1]
    assert counts[1] == sum(r.count for r in census_A(1, 2, 3))


def test_fit_slope_examples():
    assert fit_slope([(2, 16), (4, 256), (8, 4096)]).slope == pytest.approx(4.0)
    assert fit_slope([(2, 16), (4, 256), (8, 4096)]).residual == pytest.approx(0, abs=1e-12)
    assert fit_slope([(2, 3), (4, 3), (8, 3)]).slope == pytest.approx(0.0, abs=1e-12)
    assert fit_slope([(2, 10), (4, 35), (8, 130)]).slope == pytest.approx(1.85, abs=0.01)


def test_slope_window():
    pts = [(2, 1), (4, 2), (8, 3), (16, 4)]
    assert slope_window(pts, "all") == pts
    assert slope_window(pts, "upper-half") == [(4, 2), (8, 3), (16, 4)][1:]
    with pytest.raises(ValueError):
        slope_window(pts, "lower")


def test_bad_arguments():
    with pytest.raises(ValueError):
        census_A(3, 2, 2)
    with pytest.raises(ValueError):
        census_B(0, 2, Fraction(1, 2))
