from fractions import Fraction

import pytest

from heightcensus.algnum import RealAlgebraic, surd
from heightcensus.heightdyn import BudgetExhausted, FixedSurd, TendingToOne, height_of, iterate
from heightcensus.polyz import IntPoly
from heightcensus.verify import fixed_points, golden_orbit

PHI = RealAlgebraic.from_root(IntPoly((-1, -1, 1)), 1)


def test_height_of_examples():
    h = height_of(PHI)
    assert h.minpoly == IntPoly((-1, 0, -1, 0, 1))
    assert height_of(surd(2, 3, 5)) == surd(2, 3, 5)
    assert height_of(RealAlgebraic.from_rational(0)) == RealAlgebraic.from_rational(1)


def test_height_depends_on_minpoly_only():
    conj = RealAlgebraic.from_root(IntPoly((-1, -1, 1)), 0)
    assert height_of(conj) == height_of(PHI)


def test_fixed_surds():
    assert iterate(surd(2, 3, 5), 4, Fraction(1, 1000)).classification == FixedSurd(2, Fraction(3, 5), 0)
    assert iterate(RealAlgebraic.from_rational(7), 4, Fraction(1, 1000)).classification == FixedSurd(7, Fraction(1), 0)


def test_fixed_surd_after_one_step():
    rep = iterate(RealAlgebraic.from_rational(Fraction(-3, 2)), 4, Fraction(1, 1000))
    assert rep.classification == FixedSurd(3, Fraction(1), 1)
    assert rep.trajectory[1] == rep.trajectory[2]


def test_golden_orbit():
    rep, problems = golden_orbit()
    assert problems == []
    assert isinstance(rep.classification, TendingToOne)
    assert rep.classification.certified_from == 0
    for a, b in zip(rep.trajectory, rep.trajectory[1:]):
        assert height_of(a) == b


def test_budget_exhausted():
    rep = iterate(RealAlgebraic.from_root(IntPoly((-1, -1, 0, 1)), 0), 1, Fraction(1, 10**12))
    assert isinstance(rep.classification, (BudgetExhausted, TendingToOne))
    assert rep.decreasing_verified


def test_small_fixed_point_grid():
    assert all(ok for *_, ok in fixed_points(max_a=4, max_p=3, max_q=3))


def test_bad_steps():
    with pytest.raises(ValueError):
        iterate(PHI, 0, Fraction(1, 10))
