import itertools
import random

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from heightcensus.polyz import (
    IntPoly,
    content,
    derivative,
    eval_rational,
    factor_over_Z,
    gcd,
    is_irreducible_over_Z,
    mignotte_bound,
    mul,
    primitive_part,
    resultant,
    reverse,
    squarefree_decomposition,
)

T = sympy.symbols("t")

coeff_lists = st.lists(st.integers(-9, 9), min_size=1, max_size=6).filter(lambda c: c[-1] != 0)


def sylvester_resultant(p: IntPoly, q: IntPoly) -> int:
    """Determinant of the Sylvester matrix (independent oracle)."""
    a, b = list(reversed(p.coeffs)), list(reversed(q.coeffs))
    m, n = len(a) - 1, len(b) - 1
    rows = []
    for i in range(n):
        rows.append([0] * i + a + [0] * (n - 1 - i))
    for i in range(m):
        rows.append([0] * i + b + [0] * (m - 1 - i))
    return int(sympy.Matrix(rows).det())


def to_sympy(p: IntPoly):
    return sympy.Poly(list(reversed(p.coeffs)), T)


def test_parse_and_text_roundtrip():
    p = IntPoly.parse("-1,-1,1")
    assert p.coeffs == (-1, -1, 1)
    assert str(p) == "-1,-1,1"
    assert IntPoly.parse(str(p)) == p


def test_content_examples():
    assert content(IntPoly((4, 0, 2))) == 2
    assert content(IntPoly((1, -1, 0, 1))) == 1
    assert content(IntPoly((12, -9, 6))) == 3
    with pytest.raises(ValueError):
        content(IntPoly((0,)))


def test_primitive_part_examples():
    assert primitive_part(IntPoly((4, 0, 2))) == IntPoly((2, 0, 1))
    assert primitive_part(IntPoly((6, -3))) == IntPoly((2, -1))
    assert primitive_part(IntPoly((-1, -1, 1))) == IntPoly((-1, -1, 1))


def test_basic_ops():
    assert mul(IntPoly((-1, 1)), IntPoly((1, 1))) == IntPoly((-1, 0, 1))
    assert reverse(IntPoly((5, -3, 2))) == IntPoly((2, -3, 5))
    assert eval_rational(IntPoly((-1, -1, 1)), 2) == 1
    assert derivative(IntPoly((1, 2, 3))) == IntPoly((2, 6))


def test_resultant_examples():
    assert resultant(IntPoly((-2, 1)), IntPoly((-3, 1))) == -1
    assert resultant(IntPoly((-2, 0, 1)), IntPoly((-2, 0, 1))) == 0
    assert resultant(IntPoly((-2, 0, 1)), IntPoly((-3, 0, 1))) == 1


@given(coeff_lists, coeff_lists)
def test_resultant_matches_sylvester(a, b):
    p, q = IntPoly(a), IntPoly(b)
    if p.degree == 0 and q.degree == 0:
        return
    assert resultant(p, q) == sylvester_resultant(p, q)


@given(coeff_lists, coeff_lists)
def test_gcd_matches_sympy(a, b):
    p, q = IntPoly(a), IntPoly(b)
    g = gcd(p, q)
    ref = sympy.gcd(to_sympy(p), to_sympy(q))
    ref = sympy.Poly(ref, T)
    assert g.degree == ref.degree()
    # both are determined up to sign and content
    assert primitive_part(g) == primitive_part(IntPoly(tuple(int(c) for c in reversed(ref.all_coeffs()))))


def test_squarefree_examples():
    p = mul(mul(IntPoly((-1, 1)), IntPoly((-1, 1))), IntPoly((2, 1)))
    assert squarefree_decomposition(p) == (1, [(IntPoly((2, 1)), 1), (IntPoly((-1, 1)), 2)])
    assert squarefree_decomposition(IntPoly((-1, -1, 1))) == (1, [(IntPoly((-1, -1, 1)), 1)])
    q = IntPoly((-2, 0, 1))
    assert squarefree_decomposition(q * q * q * 4) == (4, [(q, 3)])


@given(coeff_lists, st.integers(1, 3), coeff_lists)
def test_squarefree_recomposes(a, e, b):
    p = mul(IntPoly(a) ** e, IntPoly(b))
    c, parts = squarefree_decomposition(p)
    prod = IntPoly((c,))
    for f, m in parts:
        prod = mul(prod, f**m)
    assert prod == p
    assert [m for _, m in parts] == sorted({m for _, m in parts})


def _brute_force_has_factor(p: IntPoly) -> bool:
    """Search monic-up-to-lc factors of degree <= deg/2 with Mignotte-bounded coefficients."""
    d = p.degree
    lc = p.leading
    for m in range(1, d // 2 + 1):
        b = mignotte_bound(p, m)
        for lead in [x for x in range(1, abs(lc) + 1) if lc % x == 0]:
            for rest in itertools.product(range(-b, b + 1), repeat=m):
                f = IntPoly(rest + (lead,))
                if f.degree < 1:
                    continue
                if _divides(f, p):
                    return True
    return False


def _divides(f: IntPoly, p: IntPoly) -> bool:
    q, r = sympy.div(to_sympy(p), to_sympy(f))
    return r.is_zero and all(c.is_integer for c in q.all_coeffs())


def test_factor_examples():
    quartic = IntPoly((-1, 0, -1, 0, 1))
    assert factor_over_Z(quartic) == (1, [(quartic, 1)])
    assert not _brute_force_has_factor(quartic)
    assert factor_over_Z(IntPoly((-2, 0, 2))) == (2, [(IntPoly((-1, 1)), 1), (IntPoly((1, 1)), 1)])
    quintic = IntPoly((-8, 0, 0, 0, 0, 1))
    assert factor_over_Z(quintic) == (1, [(quintic, 1)])
    assert not _brute_force_has_factor(quintic)


def test_irreducible_examples():
    assert is_irreducible_over_Z(IntPoly((-1, -1, 1)))
    assert not is_irreducible_over_Z(IntPoly((-1, 0, 1)))
    assert is_irreducible_over_Z(IntPoly((-2, 0, 0, 5)))


def test_irreducibility_against_brute_force():
    rng = random.Random(3)
    for _ in range(150):
        d = rng.randint(2, 4)
        p = IntPoly([rng.randint(-4, 4) for _ in range(d)] + [rng.randint(1, 3)])
        if p.coeffs[0] == 0 or content(p) != 1:
            continue
        assert is_irreducible_over_Z(p) == (not _brute_force_has_factor(p)), str(p)


@given(coeff_lists, coeff_lists)
def test_factor_recomposes(a, b):
    p = mul(IntPoly(a), IntPoly(b))
    c, parts = factor_over_Z(p)
    prod = IntPoly((c,))
    for f, m in parts:
        assert is_irreducible_over_Z(f)
        prod = mul(prod, f**m)
    assert prod == p
