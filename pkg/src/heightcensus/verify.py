"""Invariant suites exposed through ``heightcensus verify``.

Each suite returns a :class:`SuiteResult`; a suite passes when every check
passes.  Sizes are parameters so the test-suite can run reduced versions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import mpmath
from sympy import Poly, cyclotomic_poly, symbols

from .algnum import RealAlgebraic, compare, is_natural_power, mul, nth_root_positive, pow_int, surd
from .census import _Query, _run, census_B
from .constructions import eisenstein_family
from .heightdyn import TendingToOne, height_of, iterate
from .mahler import height_exact, mahler_exact
from .polyz import IntPoly, is_irreducible_over_Z, mul as pmul
from .rootloc import RootCount, count_unit_disk


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(ok), detail))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]


# ---------------------------------------------------------------------------
# lemma22: exact set identities for B(0, d) and B(d, d)


def _same_values(got: list[RealAlgebraic], want: list[RealAlgebraic]) -> bool:
    return len(got) == len(want) and all(a == b for a, b in zip(got, want))


def lemma22(threads: int | None = None, eisenstein_max_n: int = 10, eisenstein_max_d: int = 4) -> SuiteResult:
    res = SuiteResult("lemma22")
    cases = [
        (0, 2, "sqrt(10)", [surd(n, 1, 2) for n in range(1, 11)]),
        (0, 3, 2, [surd(n, 1, 3) for n in range(2, 9)]),
        (3, 3, 2, [surd(n, 1, 3) for n in range(2, 9)]),
    ]
    for k, d, h, want in cases:
        got, size = census_B(k, d, h, threads)
        res.add(f"B({k},{d},{h})", _same_values(got, want) and size == len(want), f"{size} values")
    # N t^d - p has every root inside and height N^(1/d)
    for n in range(2, eisenstein_max_n + 1):
        for d in range(1, eisenstein_max_d + 1):
            p = eisenstein_family(n, d)
            ok = is_irreducible_over_Z(p) and count_unit_disk(p) == RootCount(d, 0, 0)
            ok = ok and height_exact(p) == surd(n, 1, d)
            res.add(f"eisenstein({n},{d})", ok, str(p))
    return res


# ---------------------------------------------------------------------------
# dynamics


def fixed_points(max_a: int = 10, max_p: int = 5, max_q: int = 4) -> list[tuple[int, int, int, bool]]:
    out = []
    for a in range(1, max_a + 1):
        for q in range(1, max_q + 1):
            for p in range(1, max_p + 1):
                if gcd(p, q) != 1:
                    continue
                x = surd(a, p, q)
                out.append((a, p, q, height_of(x) == x))
    return out


def monotone_decrease(max_degree: int = 3, mmax: int = 10, direct_stride: int = 50, threads: int | None = None):
    """Check H(H(alpha)) <= H(alpha), equality iff H(alpha) is a natural power.

    With M = M(minpoly alpha) of degree-d alpha, H(alpha) = M^(1/d) and
    H(H(alpha)) = H(M)^(1/d), so the claim is H(M) <= M, i.e.
    M(minpoly M) <= M^(deg M), and H(alpha) is a natural power iff M is.
    Every ``direct_stride``-th key is also checked by computing H(H(alpha))
    itself.  Returns (keys checked, equality cases, exceptions, direct checks).
    """
    keys = equal = direct = 0
    bad: list[str] = []
    for d in range(1, max_degree + 1):
        merged = _run(_Query(d, None, Fraction(mmax), True, True, "records"), threads)
        for i, key in enumerate(sorted(merged)):
            m = RealAlgebraic.from_key(*key)
            c = compare(mahler_exact(m.minpoly), pow_int(m, m.degree))
            natural = is_natural_power(m) is not None
            keys += 1
            equal += c == 0
            if c > 0 or (c == 0) != natural:
                bad.append(f"d={d} M={m.key_text()}")
            if direct_stride and i % direct_stride == 0:
                h = nth_root_positive(m, d)
                hh = height_of(h)
                c2 = compare(hh, h)
                direct += 1
                if c2 > 0 or (c2 == 0) != (is_natural_power(h) is not None):
                    bad.append(f"direct d={d} H={h.key_text()}")
    return keys, equal, bad, direct


def golden_orbit(max_steps: int = 8, eps=Fraction(1, 1000), digits: int = 20):
    phi = RealAlgebraic.from_root(IntPoly((-1, -1, 1)), 1)
    rep = iterate(phi, max_steps, eps)
    problems = []
    if rep.trajectory[0].minpoly != IntPoly((-1, -1, 1)):
        problems.append("step 0 minpoly")
    if len(rep.trajectory) < 2 or rep.trajectory[1].minpoly != IntPoly((-1, 0, -1, 0, 1)):
        problems.append("step 1 minpoly")
    with mpmath.workdps(digits + 20):
        ref = (1 + mpmath.sqrt(5)) / 2
        for n, v in enumerate(rep.trajectory[:5]):
            want = ref ** (mpmath.mpf(2) ** -n)
            if abs(mpmath.mpf(v.approx(digits + 10)) - want) > mpmath.mpf(10) ** -digits:
                problems.append(f"step {n}: {v.approx(digits)} != {mpmath.nstr(want, digits)}")
    if not isinstance(rep.classification, TendingToOne):
        problems.append(f"classification {rep.classification}")
    if rep.envelope_verified is not True:
        problems.append(f"envelope {rep.envelope_verified}")
    if not rep.decreasing_verified or not rep.degree_divisibility_verified:
        problems.append("decrease / divisibility")
    return rep, problems


def dynamics(threads: int | None = None, mmax: int = 10, max_degree: int = 3) -> SuiteResult:
    res = SuiteResult("dynamics")
    fp = fixed_points()
    bad = [f"{a}^({p}/{q})" for a, p, q, ok in fp if not ok]
    res.add("fixed points a<=10 q<=4 p<=5", not bad, f"{len(fp)} surds; failures {bad[:5]}")
    keys, equal, exc, direct = monotone_decrease(max_degree, mmax, threads=threads)
    res.add(
        f"H(H(a)) <= H(a), d<={max_degree}, M<={mmax}",
        not exc,
        f"{keys} keys, {equal} equalities, {direct} direct, exceptions {exc[:5]}",
    )
    _, problems = golden_orbit()
    res.add("golden-ratio orbit", not problems, "; ".join(problems))
    return res


# ---------------------------------------------------------------------------
# multiplicativity


def random_poly(rng: random.Random, max_degree: int, bound: int, min_degree: int = 0) -> IntPoly:
    d = rng.randint(min_degree, max_degree)
    lead = rng.choice([i for i in range(-bound, bound + 1) if i])
    return IntPoly([rng.randint(-bound, bound) for _ in range(d)] + [lead])


def multiplicativity(pairs: int = 1000, seed: int = 20240601, max_degree: int = 3, bound: int = 10) -> SuiteResult:
    res = SuiteResult("multiplicativity")
    rng = random.Random(seed)
    bad = []
    for _ in range(pairs):
        a = random_poly(rng, max_degree, bound)
        b = random_poly(rng, max_degree, bound)
        if mahler_exact(pmul(a, b)) != mul(mahler_exact(a), mahler_exact(b)):
            bad.append(f"({a})*({b})")
    res.add(f"M(AB) = M(A)M(B) on {pairs} pairs", not bad, f"failures {bad[:5]}")
    return res


# ---------------------------------------------------------------------------
# rootloc-oracle


def numeric_count(p: IntPoly, margin: float = 1e-3, dps: int = 50) -> RootCount | None:
    """Root location from mpmath roots, or None unless every root is certified.

    A root counts as certified when its modulus differs from 1 by more than
    ``margin`` plus the error estimate reported by the root finder.  Zero
    roots are counted separately (they are exactly known).
    """
    c = list(p.coeffs)
    zeros = 0
    while c and c[0] == 0:
        c.pop(0)
        zeros += 1
    if len(c) == 1:
        return RootCount(zeros, 0, 0)
    with mpmath.workdps(dps):
        try:
            roots, err = mpmath.polyroots(list(reversed(c)), maxsteps=200, extraprec=2 * dps, error=True)
        except mpmath.libmp.NoConvergence:
            return None
        inside = outside = 0
        for z in roots:
            gap = abs(z) - 1
            if abs(gap) <= margin + err:
                return None
            if gap < 0:
                inside += 1
            else:
                outside += 1
    return RootCount(inside + zeros, 0, outside)


def cyclotomic(n: int) -> IntPoly:
    t = symbols("t")
    return IntPoly(tuple(int(x) for x in reversed(Poly(cyclotomic_poly(n, t), t).all_coeffs())))


def rootloc_oracle(
    samples: int = 10000, planted: int = 100, seed: int = 7, max_degree: int = 6, bound: int = 20
) -> SuiteResult:
    res = SuiteResult("rootloc-oracle")
    rng = random.Random(seed)
    certified = 0
    bad = []
    for _ in range(samples):
        p = random_poly(rng, max_degree, bound, min_degree=1)
        ref = numeric_count(p)
        if ref is None:
            continue
        certified += 1
        if count_unit_disk(p) != ref:
            bad.append(str(p))
    res.add(f"random polynomials ({certified}/{samples} certified)", not bad and certified > 0, f"failures {bad[:5]}")
    bad = []
    done = 0
    while done < planted:
        base = random_poly(rng, 4, bound, min_degree=0)
        ref = numeric_count(base)
        if ref is None:
            continue
        prod, circ = base, 0
        for _ in range(rng.randint(1, 3)):
            n = rng.randint(1, 12)
            f = cyclotomic(n)
            prod = pmul(prod, f)
            circ += f.degree
        got = count_unit_disk(prod)
        if got != RootCount(ref.inside, circ, ref.outside):
            bad.append(f"{prod}: {got} vs planted {circ}")
        done += 1
    res.add(f"planted cyclotomic products ({planted})", not bad, f"failures {bad[:5]}")
    return res


SUITES = {
    "lemma22": lemma22,
    "dynamics": dynamics,
    "multiplicativity": multiplicativity,
    "rootloc-oracle": rootloc_oracle,
}
