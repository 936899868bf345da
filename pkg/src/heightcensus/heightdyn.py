"""Iteration of the height map on real algebraic numbers.

Starting from a seed alpha_0, alpha_{n+1} = H(alpha_n).  An orbit either
reaches a value a^b with a natural (a fixed point of H) or tends to 1.

Besides the threshold rule for the second branch there is an exact
certificate: heights satisfy H(y^m) = H(y)^m, so once alpha_{n+1}^m = alpha_n
for some m >= 2, every later step takes an m-th root and the orbit tends to 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .algnum import RealAlgebraic, compare, is_natural_power, pow_int
from .mahler import height_exact, mahler_exact
from .rootloc import InvariantError

MAX_DEGREE = 64
ENVELOPE_MAX_DEGREE = 12


@dataclass(frozen=True)
class FixedSurd:
    a: int
    b: Fraction
    settled_at: int

    def describe(self) -> str:
        return f"FixedSurd(a={self.a}, b={self.b}, settled_at={self.settled_at})"


@dataclass(frozen=True)
class TendingToOne:
    last_value_interval: tuple[Fraction, Fraction]
    certified_from: int | None = None

    def describe(self) -> str:
        if self.certified_from is not None:
            how = f"certified from step {self.certified_from}"
        else:
            how = "numerically indicated"
        lo, hi = self.last_value_interval
        return f"TendingToOne({how}; last value in [{float(lo):.12g}, {float(hi):.12g}])"


@dataclass(frozen=True)
class BudgetExhausted:
    reason: str

    def describe(self) -> str:
        return f"BudgetExhausted({self.reason})"


@dataclass
class OrbitReport:
    seed: RealAlgebraic
    trajectory: list[RealAlgebraic]
    classification: object
    decreasing_verified: bool
    envelope_verified: bool | None = None
    degree_divisibility_verified: bool = True
    notes: list[str] = field(default_factory=list)


def height_of(x: RealAlgebraic) -> RealAlgebraic:
    """H(x); depends only on the minimal polynomial of x."""
    return height_exact(x.minpoly)


def _power_certificate(prev: RealAlgebraic, cur: RealAlgebraic) -> int | None:
    """m >= 2 with cur^m == prev exactly, if there is one."""
    if cur.sign() <= 0 or prev.sign() <= 0:
        return None
    c, p = float(cur), float(prev)
    if c <= 1.0 or p <= 1.0:
        return None
    m = round(math.log(p) / math.log(c))
    if not 2 <= m <= 4096:
        return None
    if prev.degree > cur.degree:
        return None
    return m if pow_int(cur, m) == prev else None


def _envelope_ok(traj: list[RealAlgebraic]) -> bool | None:
    """alpha_n <= alpha_1^((1 - 1/d!)^(n-1)) with d = deg alpha_1."""
    if len(traj) < 3:
        return None
    d = traj[1].degree
    if d > ENVELOPE_MAX_DEGREE:
        return None
    f = math.factorial(d)
    with mpmath.workdps(60):
        a1 = mpmath.mpf(traj[1].approx(50))
        for n in range(2, len(traj)):
            bound = a1 ** ((mpmath.mpf(1) - mpmath.mpf(1) / f) ** (n - 1))
            if mpmath.mpf(traj[n].approx(50)) > bound * (1 + mpmath.mpf(10) ** -40):
                return False
    return True


def iterate(seed: RealAlgebraic, max_steps: int, one_eps) -> OrbitReport:
    """Iterate the height map from seed for at most max_steps steps."""
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    eps = Fraction(one_eps)
    traj = [seed]
    decreasing = True
    divisibility = True
    certified_from: int | None = None
    classification = None
    notes: list[str] = []
    n = 0
    while True:
        v = traj[n]
        if v.sign() > 0:
            np_ = is_natural_power(v)
            if np_ is not None:
                h = height_of(v)
                if h != v:
                    raise InvariantError(f"surd {v!r} is not fixed by the height map")
                traj.append(h)
                classification = FixedSurd(np_[0], np_[1], n)
                break
        if n >= 1:
            lo, hi = v.refine(eps / 4)
            if lo >= 1 - eps / 4 and hi <= 1 + eps:
                classification = TendingToOne((lo, hi), certified_from)
                break
        if n >= max_steps:
            break
        if v.degree > MAX_DEGREE:
            notes.append(f"degree {v.degree} exceeds {MAX_DEGREE}")
            break
        h = height_of(v)
        if h.degree > MAX_DEGREE:
            notes.append(f"next value has degree {h.degree} > {MAX_DEGREE}")
            break
        # H(alpha)^d = M(minpoly alpha) has degree dividing d!
        if math.factorial(v.degree) % mahler_exact(v.minpoly).degree:
            divisibility = False
        if n >= 1 and compare(h, v) > 0:
            decreasing = False
        if certified_from is None:
            m = _power_certificate(v, h)
            if m is not None:
                certified_from = n
                notes.append(f"alpha_{n + 1}^{m} = alpha_{n}")
        traj.append(h)
        n += 1
    if classification is None:
        last = traj[-1]
        if certified_from is not None:
            classification = TendingToOne(last.refine(Fraction(1, 2**40)), certified_from)
        else:
            classification = BudgetExhausted("; ".join(notes) or f"{max_steps} steps")
    env = None
    if not isinstance(classification, FixedSurd):
        env = _envelope_ok(traj)
        if env is False:
            raise InvariantError("trajectory leaves the d!-contraction envelope")
    return OrbitReport(seed, traj, classification, decreasing, env, divisibility, notes)
