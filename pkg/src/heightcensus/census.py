"""Exhaustive censuses of integer polynomials by degree and Mahler measure.

The candidate box for degree d and M(p) <= Mmax is |a_i| <= binom(d, i) Mmax
with 1 <= a_d <= Mmax.  Work is split into shards by leading coefficient.
Each shard builds its slice of the box as a numpy array, discards rows with
cheap vectorized tests (content, Rouche-type root location, Graeffe lower
bounds on M) and then runs the exact pipeline row by row.  Shard results are
plain dicts keyed by canonical algebraic keys, so merging is associative and
the output does not depend on the number of workers.
"""

from __future__ import annotations

import math
import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterator, Sequence

import numpy as np

from .algnum import RealAlgebraic, compare, nth_root_positive, pow_int
from .kernels import may_have_measure_at_most
from .mahler import mahler_at_most, mahler_exact
from .polyz import IntPoly, _is_irreducible
from .rootloc import count_unit_disk

# ---------------------------------------------------------------------------
# records


@dataclass(frozen=True)
class CensusRecord:
    key: RealAlgebraic
    d: int
    k: int
    count: int
    deg_Hd: int


@dataclass
class SlopeEstimate:
    points: list[tuple[float, int]]
    slope: float
    intercept: float
    residual: float


# ---------------------------------------------------------------------------
# bounds


_SQRT = re.compile(r"^sqrt\((.+)\)$")
_ROOT = re.compile(r"^(.+)\^\((\d+)/(\d+)\)$")


def parse_bound(text) -> Fraction | RealAlgebraic:
    """Parse a height or measure bound.

    Accepts integers, fractions ``p/q``, decimals (taken exactly), and the
    surd forms ``sqrt(n)`` and ``n^(p/q)``.
    """
    if isinstance(text, RealAlgebraic):
        return text.as_fraction() if text.is_rational() else text
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    s = str(text).strip().replace(" ", "")
    m = _SQRT.match(s)
    if m:
        return _surd_bound(Fraction(m.group(1)), 1, 2)
    m = _ROOT.match(s)
    if m:
        return _surd_bound(Fraction(m.group(1)), int(m.group(2)), int(m.group(3)))
    try:
        return Fraction(s)
    except ValueError:
        raise ValueError(f"cannot parse bound {text!r}") from None


def _surd_bound(base: Fraction, p: int, q: int):
    if base < 0:
        raise ValueError("surd base must be nonnegative")
    x = nth_root_positive(pow_int(RealAlgebraic.from_rational(base), p), q)
    return x.as_fraction() if x.is_rational() else x


def _power_bound(h, d: int):
    if isinstance(h, RealAlgebraic):
        m = pow_int(h, d)
        return m.as_fraction() if m.is_rational() else m
    return Fraction(h) ** d


def _bound_interval(b) -> tuple[Fraction, Fraction]:
    if isinstance(b, RealAlgebraic):
        return b.refine(Fraction(1, 2**64))
    return (b, b)


def _at_least_one(b) -> bool:
    if isinstance(b, RealAlgebraic):
        return not compare(b, RealAlgebraic.from_rational(1)) < 0
    return b >= 1


def _measure_at_most(q: tuple[int, ...], bound) -> bool:
    """Exact M(q) <= bound for rational or algebraic bounds."""
    if not isinstance(bound, RealAlgebraic):
        return mahler_at_most(q, bound)
    lo, hi = _bound_interval(bound)
    if mahler_at_most(q, lo):
        return True
    if not mahler_at_most(q, hi):
        return False
    return compare(mahler_exact(q), bound) <= 0


# ---------------------------------------------------------------------------
# shard work


@dataclass(frozen=True)
class _Query:
    d: int
    k: int | None
    mmax: object  # Fraction or RealAlgebraic
    primitive_only: bool
    irreducible_only: bool
    mode: str  # "records", "witness", "rows", "thresholds"
    thresholds: tuple = field(default=())


def _box_limits(d: int, mmax) -> list[int]:
    _, hi = _bound_interval(mmax)
    return [math.floor(math.comb(d, i) * hi) for i in range(d + 1)]


def _shard_rows(d: int, lead: int, limits: Sequence[int]) -> np.ndarray:
    ranges = [np.arange(-limits[i], limits[i] + 1, dtype=np.int64) for i in range(d)]
    grids = np.meshgrid(*ranges, indexing="ij")
    rows = np.empty((grids[0].size, d + 1), dtype=np.int64)
    for i, g in enumerate(grids):
        rows[:, i] = g.ravel()
    rows[:, d] = lead
    return rows


def _prefilter(rows: np.ndarray, q: _Query) -> np.ndarray:
    d = q.d
    if q.primitive_only:
        rows = rows[np.gcd.reduce(rows, axis=1) == 1]
    if q.k is not None:
        absr = np.abs(rows)
        total = absr.sum(axis=1)
        keep = np.ones(len(rows), dtype=bool)
        if q.k != d:
            # |a_d| > sum of the others: every root lies strictly inside
            keep &= 2 * absr[:, d] <= total
        if q.k != 0:
            # |a_0| > sum of the others: no root in the closed disk
            keep &= 2 * absr[:, 0] <= total
        # |a_0 / a_d| is the product of all root moduli
        if q.k == 0:
            keep &= absr[:, 0] >= absr[:, d]
        elif q.k == d:
            keep &= absr[:, 0] < absr[:, d]
        rows = rows[keep]
    if len(rows):
        _, hi = _bound_interval(q.mmax)
        rows = rows[may_have_measure_at_most(rows, float(hi) * (1 + 1e-12))]
    return rows


def _run_shard(args) -> dict:
    q, lead, limits = args
    rows = _prefilter(_shard_rows(q.d, lead, limits), q)
    if q.mode == "witness":
        return _witness(rows, q)
    out: dict = {}
    if q.mode == "thresholds":
        out = {i: 0 for i in range(len(q.thresholds))}
    for row in rows.tolist():
        c = tuple(row)
        if q.k is not None and count_unit_disk(c).inside != q.k:
            continue
        if q.irreducible_only and not _is_irreducible(c):
            continue
        if not _measure_at_most(c, q.mmax):
            continue
        if q.mode == "rows":
            out[c] = 1
        elif q.mode == "records":
            key = mahler_exact(c).key()
            out[key] = out.get(key, 0) + 1
        else:
            for i, t in enumerate(q.thresholds):
                if _measure_at_most(c, t):
                    out[i] += 1
    return out


def _witness(rows: np.ndarray, q: _Query) -> dict:
    """For k in {0, d}: M is |a_0| resp. a_d, so one witness per value suffices."""
    col = 0 if q.k == 0 else q.d
    vals = np.abs(rows[:, col])
    # within a value, try small middle coefficients first: those rows most
    # often have every root on one side of the circle
    middle = np.abs(rows[:, 1 : q.d]).sum(axis=1)
    order = np.lexsort((middle, vals))
    vals = vals[order]
    starts = np.flatnonzero(np.r_[True, vals[1:] != vals[:-1]])
    ends = np.r_[starts[1:], len(vals)]
    found = []
    for s0, e0 in zip(starts.tolist(), ends.tolist()):
        for idx in order[s0:e0].tolist():
            c = tuple(rows[idx].tolist())
            if count_unit_disk(c).inside != q.k:
                continue
            if q.irreducible_only and not _is_irreducible(c):
                continue
            found.append(int(vals[s0]))
            break
    return {RealAlgebraic.from_rational(v).key(): 1 for v in found}


def resolve_threads(threads: int | None) -> int:
    if threads is None:
        env = os.environ.get("HEIGHT_CENSUS_THREADS")
        threads = int(env) if env else 1
    if threads < 1:
        raise ValueError("threads must be at least 1")
    return threads


def _run(q: _Query, threads: int | None) -> dict:
    threads = resolve_threads(threads)
    limits = _box_limits(q.d, q.mmax)
    jobs = [(q, lead, limits) for lead in range(1, limits[q.d] + 1)]
    if threads == 1 or len(jobs) == 1:
        parts = [_run_shard(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_run_shard, jobs))
    merged: dict = {}
    for part in parts:
        for key, n in part.items():
            merged[key] = merged.get(key, 0) + n
    return merged


def _check_kd(k: int | None, d: int) -> None:
    if d < 1:
        raise ValueError("degree must be at least 1")
    if k is not None and not 0 <= k <= d:
        raise ValueError(f"k must satisfy 0 <= k <= d (got k={k}, d={d})")


def sort_values(values: Sequence[RealAlgebraic]) -> list[RealAlgebraic]:
    """Sort ascending by exact comparison."""
    return sorted(values, key=cmp_to_key(compare))


# ---------------------------------------------------------------------------
# public censuses


def enumerate_bounded(d: int, Mmax, primitive_only: bool = False, threads: int | None = None) -> Iterator[IntPoly]:
    """Every degree-d integer polynomial with positive leading coefficient and M <= Mmax."""
    _check_kd(None, d)
    mmax = parse_bound(Mmax)
    if not _at_least_one(mmax):
        raise ValueError("Mmax must be at least 1")
    q = _Query(d, None, mmax, primitive_only, False, "rows")
    for c in sorted(_run(q, threads)):
        yield IntPoly(c)


def _a_records(k: int, d: int, Hmax, threads) -> list[CensusRecord]:
    mmax = _power_bound(Hmax, d)
    q = _Query(d, k, mmax, True, True, "records")
    merged = _run(q, threads)
    out = []
    for key, n in merged.items():
        m = RealAlgebraic.from_key(*key)
        out.append(CensusRecord(nth_root_positive(m, d), d, k, d * n, m.degree))
    order = sort_values([r.key for r in out])
    pos = {v.key(): i for i, v in enumerate(order)}
    out.sort(key=lambda r: pos[r.key.key()])
    return out


def census_A(k: int, d: int, Hmax, threads: int | None = None) -> list[CensusRecord]:
    """Records (H, count) for degree-d algebraic numbers with k conjugates inside and H <= Hmax."""
    _check_kd(k, d)
    hmax = parse_bound(Hmax)
    if not _at_least_one(hmax):
        raise ValueError("Hmax must be at least 1")
    return _a_records(k, d, hmax, threads)


def census_B(k: int, d: int, Hmax, threads: int | None = None) -> tuple[list[RealAlgebraic], int]:
    """The distinct height values of census_A, sorted ascending."""
    _check_kd(k, d)
    hmax = parse_bound(Hmax)
    if not _at_least_one(hmax):
        raise ValueError("Hmax must be at least 1")
    if k in (0, d):
        q = _Query(d, k, _power_bound(hmax, d), True, True, "witness")
        ms = [RealAlgebraic.from_key(*key) for key in _run(q, threads)]
        values = sort_values([nth_root_positive(m, d) for m in ms])
    else:
        values = [r.key for r in _a_records(k, d, hmax, threads)]
    return values, len(values)


def census_mahler(
    k: int, d: int, Mmax, threads: int | None = None, identify_sign: bool = True
) -> list[CensusRecord]:
    """Records (M, count) over all degree-d integer polynomials with k roots inside."""
    _check_kd(k, d)
    mmax = parse_bound(Mmax)
    if not _at_least_one(mmax):
        raise ValueError("Mmax must be at least 1")
    q = _Query(d, k, mmax, False, False, "records")
    merged = _run(q, threads)
    factor = 1 if identify_sign else 2
    out = []
    for key, n in merged.items():
        m = RealAlgebraic.from_key(*key)
        out.append(CensusRecord(m, d, k, factor * n, m.degree))
    order = sort_values([r.key for r in out])
    pos = {v.key(): i for i, v in enumerate(order)}
    out.sort(key=lambda r: pos[r.key.key()])
    return out


def cumulative_counts(k: int | None, d: int, heights: Sequence, threads: int | None = None) -> list[int]:
    """|A(k, d, <= T)| for each T in heights, from a single enumeration.

    Counts algebraic numbers (d per minimal polynomial).  ``k=None`` counts
    every degree-d number regardless of its root location.
    """
    _check_kd(k, d)
    hs = [parse_bound(h) for h in heights]
    ms = [_power_bound(h, d) for h in hs]
    top = max(ms, key=cmp_to_key(_cmp_bounds))
    q = _Query(d, k, top, True, True, "thresholds", tuple(ms))
    merged = _run(q, threads)
    return [d * merged.get(i, 0) for i in range(len(ms))]


def _cmp_bounds(a, b) -> int:
    x = a if isinstance(a, RealAlgebraic) else RealAlgebraic.from_rational(a)
    y = b if isinstance(b, RealAlgebraic) else RealAlgebraic.from_rational(b)
    return compare(x, y)


def count_algebraic(d: int, Hmax, threads: int | None = None) -> int:
    """Number of degree-d algebraic numbers with H <= Hmax (all k together)."""
    return cumulative_counts(None, d, [Hmax], threads)[0]


# ---------------------------------------------------------------------------
# slopes


def fit_slope(points: Sequence[tuple[float, int]]) -> SlopeEstimate:
    """Least-squares line through (log x, log count)."""
    pts = [(float(x), int(y)) for x, y in points if float(x) > 1 and int(y) >= 1]
    if len(pts) < 2 or len({x for x, _ in pts}) < 2:
        raise ValueError("need at least 2 usable points (x > 1, count >= 1)")
    lx = np.log([x for x, _ in pts])
    ly = np.log([y for _, y in pts])
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = ly - (slope * lx + intercept)
    return SlopeEstimate(pts, float(slope), float(intercept), float(np.sqrt(np.mean(resid**2))))


def slope_window(points: Sequence[tuple[float, int]], window: str = "upper-half"):
    """Select points for fitting: all, or those in the upper half of the log-x range."""
    if window == "all":
        return list(points)
    if window != "upper-half":
        raise ValueError(f"unknown slope window {window!r}")
    xs = [math.log(float(x)) for x, _ in points if float(x) > 1]
    if not xs:
        return []
    mid = (min(xs) + max(xs)) / 2
    return [(x, y) for x, y in points if float(x) > 1 and math.log(float(x)) >= mid]

