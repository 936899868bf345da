"""Batched Mahler-measure bounds by Graeffe root squaring.

Each Graeffe step replaces p by q with q(z^2) = (-1)^d p(z) p(-z), squaring
every root and the Mahler measure.  After n steps the cheap bounds

    max_i |b_i| / binom(d, i)  <=  M(b)  <=  ||b||_2

pin M(p) = M(b)^(1/2^n) down to a factor (d+1)^(1/2^(n+1)).  Rounding error
is carried alongside every coefficient so the lower bound stays a true lower
bound; the census only uses it to discard rows.

Rows are int64 coefficient vectors, constant term first.  Two backends:
numba (compiled) and numpy (vectorized over rows); ``HEIGHT_CENSUS_KERNEL``
selects one, defaulting to numba when it imports.
"""

from __future__ import annotations

import math
import os

import numpy as np

try:
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a hard dependency in practice
    HAVE_NUMBA = False

DEFAULT_STEPS = 6
_U = 2.0**-53


def _binom_row(d: int) -> np.ndarray:
    return np.array([math.comb(d, i) for i in range(d + 1)], dtype=np.float64)


# ---------------------------------------------------------------------------
# numpy backend


def graeffe_log_bounds_numpy(rows: np.ndarray, steps: int = DEFAULT_STEPS) -> np.ndarray:
    """(n, 2) array of [log lower, log upper] bounds on M for each row."""
    rows = np.ascontiguousarray(rows, dtype=np.int64)
    n, w = rows.shape
    d = w - 1
    out = np.empty((n, 2))
    if n == 0:
        return out
    a = rows.astype(np.float64)
    abs0 = np.abs(a)
    lead0 = np.maximum(abs0[:, d], abs0[:, 0])
    l2_0 = np.sqrt((a * a).sum(axis=1))
    e = np.zeros_like(a)
    shift = np.zeros(n)  # log2 of the scale factor removed so far
    gamma = 4.0 * (d + 3) * _U
    signs = np.array([(-1.0) ** j for j in range(d + 1)])
    for _ in range(steps):
        b = np.zeros_like(a)
        eb = np.zeros_like(a)
        absa = np.abs(a)
        for m in range(d + 1):
            lo = max(0, 2 * m - d)
            hi = min(d, 2 * m)
            acc = np.zeros(n)
            err = np.zeros(n)
            mag = np.zeros(n)
            for i in range(lo, hi + 1):
                j = 2 * m - i
                acc += signs[j] * a[:, i] * a[:, j]
                err += absa[:, i] * e[:, j] + e[:, i] * absa[:, j] + e[:, i] * e[:, j]
                mag += (absa[:, i] + e[:, i]) * (absa[:, j] + e[:, j])
            b[:, m] = acc if d % 2 == 0 else -acc
            eb[:, m] = err + gamma * mag + 1e-300
        top = np.max(np.abs(b) + eb, axis=1)
        k = np.where(top > 0, np.floor(np.log2(np.maximum(top, 1e-300))), 0.0)
        scale = np.exp2(-k)[:, None]
        a = b * scale
        e = eb * scale * (1 + 4 * _U)
        shift = 2 * shift + k
    binom = _binom_row(d)
    lower = np.max((np.abs(a) - e) / binom, axis=1)
    upper = np.sqrt(((np.abs(a) + e) ** 2).sum(axis=1)) * (1 + 4 * d * _U)
    scale_log = shift * math.log(2.0)
    den = 2.0**steps
    with np.errstate(divide="ignore"):
        lo_log = np.where(lower > 0, (np.log(np.maximum(lower, 1e-300)) + scale_log) / den, -np.inf)
    up_log = (np.log(upper) + scale_log) / den
    out[:, 0] = np.maximum(lo_log, np.log(lead0))
    out[:, 1] = np.minimum(up_log, np.log(l2_0) * (1 + 1e-15))
    return out


# ---------------------------------------------------------------------------
# numba backend

if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _graeffe_rows_numba(rows, steps, binom, out):  # pragma: no cover - compiled
        n, w = rows.shape
        d = w - 1
        gamma = 4.0 * (d + 3) * _U
        a = np.empty(w)
        e = np.empty(w)
        b = np.empty(w)
        eb = np.empty(w)
        for r in range(n):
            lead0 = 0.0
            l2 = 0.0
            for i in range(w):
                a[i] = float(rows[r, i])
                e[i] = 0.0
                l2 += a[i] * a[i]
            lead0 = max(abs(a[0]), abs(a[d]))
            l2 = math.sqrt(l2)
            shift = 0.0
            for _ in range(steps):
                top = 0.0
                for m in range(w):
                    lo = max(0, 2 * m - d)
                    hi = min(d, 2 * m)
                    acc = 0.0
                    err = 0.0
                    mag = 0.0
                    for i in range(lo, hi + 1):
                        j = 2 * m - i
                        s = 1.0 if j % 2 == 0 else -1.0
                        acc += s * a[i] * a[j]
                        ai = abs(a[i])
                        aj = abs(a[j])
                        err += ai * e[j] + e[i] * aj + e[i] * e[j]
                        mag += (ai + e[i]) * (aj + e[j])
                    b[m] = acc if d % 2 == 0 else -acc
                    eb[m] = err + gamma * mag + 1e-300
                    t = abs(b[m]) + eb[m]
                    if t > top:
                        top = t
                k = math.floor(math.log2(top)) if top > 0 else 0.0
                sc = 2.0 ** (-k)
                for m in range(w):
                    a[m] = b[m] * sc
                    e[m] = eb[m] * sc * (1 + 4 * _U)
                shift = 2 * shift + k
            lower = -1.0
            upper = 0.0
            for i in range(w):
                v = (abs(a[i]) - e[i]) / binom[i]
                if v > lower:
                    lower = v
                u = abs(a[i]) + e[i]
                upper += u * u
            upper = math.sqrt(upper) * (1 + 4 * d * _U)
            scale_log = shift * math.log(2.0)
            den = 2.0**steps
            lo_log = (math.log(lower) + scale_log) / den if lower > 0 else -np.inf
            up_log = (math.log(upper) + scale_log) / den
            out[r, 0] = max(lo_log, math.log(lead0))
            out[r, 1] = min(up_log, math.log(l2) * (1 + 1e-15))

    def graeffe_log_bounds_numba(rows: np.ndarray, steps: int = DEFAULT_STEPS) -> np.ndarray:
        rows = np.ascontiguousarray(rows, dtype=np.int64)
        out = np.empty((rows.shape[0], 2))
        if rows.shape[0]:
            _graeffe_rows_numba(rows, steps, _binom_row(rows.shape[1] - 1), out)
        return out

else:  # pragma: no cover
    graeffe_log_bounds_numba = None


def backend_name() -> str:
    want = os.environ.get("HEIGHT_CENSUS_KERNEL", "numba").strip().lower()
    if want not in ("numba", "numpy"):
        raise ValueError(f"HEIGHT_CENSUS_KERNEL must be numba or numpy, not {want!r}")
    if want == "numba" and not HAVE_NUMBA:
        return "numpy"
    return want


def graeffe_log_bounds(rows: np.ndarray, steps: int = DEFAULT_STEPS) -> np.ndarray:
    if backend_name() == "numba":
        return graeffe_log_bounds_numba(rows, steps)
    return graeffe_log_bounds_numpy(rows, steps)


def may_have_measure_at_most(rows: np.ndarray, mmax: float, steps: int = DEFAULT_STEPS) -> np.ndarray:
    """Boolean mask: False only where M(row) > mmax is certain."""
    bounds = graeffe_log_bounds(rows, steps)
    return bounds[:, 0] <= math.log(mmax) + 1e-9
