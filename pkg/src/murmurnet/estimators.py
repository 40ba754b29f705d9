"""Analytic rank estimators and diagnostics.

The Mestre-Nagao sum (1/log X) sum_{p <= X, p not| N} a_p log p / p tends
to -r + 1/2; the explicit-formula sum S(Y) tends to the analytic rank and
carries a fully evaluated archimedean term.  The probabilistic variance
diagnostics and the conductor-relative prime window back the negative
experiment on murmuration-peak features.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.special import digamma

from .arith import primes_in_range, primes_upto
from .curves import CurveModel, ap_any
from .lfunc import LFunctionRecord, MissingCoefficients


class QuadratureFailure(ArithmeticError):
    """The archimedean quadrature error exceeded its budget."""


class InsufficientData(ValueError):
    pass


class EmptyWindow(ValueError):
    pass


@dataclass(frozen=True)
class EstimatorResult:
    value: float
    cutoff: float
    terms_used: int
    error_budget: float


def c_prime_power(curve: CurveModel, p: int, k: int, ap: int | None = None) -> float:
    """c_{p^k} = alpha_p^k + beta_p^k at good p (by the trace recurrence),
    a_p^k at bad p."""
    if k < 1:
        raise ValueError("k >= 1 required")
    a = ap_any(curve, p) if ap is None else ap
    if curve.disc % p == 0:
        return float(a**k)
    prev, cur = 2.0, float(a)  # c_{p^0} = 2, c_{p^1} = a_p
    for _ in range(k - 1):
        prev, cur = cur, a * cur - p * prev
    return cur


def mestre_nagao(record: LFunctionRecord, X: float) -> EstimatorResult:
    """(1/log X) sum_{p <= X, p coprime to N} a_p log p / p."""
    if record.degree != 2:
        raise ValueError("degree-2 record required")
    if X < 2:
        return EstimatorResult(0.0, X, 0, 0.0)
    if not record.primes.size or record.primes[-1] < int(X):
        nxt = primes_in_range(int(record.primes[-1]) + 1 if record.primes.size else 2, int(X))
        if nxt.size:
            raise MissingCoefficients(int(nxt[0]))
    sel = record.primes <= X
    ps = record.primes[sel].astype(np.float64)
    vals = record.values[sel]
    good = np.array([record.conductor % int(p) != 0 for p in record.primes[sel]])
    ps, vals = ps[good], vals[good]
    total = float(np.sum(vals * np.log(ps) / ps) / math.log(X))
    return EstimatorResult(total, X, int(ps.size), 0.0)


def digamma_fejer_integral(Y: float, tail_tol: float = 1e-4) -> tuple[float, float]:
    """(1/pi) Re int psi(1+it) (sin(pi Y t)/(pi Y t))^2 dt, by adaptive
    quadrature with an explicit tail bound.

    Returns (value, error budget).  The integrand is even; [0, 1/Y] is
    integrated directly and [1/Y, T] via the cos-weight decomposition
    sin^2 = (1 - cos 2 pi Y t)/2.
    """

    def psi_re(t):
        return digamma(1.0 + 1j * t).real

    # choose T so that int_T^inf (log(1+t)+2)/(pi Y t)^2 dt < tail_tol
    T = 64.0
    def tail(T):
        return (2.0 / math.pi) * (math.log(1.0 + T) + 3.0) / ((math.pi * Y) ** 2 * T)
    while tail(T) > tail_tol:
        T *= 2.0

    def fejer(t):
        x = math.pi * Y * t
        return (math.sin(x) / x) ** 2 if x != 0 else 1.0

    v1, e1 = quad(lambda t: psi_re(t) * fejer(t), 0.0, 1.0 / Y, limit=200)
    g = lambda t: psi_re(t) / (math.pi * Y * t) ** 2
    v2, e2 = quad(g, 1.0 / Y, T, limit=400)
    v3, e3 = quad(g, 1.0 / Y, T, weight="cos", wvar=2.0 * math.pi * Y, limit=max(400, int(4 * Y * T)))
    half = v2 / 2.0 - v3 / 2.0
    value = (2.0 / math.pi) * (v1 + half)
    budget = (2.0 / math.pi) * (e1 + (e2 + e3) / 2.0) + tail(T)
    if e1 + e2 + e3 > 1e-3:
        raise QuadratureFailure(f"quadrature error {e1+e2+e3:.2e}")
    return value, budget


def bober_sum(
    curve: CurveModel,
    Y: float,
    conductor: int,
    ap: dict[int, int] | None = None,
    tail_tol: float = 1e-4,
) -> EstimatorResult:
    """The explicit-formula sum S(Y); converges to the analytic rank.

    All four terms are evaluated: the conductor and 2-pi logs, the
    prime-power double sum over p^k <= exp(2 pi Y) with the triangle
    weight 1 - k log p / (2 pi Y) (the weight's support pins the depth:
    a ceiling would drag in a non-cancelling negative-weight tail), and
    the archimedean digamma integral.
    """
    twopiY = 2.0 * math.pi * Y
    X = math.exp(twopiY)
    ps = primes_upto(int(X))
    terms = 0
    s = 0.0
    for p in ps:
        p = int(p)
        a = ap[p] if ap is not None else ap_any(curve, p)
        logp = math.log(p)
        kmax = int(twopiY / logp)
        good = conductor % p != 0
        prev, cur = 2.0, float(a)
        for k in range(1, kmax + 1):
            s += cur * logp / p ** (k / 2.0) * (1.0 - k * logp / twopiY)
            terms += 1
            if good:
                prev, cur = cur, a * cur - p * prev
            else:
                cur = cur * a
    integral, budget = digamma_fejer_integral(Y, tail_tol)
    value = (
        math.log(conductor) / twopiY
        - math.log(2.0 * math.pi) / (math.pi * Y)
        - s / (math.pi * Y)
        + integral
    )
    return EstimatorResult(value, Y, terms, budget)


def heuristic_deficit(
    curve: CurveModel,
    X: float,
    conductor: int,
    rank: int | None = None,
    ap: dict[int, int] | None = None,
) -> tuple[EstimatorResult, float | None]:
    """LHS of the truncated explicit-formula identity
    2 sum_{p<=X} sum_k c_{p^k} log p / p^{k/2} (1 - k log p / log X),
    paired with the affine prediction -r log X + log N when r is known."""
    logX = math.log(X)
    ps = primes_upto(int(X))
    s = 0.0
    terms = 0
    for p in ps:
        p = int(p)
        a = ap[p] if ap is not None else ap_any(curve, p)
        logp = math.log(p)
        kmax = int(logX / logp)  # triangle-weight support p^k <= X
        good = conductor % p != 0
        prev, cur = 2.0, float(a)
        for k in range(1, kmax + 1):
            s += cur * logp / p ** (k / 2.0) * (1.0 - k * logp / logX)
            terms += 1
            if good:
                prev, cur = cur, a * cur - p * prev
            else:
                cur = cur * a
    value = 2.0 * s
    predicted = None if rank is None else -rank * logX + math.log(conductor)
    return EstimatorResult(value, X, terms, 0.0), predicted


def variance_diagnostics(
    records: list[LFunctionRecord],
    scheme: str,
    x_grid: list[float] | None = None,
    min_records: int = 1000,
) -> list[tuple[float, float]]:
    """Empirical cross-curve variances of truncated Mestre-Nagao sums.

    dyadic_logp_over_p:  S_X = sum_{X < p <= 2X} a_p log p / p
    p_range_over_p:      S_X = (1/log X) sum_{X < p <= X^2} a_p log p / p
    Returns [(X, sample variance)].
    """
    if scheme not in ("dyadic_logp_over_p", "p_range_over_p"):
        raise ValueError(f"unknown scheme {scheme}")
    if len(records) < min_records:
        raise InsufficientData(f"need >= {min_records} records, got {len(records)}")
    cutoff = min(int(r.primes[-1]) for r in records)
    if x_grid is None:
        x_grid = []
        X = 100.0
        while (2 * X if scheme == "dyadic_logp_over_p" else X * X) <= cutoff:
            x_grid.append(X)
            X *= 10.0
    out = []
    for X in x_grid:
        hi = 2 * X if scheme == "dyadic_logp_over_p" else X * X
        if hi > cutoff:
            raise InsufficientData(f"range ({X}, {hi}] exceeds shared cutoff {cutoff}")
        vals = []
        for rec in records:
            sel = (rec.primes > X) & (rec.primes <= hi)
            ps = rec.primes[sel].astype(np.float64)
            good = np.array([rec.conductor % int(p) != 0 for p in rec.primes[sel]])
            s = float(np.sum(rec.values[sel][good] * np.log(ps[good]) / ps[good]))
            if scheme == "p_range_over_p":
                s /= math.log(X)
            vals.append(s)
        out.append((X, float(np.var(vals, ddof=1))))
    return out


def window_primes(N: int, width_factor: float = 1.0) -> np.ndarray:
    """Primes in [N/25, N/25 + width_factor * log(N)^3], the window around
    the first murmuration peak."""
    if N < 100:
        raise ValueError("N >= 100 required")
    lo = N // 25
    width = int(width_factor * math.log(N) ** 3)
    ps = primes_in_range(lo, lo + width)
    if not ps.size:
        raise EmptyWindow(f"no primes in [{lo}, {lo + width}]")
    return ps
