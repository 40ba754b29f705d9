"""Numeric functional-equation machinery for elliptic L-functions.

The sign of the functional equation is recovered from the theta-style sum
theta(t) = sum_n a_n exp(-2 pi n t / sqrt(N)), which transforms as
theta(1/t) = w t^2 theta(t).  Evaluating at a pair of reciprocal points
gives two candidate-sign residuals; the decision is accepted only when
the residuals are separated by a safe multiple of the truncation bound.

Also provides the rapidly convergent central-value series
    L(E,1)  = 2 sum a_n/n exp(-2 pi n / sqrt(N))        (when w = +1)
    L'(E,1) = 2 sum a_n/n E_1(2 pi n / sqrt(N))         (when w = -1)
used to attach analytic-rank labels to reference datasets.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.special import exp1

from .curves import CurveModel, Inconclusive, RootNumberLabel, ap_bad, ap_good
from .arith import primes_upto


def ap_vector(curve: CurveModel, X: int) -> tuple[np.ndarray, np.ndarray]:
    """(primes <= X, a_p) for a model minimal at its bad primes."""
    ps = primes_upto(X)
    out = np.empty(len(ps), dtype=np.int64)
    for i, p in enumerate(ps):
        p = int(p)
        out[i] = ap_bad(curve, p) if curve.disc % p == 0 else ap_good(curve, p)
    return ps, out


def an_sequence(curve: CurveModel, M: int, conductor: int) -> np.ndarray:
    """Dirichlet coefficients a_1..a_M (index 0 unused) of L(E, s).

    Built multiplicatively from prime data: good primes follow
    a_{p^{k+1}} = a_p a_{p^k} - p a_{p^{k-1}}, bad primes give a_p^k.
    """
    ps, aps = ap_vector(curve, M)
    a = np.zeros(M + 1, dtype=np.float64)
    a[1] = 1.0
    # smallest prime factor sieve
    spf = np.zeros(M + 1, dtype=np.int64)
    for p in ps[::-1]:
        p = int(p)
        spf[p::p] = p
    ap_of = {int(p): float(v) for p, v in zip(ps, aps)}
    ppow: dict[int, float] = {}
    for p, apv in ap_of.items():
        good = conductor % p != 0
        prev, cur = 1.0, apv
        q = p
        while q <= M:
            ppow[q] = cur
            if good:
                prev, cur = cur, apv * cur - p * prev
            else:
                cur = cur * apv
            q *= p
    for n in range(2, M + 1):
        p = int(spf[n])
        q = p
        m = n // p
        while m % p == 0:
            m //= p
            q *= p
        if m == 1:
            a[n] = ppow[q]
        else:
            a[n] = a[m] * ppow[q]
    return a


def theta_sum(an: np.ndarray, N: int, t: float) -> float:
    n = np.arange(1, len(an), dtype=np.float64)
    return float(np.dot(an[1:], np.exp(-2.0 * math.pi * n * t / math.sqrt(N))))


def _tail_bound(N: int, t: float, M: int) -> float:
    """Upper bound for |sum_{n>M} a_n e^{-2 pi n t / sqrt(N)}| using |a_n| <= n."""
    c = 2.0 * math.pi * t / math.sqrt(N)
    if c * M > 700.0:
        return 0.0
    return math.exp(-c * M) * (M + 1.0 + 1.0 / c) / c


def root_number_numeric(
    curve: CurveModel,
    conductor: int,
    scale: float = 1.25,
    depth: float = 8.0,
) -> RootNumberLabel:
    """Functional-equation sign by reciprocal-point theta comparison.

    Raises Inconclusive unless the wrong-sign residual exceeds ten times
    the truncation bound while the right-sign residual sits below it.
    """
    N = conductor
    M = int(math.ceil(depth * math.sqrt(N))) + 16
    an = an_sequence(curve, M, N)
    t = scale
    th_hi = theta_sum(an, N, t)
    th_lo = theta_sum(an, N, 1.0 / t)
    # theta(1/t) = w t^2 theta(t): residuals for the two sign hypotheses
    r_plus = abs(th_lo - t * t * th_hi)
    r_minus = abs(th_lo + t * t * th_hi)
    bound = _tail_bound(N, 1.0 / t, M) + t * t * _tail_bound(N, t, M)
    bound = max(bound, 1e-12 * (abs(th_lo) + t * t * abs(th_hi)))
    lo, hi = sorted((r_plus, r_minus))
    if lo > bound or hi < 10.0 * bound:
        raise Inconclusive(
            f"sign residuals {r_plus:.3e}/{r_minus:.3e} not separated "
            f"(bound {bound:.3e})"
        )
    return RootNumberLabel(1 if r_plus < r_minus else -1, "numeric")


def l_value(curve: CurveModel, conductor: int, depth: float = 8.0) -> float:
    """L(E, 1) by the exponential series; meaningful when w = +1."""
    N = conductor
    M = int(math.ceil(depth * math.sqrt(N))) + 16
    an = an_sequence(curve, M, N)
    n = np.arange(1, M + 1, dtype=np.float64)
    return float(2.0 * np.dot(an[1:] / n, np.exp(-2.0 * math.pi * n / math.sqrt(N))))


def l_derivative(curve: CurveModel, conductor: int, depth: float = 8.0) -> float:
    """L'(E, 1) by the exponential-integral series; meaningful when w = -1."""
    N = conductor
    M = int(math.ceil(depth * math.sqrt(N))) + 16
    an = an_sequence(curve, M, N)
    n = np.arange(1, M + 1, dtype=np.float64)
    return float(2.0 * np.dot(an[1:] / n, exp1(2.0 * math.pi * n / math.sqrt(N))))


def analytic_rank_label(
    curve: CurveModel,
    conductor: int,
    w: int,
    nonzero_floor: float = 1e-3,
    zero_ceiling: float = 1e-6,
) -> int | None:
    """Analytic rank in {0, 1, 2, 3}, or None in the ambiguous band.

    Ranks 2/3 are inferred from a vanishing central value/derivative with
    the parity pinned by w; at reference-dataset conductors ranks above 3
    do not occur.
    """
    if w == 1:
        v = abs(l_value(curve, conductor))
        if v >= nonzero_floor:
            return 0
        if v <= zero_ceiling:
            return 2
        return None
    v = abs(l_derivative(curve, conductor))
    if v >= nonzero_floor:
        return 1
    if v <= zero_ceiling:
        return 3
    return None
