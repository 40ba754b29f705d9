"""Dirichlet-coefficient streams for degree 2, 3 and 4 L-functions.

Degree 2 records carry the raw integer Frobenius traces of an elliptic
curve.  Degree 3 records come from multiplying by a primitive quadratic
character; the p-coefficient is chi(p) + a_p / sqrt(p) at every prime.
Degree 4 records come from genus-2 curves, with a_{1,p} = #C(F_p) - p - 1
at good odd primes and 0 at bad primes; their conductors, root numbers
and ranks are ingested, never computed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .arith import is_squarefree, kronecker, primes_upto
from .curves import BadPrime, CurveModel, ap_bad, ap_good


class MissingCoefficients(KeyError):
    """A required prime coefficient is absent from the record."""


@dataclass(frozen=True)
class LFunctionRecord:
    """Prime-indexed coefficients of one L-function plus its labels."""

    degree: int
    conductor: int
    primes: np.ndarray  # ascending int64
    values: np.ndarray  # float64, aligned with primes
    root_number: int | None = None
    rank: int | None = None
    label: str = ""

    def __post_init__(self):
        if self.degree not in (2, 3, 4):
            raise ValueError("degree must be 2, 3 or 4")
        if self.conductor < 1:
            raise ValueError("conductor must be positive")
        if len(self.primes) != len(self.values):
            raise ValueError("primes/values length mismatch")
        if self.root_number is not None and self.root_number not in (-1, 1):
            raise ValueError("root number must be +-1")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("coefficients must be finite")

    def coeffs(self) -> dict[int, float]:
        return {int(p): float(v) for p, v in zip(self.primes, self.values)}

    def coeff(self, p: int) -> float:
        i = int(np.searchsorted(self.primes, p))
        if i >= len(self.primes) or self.primes[i] != p:
            raise MissingCoefficients(p)
        return float(self.values[i])

    def check_degree_bounds(self) -> bool:
        """Hasse/Weil-type bounds appropriate to the degree."""
        p = self.primes.astype(np.float64)
        v = self.values
        if self.degree == 2:
            bad = np.array(
                [self.conductor % int(q) == 0 for q in self.primes], dtype=bool
            )
            ok_good = np.abs(v[~bad]) <= 2.0 * np.sqrt(p[~bad]) + 1e-9
            ok_bad = np.isin(v[bad], (-1.0, 0.0, 1.0))
            return bool(ok_good.all() and ok_bad.all())
        if self.degree == 3:
            # |chi(p) + a_p/sqrt(p)| <= 1 + 2 by Hasse
            return bool(np.all(np.abs(v) <= 3.0 + 1e-9))
        return bool(np.all(np.abs(v) <= 4.0 * np.sqrt(p) + 1e-9))


@dataclass(frozen=True)
class QuadraticCharacter:
    """Primitive quadratic character attached to a fundamental discriminant."""

    D: int

    def __post_init__(self):
        if not is_fundamental_discriminant(self.D):
            raise ValueError(f"{self.D} is not a fundamental discriminant")

    @property
    def conductor(self) -> int:
        return abs(self.D)


def is_fundamental_discriminant(D: int) -> bool:
    if D == 1:
        return True
    if D == 0:
        return False
    if D % 4 == 1:
        return is_squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def fundamental_discriminants(limit: int) -> list[int]:
    """All fundamental discriminants D != 1 with |D| <= limit."""
    return [
        D
        for D in range(-limit, limit + 1)
        if D not in (0, 1) and is_fundamental_discriminant(D)
    ]


def character_value(chi: QuadraticCharacter, p: int) -> int:
    return kronecker(chi.D, p)


def degree2_stream(
    curve: CurveModel,
    X: int,
    conductor: int,
    root_number: int | None = None,
    rank: int | None = None,
    label: str = "",
) -> LFunctionRecord:
    """Raw integer a_p for all p <= X (good and bad) of a minimal model."""
    ps = primes_upto(X)
    vals = np.empty(len(ps), dtype=np.float64)
    for i, p in enumerate(ps):
        p = int(p)
        vals[i] = ap_bad(curve, p) if curve.disc % p == 0 else ap_good(curve, p)
    return LFunctionRecord(2, conductor, ps, vals, root_number, rank, label)


def degree3_stream(
    record: LFunctionRecord, chi: QuadraticCharacter
) -> LFunctionRecord:
    """Twisted-product degree 3 coefficients chi(p) + a_p / sqrt(p).

    Conductor multiplies; the root number and rank carry over from the
    elliptic record.
    """
    if record.degree != 2:
        raise ValueError("degree-2 input required")
    ps = record.primes
    chis = np.array([character_value(chi, int(p)) for p in ps], dtype=np.float64)
    vals = chis + record.values / np.sqrt(ps.astype(np.float64))
    return LFunctionRecord(
        3,
        chi.conductor * record.conductor,
        ps,
        vals,
        record.root_number,
        record.rank,
        f"{record.label}x{chi.D}" if record.label else f"chi{chi.D}",
    )


# ---------------------------------------------------------------------------
# genus 2


def _poly_deg(coeffs: list[int]) -> int:
    d = -1
    for i, c in enumerate(coeffs):
        if c != 0:
            d = i
    return d


def _poly_eval_mod(coeffs: list[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def _resultant(f: list[int], g: list[int]) -> int:
    """Integer resultant by fraction-free (Bareiss) elimination of the
    Sylvester matrix."""
    import fractions

    n, m = _poly_deg(f), _poly_deg(g)
    if n < 0 or m < 0:
        return 0
    size = n + m
    rows = []
    fr = list(reversed(f[: n + 1]))
    gr = list(reversed(g[: m + 1]))
    for i in range(m):
        rows.append([0] * i + fr + [0] * (size - n - 1 - i))
    for i in range(n):
        rows.append([0] * i + gr + [0] * (size - m - 1 - i))
    mat = [[fractions.Fraction(x) for x in row] for row in rows]
    det = fractions.Fraction(1)
    for col in range(size):
        piv = None
        for r in range(col, size):
            if mat[r][col] != 0:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        det *= mat[col][col]
        inv = mat[col][col]
        for r in range(col + 1, size):
            factor = mat[r][col] / inv
            for c in range(col, size):
                mat[r][c] -= factor * mat[col][c]
    assert det.denominator == 1
    return int(det)


def _poly_disc(f: list[int]) -> int:
    d = _poly_deg(f)
    fp = [i * c for i, c in enumerate(f)][1:]
    res = _resultant(f, fp)
    lc = f[d]
    # disc = (-1)^{d(d-1)/2} res(f, f') / lc
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    assert res % lc == 0
    return sign * (res // lc)


@dataclass(frozen=True)
class Genus2Curve:
    """y^2 + h(x) y = f(x) with deg f <= 6, deg h <= 3, plus ingested labels."""

    f: tuple[int, ...]
    h: tuple[int, ...]
    conductor: int
    root_number: int | None = None
    rank: int | None = None
    label: str = ""
    bad_disc: int = field(init=False)

    def __post_init__(self):
        if _poly_deg(list(self.f)) > 6 or _poly_deg(list(self.h)) > 3:
            raise ValueError("degree constraints: deg f <= 6, deg h <= 3")
        g = [0] * 7
        for i, c in enumerate(self.f):
            g[i] += 4 * c
        for i, ci in enumerate(self.h):
            for j, cj in enumerate(self.h):
                g[i + j] += ci * cj
        dg = _poly_deg(g)
        if dg < 5:
            raise ValueError("4f + h^2 must have degree 5 or 6 (genus 2)")
        disc = _poly_disc(g)
        if disc == 0:
            raise ValueError("singular genus-2 model")
        object.__setattr__(self, "bad_disc", 2 * g[dg] * disc)

    def sextic(self) -> list[int]:
        g = [0] * 7
        for i, c in enumerate(self.f):
            g[i] += 4 * c
        for i, ci in enumerate(self.h):
            for j, cj in enumerate(self.h):
                g[i + j] += ci * cj
        return g

    def is_good_prime(self, p: int) -> bool:
        return p > 2 and self.bad_disc % p != 0


def genus2_count(curve: Genus2Curve, p: int) -> int:
    """#C(F_p) by direct solution counting over x, for good odd p.

    Affine fibers contribute 1 + chi(h(x)^2 + 4 f(x)); the points at
    infinity are the roots of T^2 + h3 T - f6.
    """
    if not curve.is_good_prime(p):
        raise BadPrime(f"p = {p} is not a good odd prime for this curve")
    g = curve.sextic()
    count = 0
    for x in range(p):
        d = _poly_eval_mod(g, x, p)
        count += 1 + kronecker(d, p)
    h3 = curve.h[3] if len(curve.h) > 3 else 0
    f6 = curve.f[6] if len(curve.f) > 6 else 0
    dinf = (h3 * h3 + 4 * f6) % p
    count += 1 + kronecker(dinf, p)
    return count


def genus2_stream(curve: Genus2Curve, X: int) -> LFunctionRecord:
    """Degree-4 record with a_{1,p} = #C(F_p) - p - 1, zero at bad primes."""
    ps = primes_upto(X)
    vals = np.zeros(len(ps), dtype=np.float64)
    for i, p in enumerate(ps):
        p = int(p)
        if curve.is_good_prime(p):
            vals[i] = genus2_count(curve, p) - p - 1
    return LFunctionRecord(
        4,
        curve.conductor,
        ps,
        vals,
        curve.root_number,
        curve.rank,
        curve.label,
    )
