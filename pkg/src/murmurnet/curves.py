"""Elliptic curves over Q: invariants, Frobenius traces, reduction types,
conductors, and root numbers.

Frobenius traces for p > 3 come from the quadratic-character sum over the
completed-square cubic, which is O(p) with a small constant; p = 2, 3 are
counted naively on the full Weierstrass equation.  A baby-step giant-step
counter is provided for primes far beyond the character-sum range.

Root numbers are computed as the negated product of local root numbers
over the bad primes.  Local factors at odd multiplicative primes and at
additive primes >= 5 follow the classical residue formulas; the additive
cases at p = 2 and 3 use valuation-and-residue keyed tables that were
calibrated against the functional-equation sign search in
:mod:`murmurnet.lseries` and are cross-checked by the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .arith import Factorization, factorize, kronecker, primes_upto, sqrt_mod
from . import tate


class SingularCurve(ValueError):
    """The Weierstrass data has discriminant zero."""


class BadPrime(ValueError):
    """A good-reduction operation was invoked at a bad prime."""


class UnsupportedLocalCase(ValueError):
    """No table entry for this additive local configuration."""


class Inconclusive(ArithmeticError):
    """The numeric sign search could not separate the two candidates."""


class NotApplicable(ValueError):
    """Identity invoked outside its stated domain."""


@dataclass(frozen=True)
class CurveModel:
    """Integral Weierstrass data y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
    with the derived b/c invariants and discriminant."""

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    c4: int = field(init=False)
    c6: int = field(init=False)
    disc: int = field(init=False)

    def __post_init__(self):
        c4, c6, disc = tate.c_invariants(self.coeffs())
        if disc == 0:
            raise SingularCurve(f"singular Weierstrass data {self.coeffs()}")
        object.__setattr__(self, "c4", c4)
        object.__setattr__(self, "c6", c6)
        object.__setattr__(self, "disc", disc)

    @classmethod
    def short(cls, A: int, B: int) -> "CurveModel":
        return cls(0, 0, 0, A, B)

    @classmethod
    def from_c_invariants(cls, c4: int, c6: int) -> "CurveModel | None":
        """Integral model with the given (c4, c6), or None if none exists.

        Searches the finitely many admissible b2 residues and verifies the
        reconstruction, so no Kraus-style case analysis is needed.
        """
        num = c4**3 - c6 * c6
        if num % 1728 or num == 0:
            return None
        for b2 in range(-24, 25):
            if (b2 * b2 - c4) % 24:
                continue
            b4 = (b2 * b2 - c4) // 24
            num6 = -(b2**3) + 36 * b2 * b4 - c6
            if num6 % 216:
                continue
            b6 = num6 // 216
            a1 = b2 & 1
            if (b2 - a1) % 4:
                continue
            a2 = (b2 - a1) // 4
            a3 = b6 & 1
            if (b6 - a3) % 4:
                continue
            a6 = (b6 - a3) // 4
            if (b4 - a1 * a3) % 2:
                continue
            a4 = (b4 - a1 * a3) // 2
            try:
                cand = cls(a1, a2, a3, a4, a6)
            except SingularCurve:
                return None
            if cand.c4 == c4 and cand.c6 == c6:
                return cand
        return None

    def coeffs(self) -> tate.Coeffs:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def b_invariants(self) -> tuple[int, int, int, int]:
        return tate.b_invariants(self.coeffs())


@dataclass(frozen=True)
class ReductionType:
    tag: str  # good | mult_split | mult_nonsplit | additive

    @property
    def is_good(self) -> bool:
        return self.tag == "good"

    @property
    def is_multiplicative(self) -> bool:
        return self.tag in ("mult_split", "mult_nonsplit")


@dataclass(frozen=True)
class RootNumberLabel:
    w: int  # -1 or +1
    method: str  # local_product | numeric | ingested

    def __post_init__(self):
        if self.w not in (-1, 1):
            raise ValueError("root number must be +-1")


def invariants(curve: CurveModel) -> tuple[int, int, int]:
    """(c4, c6, Delta); raises SingularCurve on Delta = 0 at construction."""
    return curve.c4, curve.c6, curve.disc


# ---------------------------------------------------------------------------
# point counting


try:
    from numba import njit as _njit

    @_njit(cache=True)
    def _charsum_fd(chi, p, c3, c2, c1, c0):  # pragma: no cover - jitted
        """sum_x chi(c3 x^3 + c2 x^2 + c1 x + c0 mod p) by cubic finite
        differences: no multiplications or divisions in the loop."""
        g = c0 % p
        d1 = (c3 + c2 + c1) % p          # g(1) - g(0)
        d2 = (6 * c3 + 2 * c2) % p       # second difference at 0
        d3 = (6 * c3) % p
        acc = 0
        for _ in range(p):
            acc += chi[g]
            g += d1
            if g >= p:
                g -= p
            d1 += d2
            if d1 >= p:
                d1 -= p
            d2 += d3
            if d2 >= p:
                d2 -= p
        return acc

    _HAVE_NUMBA = True
except Exception:  # pragma: no cover
    _HAVE_NUMBA = False


def _legendre_table_build(p: int) -> np.ndarray:
    chi = -np.ones(p, dtype=np.int8)
    xs = np.arange(p, dtype=np.int64)
    chi[(xs * xs) % p] = 1
    chi[0] = 0
    return chi


@lru_cache(maxsize=2048)
def _legendre_table_small(p: int) -> np.ndarray:
    return _legendre_table_build(p)


def _legendre_table(p: int) -> np.ndarray:
    """chi[v] = Legendre symbol (v|p) for v in [0, p), as int8.

    Only small tables are cached; large ones would hold gigabytes.
    """
    return _legendre_table_small(p) if p < 20000 else _legendre_table_build(p)


def _ap_naive_small(curve: CurveModel, p: int) -> int:
    """Count points on the full Weierstrass equation over F_p (small p)."""
    a1, a2, a3, a4, a6 = curve.coeffs()
    count = 1  # point at infinity
    for x in range(p):
        rhs = (x**3 + a2 * x * x + a4 * x + a6) % p
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y) % p == rhs:
                count += 1
    return p + 1 - count


def ap_good(curve: CurveModel, p: int) -> int:
    """Frobenius trace a_p = p + 1 - #E(F_p) at a good prime.

    For p > 3 this is the character sum -sum_x chi(4x^3 + b2 x^2 + 2 b4 x + b6);
    for p in {2, 3} the points are enumerated directly.  The Horner pass
    keeps everything below 2^63 and reduces once at the end.
    """
    if curve.disc % p == 0:
        raise BadPrime(f"p = {p} divides the discriminant")
    if p <= 3:
        return _ap_naive_small(curve, p)
    if p > 1_200_000:
        raise ValueError("character sum beyond 1.2e6 is wasteful; use ap_bsgs")
    b2, b4, b6, _ = curve.b_invariants()
    chi = _legendre_table(p)
    if _HAVE_NUMBA:
        return -int(_charsum_fd(chi, p, 4, b2 % p, (2 * b4) % p, b6 % p))
    xs = np.arange(p, dtype=np.int64)
    # 5 p^3 < 2^63 for p <= 1.2e6, so a single trailing reduction is exact
    g = (((4 * xs + b2 % p) * xs + (2 * b4) % p) * xs + b6 % p) % p
    return -int(chi[g].sum())


def ap_good_many(curve: CurveModel, primes: np.ndarray) -> np.ndarray:
    """a_p for an array of good primes (vectorized per prime)."""
    return np.array([ap_good(curve, int(p)) for p in primes], dtype=np.int64)


def ap_batch(curves: list[CurveModel], X: int) -> list[np.ndarray]:
    """Traces a_p for every curve at every p <= min(X, curve cutoff).

    Shares the prime loop and character tables across curves: per prime,
    x^2 and x^3 are computed once and each curve adds a fused Horner pass.
    Bad primes (p | disc) get the multiplicative/additive value.  Returns
    one int64 array per curve aligned with primes_upto(X).
    """
    ps = primes_upto(X)
    out = [np.empty(len(ps), dtype=np.int64) for _ in curves]
    binvs = [c.b_invariants() for c in curves]
    for i, p in enumerate(ps):
        p = int(p)
        if p <= 3:
            for j, c in enumerate(curves):
                out[j][i] = ap_bad(c, p) if c.disc % p == 0 else _ap_naive_small(c, p)
            continue
        chi = _legendre_table(p)
        if _HAVE_NUMBA:
            for j, c in enumerate(curves):
                if c.disc % p == 0:
                    out[j][i] = ap_bad(c, p)
                    continue
                b2, b4, b6, _ = binvs[j]
                out[j][i] = -int(
                    _charsum_fd(chi, p, 4, b2 % p, (2 * b4) % p, b6 % p)
                )
            continue
        xs = np.arange(p, dtype=np.int64)
        x2 = xs * xs % p
        x3 = x2 * xs % p
        g0 = 4 * x3  # < 4p, shared
        for j, c in enumerate(curves):
            if c.disc % p == 0:
                out[j][i] = ap_bad(c, p)
                continue
            b2, b4, b6, _ = binvs[j]
            g = (g0 + (b2 % p) * x2 + ((2 * b4) % p) * xs + b6 % p) % p
            out[j][i] = -int(chi[g].sum())
    return out


def reduction_type(curve: CurveModel, p: int) -> ReductionType:
    """Reduction type at p of a model assumed minimal at p."""
    if curve.disc % p != 0:
        return ReductionType("good")
    if curve.c4 % p != 0:
        if p == 2:
            split = (-curve.c6) % 8 == 1
        else:
            split = sqrt_mod(-curve.c6, p) is not None
        return ReductionType("mult_split" if split else "mult_nonsplit")
    return ReductionType("additive")


def ap_bad(curve: CurveModel, p: int) -> int:
    """a_p at a bad prime: +1 split, -1 nonsplit, 0 additive."""
    red = reduction_type(curve, p)
    if red.is_good:
        raise BadPrime(f"p = {p} is a good prime")
    return {"mult_split": 1, "mult_nonsplit": -1, "additive": 0}[red.tag]


def ap_any(curve: CurveModel, p: int) -> int:
    """a_p regardless of reduction (minimal model assumed)."""
    if curve.disc % p == 0:
        return ap_bad(curve, p)
    return ap_good(curve, p)


def conductor_exponent(curve: CurveModel, p: int) -> int:
    """nu_p of the conductor, by the full Tate loop at p."""
    return tate.tate_local(curve.coeffs(), p).f


def conductor(curve: CurveModel, disc_factorization: Factorization | None = None) -> int:
    """The conductor, as the product of p^{f_p} over p | Delta."""
    fac = disc_factorization or factorize(curve.disc)
    n = 1
    for p, _ in fac.factors:
        n *= p ** tate.tate_local(curve.coeffs(), p).f
    return n


def is_minimal(curve: CurveModel, disc_factorization: Factorization | None = None) -> bool:
    """True iff the model is minimal at every bad prime."""
    fac = disc_factorization or factorize(curve.disc)
    return all(
        tate.tate_local(curve.coeffs(), p).was_minimal for p, _ in fac.factors
    )


# ---------------------------------------------------------------------------
# local root numbers
#
# w = -prod_{p | Delta_min} w_p.  Multiplicative primes give w_p = -a_p.
# Additive primes >= 5 follow the residue-class formulas keyed on whether
# the reduction is potentially multiplicative (3 v(c4) < v(Delta)) and on
# v(Delta) mod 12 otherwise.  Additive p = 2, 3 use valuation/residue
# tables (murmurnet._local_tables) calibrated against the
# functional-equation sign search over every minimal curve with
# |Delta| <= 3*10^5 plus a dense slice of the short-form sampling family;
# the test suite re-verifies them.  Configurations outside the tables
# raise UnsupportedLocalCase.


def _vp(n: int, p: int) -> int:
    if n == 0:
        return 99
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _local_key(c4: int, c6: int, disc: int, p: int) -> tuple:
    """Valuation-and-residue key for the additive tables at p = 2, 3."""
    m = 32 if p == 2 else 9
    v4, v6, vd = _vp(c4, p), _vp(c6, p), _vp(disc, p)
    c4r = (c4 // p**v4) % m if c4 else 0
    c6r = (c6 // p**v6) % m if c6 else 0
    dr = (disc // p**vd) % m
    return (min(v4, 12), min(v6, 12), vd, c4r, c6r, dr)


def local_root_number(curve: CurveModel, p: int) -> int:
    """w_p of a model minimal at p; +1 at good primes."""
    res = tate.tate_local(curve.coeffs(), p)
    if not res.was_minimal:
        raise ValueError(f"model is not minimal at {p}")
    if res.kodaira == "I0":
        return 1
    if res.kodaira == "In":
        return -1 if res.split else 1
    # additive reduction
    c4, c6, disc = curve.c4, curve.c6, curve.disc
    if p >= 5:
        v4, vd = _vp(c4, p), _vp(disc, p)
        if 3 * v4 < vd:  # potentially multiplicative
            return kronecker(-1, p)
        e = vd % 12
        if e in (2, 6, 10):
            return kronecker(-1, p)
        if e in (3, 9):
            return kronecker(-2, p)
        if e in (4, 8):
            return kronecker(-3, p)
        raise UnsupportedLocalCase(f"additive p={p} with v(disc) = {vd}")
    from ._local_tables import W2_GROUPS, W3_GROUPS

    v4, v6, vd, c4r, c6r, dr = _local_key(c4, c6, disc, p)
    if p == 2 and (v6, vd) == (5, 4) and 6 <= v4:
        # deep-2-divisible c4 in the short-form family configuration:
        # residue-independent across v(c4) in [6, 13], see tools/
        return -1
    groups = W2_GROUPS if p == 2 else W3_GROUPS
    entry = groups.get((v4, v6, vd))
    if entry is None:
        raise UnsupportedLocalCase(f"no w_{p} group ({v4},{v6},{vd})")
    (m4, m6, md), table = entry
    wp = table.get((c4r % m4, c6r % m6, dr % md))
    if wp is None:
        raise UnsupportedLocalCase(
            f"no w_{p} entry in group ({v4},{v6},{vd}) for residues "
            f"({c4r},{c6r},{dr})"
        )
    return wp


def root_number(
    curve: CurveModel,
    disc_factorization: Factorization | None = None,
    fallback: bool = True,
) -> RootNumberLabel:
    """Global root number as the negated product of local root numbers.

    The model must be minimal.  When a 2-adic or 3-adic configuration is
    missing from the tables the numeric functional-equation search is
    used instead (RootNumberLabel.method reports which path ran), unless
    fallback=False, in which case UnsupportedLocalCase propagates.
    """
    fac = disc_factorization or factorize(curve.disc)
    w = -1
    try:
        for p, _ in fac.factors:
            w *= local_root_number(curve, p)
    except UnsupportedLocalCase:
        if not fallback:
            raise
        from .lseries import root_number_numeric

        return root_number_numeric(curve, conductor(curve, fac))
    return RootNumberLabel(w, "local_product")


def moebius_identity(curve: CurveModel) -> bool:
    """Check mu(|Delta|) = -w_E * kronecker(-c6, |Delta|) for a minimal
    model with odd squarefree discriminant."""
    from .arith import moebius

    fac = factorize(curve.disc)
    if curve.disc % 2 == 0 or not fac.is_squarefree():
        raise NotApplicable("requires odd squarefree minimal discriminant")
    w = root_number(curve, fac).w
    lhs = moebius(abs(curve.disc))
    rhs = -w * kronecker(-curve.c6, abs(curve.disc))
    return lhs == rhs


# ---------------------------------------------------------------------------
# baby-step giant-step trace for large p


def _ec_add(P, Q, A, p):
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if (y1 + y2) % p == 0:
            return None
        lam = (3 * x1 * x1 + A) * pow(2 * y1, -1, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
    x3 = (lam * lam - x1 - x2) % p
    return x3, (lam * (x1 - x3) - y1) % p


def _ec_mul(k, P, A, p):
    R = None
    while k:
        if k & 1:
            R = _ec_add(R, P, A, p)
        P = _ec_add(P, P, A, p)
        k >>= 1
    return R


def _point_order_dividing(m: int, P, A, p) -> int:
    """Exact order of P given that m P = O."""
    order = m
    for q, e in factorize(m).factors:
        for _ in range(e):
            if _ec_mul(order // q, P, A, p) is None:
                order //= q
            else:
                break
    return order


def _bsgs_annihilators(P, A, p) -> list[int]:
    """All m in the Hasse interval with m P = O."""
    lo = p + 1 - 2 * math.isqrt(p)
    width = 4 * math.isqrt(p) + 2
    r = math.isqrt(width) + 1
    baby = {}
    Q = None
    for j in range(r):
        if Q is None:
            baby.setdefault(None, []).append(j)
        else:
            baby.setdefault(Q[0], []).append((j, Q[1]))
        Q = _ec_add(Q, P, A, p)
    big_step = _ec_mul(r, P, A, p)
    neg = lambda T: None if T is None else (T[0], (-T[1]) % p)
    sols = []
    G = _ec_mul(lo, P, A, p)
    i = 0
    while i * r <= width + r:
        target = neg(G)
        if target is None:
            for j in baby.get(None, []):
                m = lo + i * r + j
                if m > 0:
                    sols.append(m)
        else:
            hits = baby.get(target[0])
            if hits:
                for item in hits:
                    if isinstance(item, tuple):
                        j, y = item
                        m = lo + i * r + (j if y == target[1] else -j)
                        if m > 0:
                            sols.append(m)
        G = _ec_add(G, big_step, A, p)
        i += 1
    return sorted({m for m in sols if _ec_mul(m, P, A, p) is None})


def ap_bsgs(curve: CurveModel, p: int) -> int:
    """a_p at a good prime by Shanks-Mestre order finding, O(p^{1/4}).

    Used where the character sum is out of reach (p ~ 10^8 in the
    murmuration-window experiments).  Deterministic: x is swept from 0.
    """
    if curve.disc % p == 0:
        raise BadPrime(f"p = {p} divides the discriminant")
    if p < 230:
        return ap_good(curve, p)
    A = (-27 * curve.c4) % p
    B = (-54 * curve.c6) % p
    g = 2
    while kronecker(g, p) != -1:
        g += 1
    Ag, Bg = A * g * g % p, B * g**3 % p
    lo = p + 1 - 2 * math.isqrt(p)
    hi = p + 1 + 2 * math.isqrt(p)
    lcm_e, lcm_t = 1, 1

    def candidates(l, twisted):
        """Group orders on E compatible with l | |E'| on the relevant curve."""
        out = []
        m = (lo + l - 1) // l * l
        while m <= hi:
            out.append(2 * p + 2 - m if twisted else m)
            m += l
        return out

    for x in range(p):
        fx = (x * x % p * x + A * x + B) % p
        chi = kronecker(fx, p)
        if chi == 0:
            continue
        if chi == 1:
            P = (x, sqrt_mod(fx, p))
            curve_A, twisted = A, False
        else:
            gx = g * x % p
            P = (gx, sqrt_mod(fx * pow(g, 3, p) % p, p))
            curve_A, twisted = Ag, True
        anns = _bsgs_annihilators(P, curve_A, p)
        if not anns:
            continue
        order = _point_order_dividing(anns[0], P, curve_A, p)
        if twisted:
            lcm_t = lcm_t * order // math.gcd(lcm_t, order)
        else:
            lcm_e = lcm_e * order // math.gcd(lcm_e, order)
        if lcm_e > 1 and lcm_t > 1:
            cand = set(candidates(lcm_e, False)) & set(candidates(lcm_t, True))
        elif lcm_e > 1:
            cand = set(candidates(lcm_e, False))
        else:
            cand = set(candidates(lcm_t, True))
        if len(cand) == 1:
            return p + 1 - cand.pop()
    raise ArithmeticError(f"group order not isolated at p = {p}")
