"""Tate's algorithm: Kodaira type and conductor exponent at one prime.

Operates on raw integral Weierstrass tuples (a1, a2, a3, a4, a6).  The
implementation runs the full classification loop, including the
restart-on-nonminimal branch, so it returns correct local data even for
models that are not minimal at p.  Translations at p = 2, 3 are found by
exhaustive search over the relevant residue classes, which sidesteps the
delicate case analysis of the published recipes; for p >= 5 closed forms
are used.

The conductor exponent is recovered from the Kodaira type via Ogg's
formula f = v(Delta_min) + 1 - m, with m the number of components of the
special fiber; this is valid at every prime, including 2 and 3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import sqrt_mod

Coeffs = tuple[int, int, int, int, int]


def b_invariants(a: Coeffs) -> tuple[int, int, int, int]:
    a1, a2, a3, a4, a6 = a
    b2 = a1 * a1 + 4 * a2
    b4 = a1 * a3 + 2 * a4
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return b2, b4, b6, b8


def c_invariants(a: Coeffs) -> tuple[int, int, int]:
    """(c4, c6, Delta) of a Weierstrass tuple."""
    b2, b4, b6, b8 = b_invariants(a)
    c4 = b2 * b2 - 24 * b4
    c6 = -b2**3 + 36 * b2 * b4 - 216 * b6
    disc = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    return c4, c6, disc


def transform(a: Coeffs, u: int, r: int, s: int, t: int) -> Coeffs:
    """Standard change of Weierstrass coordinates (u, r, s, t).

    Raises if the result is not integral (only possible when u > 1).
    """
    a1, a2, a3, a4, a6 = a
    n1 = a1 + 2 * s
    n2 = a2 - s * a1 + 3 * r - s * s
    n3 = a3 + r * a1 + 2 * t
    n4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t
    n6 = a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1
    if u == 1:
        return (n1, n2, n3, n4, n6)
    us = (u, u * u, u**3, u**4, u**6)
    new = []
    for v, uk in zip((n1, n2, n3, n4, n6), us):
        if v % uk:
            raise ValueError("non-integral transform")
        new.append(v // uk)
    return tuple(new)


def _val(n: int, p: int) -> int:
    """p-adic valuation; a large sentinel for n = 0."""
    if n == 0:
        return 10**9
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _poly_gcd_mod(f: list[int], g: list[int], p: int) -> list[int]:
    """Monic gcd of two small polynomials over F_p (low-degree Euclid).

    Polynomials are coefficient lists, lowest degree first.
    """

    def trim(h):
        while h and h[-1] % p == 0:
            h.pop()
        return h

    f, g = trim([c % p for c in f]), trim([c % p for c in g])
    while g:
        inv = pow(g[-1], -1, p)
        g = [c * inv % p for c in g]
        # f mod g
        f = f[:]
        while len(f) >= len(g):
            lead = f[-1]
            shift = len(f) - len(g)
            for i, c in enumerate(g):
                f[shift + i] = (f[shift + i] - lead * c) % p
            f = trim(f)
        f, g = g, f
    if f:
        inv = pow(f[-1], -1, p)
        f = [c * inv % p for c in f]
    return f


def _division_multiplicity(coeffs: list[int], x: int, p: int) -> int:
    """Multiplicity of the root x in a polynomial over F_p, by repeated
    synthetic division.  coeffs are lowest degree first."""
    m = 0
    cur = [c % p for c in coeffs]
    while len(cur) > 1:
        hi = list(reversed(cur))
        out = []
        carry = 0
        for c in hi:
            carry = (carry * x + c) % p
            out.append(carry)
        if out[-1] != 0:  # remainder: x is not a root of cur
            break
        cur = list(reversed(out[:-1]))
        m += 1
    return m


def _cubic_root_profile(c0: int, c1: int, c2: int, p: int):
    """Root structure of T^3 + c2 T^2 + c1 T + c0 over F_p.

    Returns ('distinct', None), ('double', rho) or ('triple', rho).
    A multiple root of a cubic is always F_p-rational, so a scan over F_p
    finds it for small p; for p >= 5 the gcd with the derivative works.
    """
    if p <= 3:
        coeffs = [c0 % p, c1 % p, c2 % p, 1]
        best = ("distinct", None, 1)
        for x in range(p):
            m = _division_multiplicity(coeffs, x, p)
            if m >= 3:
                return "triple", x
            if m == 2 and best[2] < 2:
                best = ("double", x, 2)
        return best[0], best[1]
    f = [c0 % p, c1 % p, c2 % p, 1]
    fp = [c1 % p, (2 * c2) % p, 3 % p]
    g = _poly_gcd_mod(f, fp, p)
    if len(g) <= 1:
        return "distinct", None
    if len(g) == 2:
        rho = (-g[0]) % p
        return "double", rho
    # gcd degree 2 means a triple root (x - rho)^2
    rho = (-g[1] * pow(2, -1, p)) % p
    return "triple", rho


def _quadratic_root_profile(b: int, c: int, p: int):
    """Root structure of Y^2 + b Y + c over F_p.

    Returns ('distinct', None) for two distinct roots in an algebraic
    closure that are F_p-rational or not (multiplicity is all we need),
    or ('double', y0).
    """
    if p == 2:
        # double root iff b even: Y^2 + c = (Y + c)^2 over F_2
        if b % 2 == 0:
            y0 = c % 2  # root of Y^2 = -c = c
            return "double", y0
        return "distinct", None
    disc = (b * b - 4 * c) % p
    if disc == 0:
        y0 = (-b * pow(2, -1, p)) % p
        return "double", y0
    return "distinct", None


@dataclass(frozen=True)
class TateResult:
    kodaira: str  # 'I0', 'In', 'II', 'III', 'IV', 'I0*', 'In*', 'IV*', 'III*', 'II*'
    n: int  # index for In / In*, else 0
    f: int  # conductor exponent
    vdisc: int  # valuation of the minimal discriminant at p
    minimal: Coeffs  # model minimal at p (global coefficients)
    was_minimal: bool
    split: bool | None  # for multiplicative reduction only


def _find_singular_point(a: Coeffs, p: int) -> tuple[int, int]:
    """(x0, y0) mod p at which the reduced curve is singular."""
    a1, a2, a3, a4, a6 = a
    if p <= 3:
        for x in range(p):
            for y in range(p):
                f = y * y + a1 * x * y + a3 * y - x**3 - a2 * x * x - a4 * x - a6
                fx = a1 * y - 3 * x * x - 2 * a2 * x - a4
                fy = 2 * y + a1 * x + a3
                if f % p == 0 and fx % p == 0 and fy % p == 0:
                    return x, y
        raise ArithmeticError("no singular point found")
    b2, _, _, _ = b_invariants(a)
    # additive case: p | c4, so the double root of the completed cube is
    # x0 = -b2/12 mod p
    x0 = (-b2 * pow(12, -1, p)) % p
    y0 = (-(a1 * x0 + a3) * pow(2, -1, p)) % p
    return x0, y0


def _normalize_step6(a: Coeffs, p: int) -> Coeffs:
    """Translate so that p|a1, p|a2, p^2|a3, p^2|a4, p^3|a6."""

    def ok(c: Coeffs) -> bool:
        return (
            c[0] % p == 0
            and c[1] % p == 0
            and c[2] % p**2 == 0
            and c[3] % p**2 == 0
            and c[4] % p**3 == 0
        )

    if p <= 3:
        # r stays divisible by p to keep the singular point at the origin
        for s in range(p * p):
            for r in range(0, p * p, p):
                for t in range(p**3):
                    c = transform(a, 1, r, s, t)
                    if ok(c):
                        return c
        raise ArithmeticError("step-6 normalization failed")
    a1, a2, a3, a4, a6 = a
    s = (-a1 * pow(2, -1, p)) % p
    c = transform(a, 1, 0, s, 0)
    t = (-c[2] * pow(2, -1, p * p)) % (p * p)
    c = transform(c, 1, 0, 0, t)
    if not ok(c):
        raise ArithmeticError("step-6 normalization failed")
    return c


def tate_local(a: Coeffs, p: int) -> TateResult:
    """Run Tate's algorithm at p on an integral model."""
    cur = a
    u_restarts = 0
    while True:
        c4, c6, disc = c_invariants(cur)
        if disc == 0:
            raise ValueError("singular curve")
        v = _val(disc, p)
        if v == 0:
            return TateResult("I0", 0, 0, 0, cur, u_restarts == 0, None)
        if c4 % p != 0:
            # multiplicative: type I_v, f = 1; split iff -c6 is a square
            if p == 2:
                split = (-c6) % 8 == 1
            else:
                split = sqrt_mod(-c6, p) is not None
            return TateResult("In", v, 1, v, cur, u_restarts == 0, split)

        x0, y0 = _find_singular_point(cur, p)
        cur = transform(cur, 1, x0, 0, y0)
        a1, a2, a3, a4, a6 = cur
        assert a3 % p == 0 and a4 % p == 0 and a6 % p == 0

        if a6 % (p * p) != 0:
            return TateResult("II", 0, v, v, cur, u_restarts == 0, None)
        _, _, b6, b8 = b_invariants(cur)
        if b8 % p**3 != 0:
            return TateResult("III", 0, v - 1, v, cur, u_restarts == 0, None)
        if b6 % p**3 != 0:
            return TateResult("IV", 0, v - 2, v, cur, u_restarts == 0, None)

        cur = _normalize_step6(cur, p)
        a1, a2, a3, a4, a6 = cur
        kind, rho = _cubic_root_profile(
            a6 // p**3 % p, a4 // (p * p) % p, a2 // p % p, p
        )
        if kind == "distinct":
            return TateResult("I0*", 0, v - 4, v, cur, u_restarts == 0, None)

        if kind == "double":
            # I_n* subprocedure
            cur = transform(cur, 1, p * rho, 0, 0)
            n = 1
            q = 2
            while True:
                a1, a2, a3, a4, a6 = cur
                kindq, y0 = _quadratic_root_profile(
                    a3 // p**q % p, (-(a6 // p ** (2 * q))) % p, p
                )
                if kindq == "distinct":
                    break
                cur = transform(cur, 1, 0, 0, p**q * y0)
                n += 1
                a1, a2, a3, a4, a6 = cur
                kindx, x0 = _quadratic_root_profile(
                    (a4 // p ** (q + 1)) * pow(a2 // p, -1, p) % p,
                    (a6 // p ** (2 * q + 1)) * pow(a2 // p, -1, p) % p,
                    p,
                )
                if kindx == "distinct":
                    break
                cur = transform(cur, 1, p**q * x0, 0, 0)
                n += 1
                q += 1
            return TateResult("In*", n, v - 4 - n, v, cur, u_restarts == 0, None)

        # triple root
        cur = transform(cur, 1, p * rho, 0, 0)
        a1, a2, a3, a4, a6 = cur
        kindq, y0 = _quadratic_root_profile(
            a3 // (p * p) % p, (-(a6 // p**4)) % p, p
        )
        if kindq == "distinct":
            return TateResult("IV*", 0, v - 6, v, cur, u_restarts == 0, None)
        cur = transform(cur, 1, 0, 0, p * p * y0)
        a1, a2, a3, a4, a6 = cur
        if a4 % p**4 != 0:
            return TateResult("III*", 0, v - 7, v, cur, u_restarts == 0, None)
        if a6 % p**6 != 0:
            return TateResult("II*", 0, v - 8, v, cur, u_restarts == 0, None)
        # non-minimal at p: rescale and restart
        cur = transform(cur, p, 0, 0, 0)
        u_restarts += 1


def conductor_exponent(a: Coeffs, p: int) -> int:
    return tate_local(a, p).f


def kodaira_symbol(res: TateResult) -> str:
    if res.kodaira == "In":
        return f"I{res.n}"
    if res.kodaira == "In*":
        return f"I{res.n}*"
    return res.kodaira
