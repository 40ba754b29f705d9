"""Reference-corpus construction by exhaustive small-invariant enumeration.

Minimal integral Weierstrass models correspond one-to-one with admissible
(c4, c6) pairs, so enumerating the lattice band |c4^3 - c6^2| <= 1728 D
and reconstructing models yields every Q-isomorphism class of curves with
minimal |Delta| <= D exactly once.  Conductors come from the Tate loop,
root numbers from the functional-equation sign search, and analytic-rank
labels from the central L-value series; the whole pipeline is offline and
deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .arith import factorize
from .curves import CurveModel, conductor, is_minimal
from .lseries import Inconclusive, analytic_rank_label, root_number_numeric


def _sqrt_classes_mod(m: int) -> dict[int, list[int]]:
    """value -> residues r mod m with r^2 = value (mod m)."""
    out: dict[int, list[int]] = {}
    for r in range(m):
        out.setdefault(r * r % m, []).append(r)
    return out


def curves_by_max_disc(dmax: int) -> Iterator[CurveModel]:
    """All curves (up to Q-isomorphism) with minimal |Delta| <= dmax.

    Yields one minimal model per (c4, c6); non-minimal pairs are skipped
    since their minimal twin appears elsewhere in the lattice.
    """
    m = 1728
    roots = _sqrt_classes_mod(m)
    c4_hi = int((m * dmax) ** (1.0 / 3.0)) + 2
    for c4 in range(-c4_hi, c4_hi + 1):
        cube = c4**3
        hi2 = cube + m * dmax
        if hi2 <= 0:
            continue
        c6_hi = math.isqrt(hi2)
        lo2 = cube - m * dmax
        c6_lo = math.isqrt(lo2) if lo2 > 0 else 0
        for r in roots.get(cube % m, ()):
            start = c6_lo - (c6_lo % m) + r
            while start < c6_lo:
                start += m
            for c6 in range(start, c6_hi + 1, m):
                for signed in ((c6,) if c6 == 0 else (c6, -c6)):
                    num = cube - signed * signed
                    if num == 0:
                        continue
                    disc = num // m
                    if abs(disc) > dmax:
                        continue
                    curve = CurveModel.from_c_invariants(c4, signed)
                    if curve is None:
                        continue
                    if not is_minimal(curve):
                        continue
                    yield curve


@dataclass
class ReferenceRow:
    label: str
    curve: CurveModel
    conductor: int
    root_number: int
    rank: int | None


def build_reference_rows(
    dmax: int,
    n_max: int,
    with_ranks: bool = True,
    log_every: int = 0,
) -> list[ReferenceRow]:
    """Labeled curves with conductor <= n_max and minimal |Delta| <= dmax.

    Root numbers come from the numeric functional-equation test (the rare
    inconclusive curve is dropped); ranks from the central-value series
    where the zero/nonzero call is unambiguous.
    """
    rows: list[ReferenceRow] = []
    seen = 0
    per_n: dict[int, int] = {}
    for curve in curves_by_max_disc(dmax):
        seen += 1
        if log_every and seen % log_every == 0:
            print(f"  scanned {seen} minimal curves, kept {len(rows)}")
        fac = factorize(curve.disc)
        n = conductor(curve, fac)
        if n > n_max:
            continue
        try:
            w = root_number_numeric(curve, n).w
        except Inconclusive:
            continue
        rank = analytic_rank_label(curve, n, w) if with_ranks else None
        idx = per_n.get(n, 0)
        per_n[n] = idx + 1
        rows.append(ReferenceRow(f"ec{n}n{idx}", curve, n, w, rank))
    rows.sort(key=lambda r: (r.conductor, r.curve.c4, r.curve.c6))
    return rows


def isogeny_fingerprint(
    curve: CurveModel, n: int, p_bound: int = 100
) -> tuple:
    """(N, a_p for good p <= p_bound): the isogeny-class fingerprint."""
    from .curves import ap_good

    traces = tuple(
        ap_good(curve, int(p))
        for p in _small_primes(p_bound)
        if curve.disc % int(p) != 0
    )
    return (n,) + traces


def _small_primes(bound: int) -> np.ndarray:
    from .arith import primes_upto

    return primes_upto(bound)
