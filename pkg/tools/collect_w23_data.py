#!/usr/bin/env python3
"""Collect raw local root-number observations for table calibration.

Writes a pickle of (coeffs, conductor, w_numeric, known_product, unknown
primes) tuples for (a) every minimal curve in a discriminant box and (b)
a dense slice of the short-form random-sampling family, whose 2-adic
configuration must be covered exactly.
"""

import pickle
import sys
import time

sys.path.insert(0, "src")

from murmurnet.arith import factorize, is_squarefree
from murmurnet.corpus import curves_by_max_disc
from murmurnet.curves import (
    CurveModel,
    UnsupportedLocalCase,
    conductor,
    local_root_number,
)
from murmurnet.lseries import Inconclusive, root_number_numeric

DMAX = 300_000
NMAX = 40_000
FAMILY_NMAX = 4_000_000


def known_factors(curve, fac):
    prod = 1
    unknown = []
    for p, _ in fac.factors:
        try:
            prod *= local_root_number(curve, p)
        except UnsupportedLocalCase:
            unknown.append(p)
    return prod, unknown


def label(curve, fac, n):
    try:
        w = root_number_numeric(curve, n).w
    except Inconclusive:
        return None
    prod, unknown = known_factors(curve, fac)
    return (curve.coeffs(), n, w, prod, tuple(unknown))


def main():
    t0 = time.time()
    rows = []
    for curve in curves_by_max_disc(DMAX):
        fac = factorize(curve.disc)
        n = conductor(curve, fac)
        if n > NMAX:
            continue
        row = label(curve, fac, n)
        if row:
            rows.append(row)
        if len(rows) % 5000 == 0 and rows:
            print(f"box: {len(rows)} rows ({time.time()-t0:.0f}s)", flush=True)
    print(f"box total: {len(rows)} ({time.time()-t0:.0f}s)", flush=True)

    fam = []
    A = 1
    while 64 * A**3 < FAMILY_NMAX:
        B = 1
        while 16 * (4 * A**3 + 27 * B * B) <= FAMILY_NMAX:
            d = 4 * A**3 + 27 * B * B
            if is_squarefree(d):
                curve = CurveModel.short(A, B)
                fac = factorize(curve.disc)
                n = conductor(curve, fac)
                row = label(curve, fac, n)
                if row:
                    fam.append(row)
            B += 2
        A += 1
        print(f"family A={A}: {len(fam)} rows ({time.time()-t0:.0f}s)", flush=True)
    print(f"family total: {len(fam)}", flush=True)

    with open("tools/w23_observations.pkl", "wb") as fh:
        pickle.dump({"box": rows, "family": fam}, fh)
    print("saved tools/w23_observations.pkl")


if __name__ == "__main__":
    main()
