#!/usr/bin/env python3
"""Targeted family observations with v2(A) in {6..9}, i.e. v2(c4) = 10..13.

Confirms that the (v4 >= 6, v6 = 5, vd = 4) additive 2-adic configuration
keeps w_2 = -1 at depths beyond the generic box, before the rule is
frozen in curves.py.
"""

import pickle
import sys
import time

sys.path.insert(0, "src")

from murmurnet.arith import factorize, is_squarefree
from murmurnet.curves import CurveModel, conductor, local_root_number, UnsupportedLocalCase
from murmurnet.lseries import Inconclusive, root_number_numeric

CASES = {64: 4, 128: 3, 256: 2, 512: 1}


def main():
    rows = []
    for base, want in CASES.items():
        got = 0
        B = 1
        while got < want and B < 60:
            A = base
            d = 4 * A**3 + 27 * B * B
            if is_squarefree(d):
                curve = CurveModel.short(A, B)
                fac = factorize(curve.disc)
                n = conductor(curve, fac)
                t0 = time.time()
                try:
                    w = root_number_numeric(curve, n, depth=6.0).w
                except Inconclusive:
                    B += 2
                    continue
                prod = 1
                unknown = []
                for p, _ in fac.factors:
                    try:
                        prod *= local_root_number(curve, p)
                    except UnsupportedLocalCase:
                        unknown.append(p)
                rows.append((curve.coeffs(), n, w, prod, tuple(unknown)))
                print(
                    f"A={A} B={B} N={n} w={w} w2={-w*prod if unknown==[2] else '?'}"
                    f" ({time.time()-t0:.0f}s)",
                    flush=True,
                )
                got += 1
            B += 2
    with open("tools/w23_highv4.pkl", "wb") as fh:
        pickle.dump(rows, fh)
    print("saved", len(rows))


if __name__ == "__main__":
    main()
