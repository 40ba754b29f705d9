#!/usr/bin/env python3
"""Fit the additive local root-number tables at p = 2, 3 from collected
observations, coarsen the residue keys per valuation group, verify, and
emit src/murmurnet/_local_tables.py.
"""

import pickle
import sys
from collections import defaultdict
from itertools import product

sys.path.insert(0, "src")

from murmurnet.curves import CurveModel, _vp

MODS = {2: (1, 2, 4, 8, 16, 32), 3: (1, 3, 9)}


def full_key(c4, c6, disc, p):
    m = 32 if p == 2 else 9
    v4, v6, vd = _vp(c4, p), _vp(c6, p), _vp(disc, p)
    c4r = (c4 // p**v4) % m if c4 else 0
    c6r = (c6 // p**v6) % m if c6 else 0
    dr = (disc // p**vd) % m
    return (min(v4, 12), min(v6, 12), vd), (c4r, c6r, dr)


def main():
    with open("tools/w23_observations.pkl", "rb") as fh:
        data = pickle.load(fh)
    rows = data["box"] + data["family"]
    print(f"{len(rows)} observations")

    # unknown-factor equations
    eqs = {2: defaultdict(lambda: defaultdict(set)), 3: defaultdict(lambda: defaultdict(set))}
    held_out = []
    for coeffs, n, w, prod, unknown in rows:
        if len(unknown) == 0:
            continue
        if len(unknown) > 1:
            held_out.append((coeffs, n, w, prod, unknown))
            continue
        p = unknown[0]
        curve = CurveModel(*coeffs)
        grp, res = full_key(curve.c4, curve.c6, curve.disc, p)
        eqs[p][grp][res].add(-w * prod)

    tables = {}
    for p in (2, 3):
        table = {}
        print(f"--- p = {p}: {len(eqs[p])} valuation groups")
        for grp, resmap in sorted(eqs[p].items()):
            conflicts = [r for r, s in resmap.items() if len(s) > 1]
            if conflicts:
                print(f"  group {grp}: CONFLICTED at full granularity {conflicts[:4]}")
                continue
            flat = {r: next(iter(s)) for r, s in resmap.items()}
            best = None
            for m4, m6, md in product(MODS[p], MODS[p], MODS[p]):
                red = {}
                ok = True
                for (r4, r6, rd), w in flat.items():
                    k = (r4 % m4, r6 % m6, rd % md)
                    if red.setdefault(k, w) != w:
                        ok = False
                        break
                if ok:
                    cost = m4 * m6 * md
                    if best is None or cost < best[0]:
                        best = (cost, (m4, m6, md), red)
            cost, mods, red = best
            table[grp] = (mods, red)
            vals = set(red.values())
            desc = f"const {vals.pop()}" if len(vals) == 1 and len(red) == 1 and mods == (1, 1, 1) else f"mods {mods}, {len(red)} entries"
            print(f"  group {grp}: n_obs {sum(1 for _ in resmap)}, {desc}")
        tables[p] = table

    # verification over every observation, including multi-unknown rows
    def lookup(p, c4, c6, disc):
        grp, (r4, r6, rd) = full_key(c4, c6, disc, p)
        if grp not in tables[p]:
            return None
        (m4, m6, md), red = tables[p][grp]
        return red.get((r4 % m4, r6 % m6, rd % md))

    bad = unc = 0
    for coeffs, n, w, prod, unknown in rows:
        pr = prod
        ok = True
        for p in unknown:
            curve = CurveModel(*coeffs)
            wp = lookup(p, curve.c4, curve.c6, curve.disc)
            if wp is None:
                unc += 1
                ok = False
                break
            pr *= wp
        if ok and -pr != w:
            bad += 1
            if bad < 8:
                print("VERIFY FAIL:", coeffs, n, unknown)
    print(f"verify: {bad} wrong, {unc} uncovered, of {len(rows)}")

    with open("src/murmurnet/_local_tables.py", "w") as fh:
        fh.write(
            '"""Additive local root-number tables at p = 2 and p = 3.\n\n'
            "Auto-generated by tools/fit_w23_tables.py from functional-equation\n"
            "sign observations; do not edit by hand.  Keys: valuation triple\n"
            "(v(c4) capped at 12, v(c6) capped at 12, v(Delta)) -> (residue\n"
            "moduli for (c4', c6', Delta'), {reduced residues: w_p}).\n"
            '"""\n\n'
        )
        for p in (2, 3):
            fh.write(f"W{p}_GROUPS = {{\n")
            for grp in sorted(tables[p]):
                mods, red = tables[p][grp]
                fh.write(f"    {grp}: ({mods}, {{\n")
                for r in sorted(red):
                    fh.write(f"        {r}: {red[r]},\n")
                fh.write("    }),\n")
            fh.write("}\n\n")
    print("wrote src/murmurnet/_local_tables.py")


if __name__ == "__main__":
    main()
