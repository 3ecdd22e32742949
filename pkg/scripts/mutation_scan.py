#!/usr/bin/env python3
"""Bump one triangle entry at a time and list which identity sweeps notice.

    python scripts/mutation_scan.py --nmax 12 --rows 2:10
"""
from __future__ import annotations

import argparse

from stirling_identities.exact_numbers import TriangleFamily
from stirling_identities.identities import ALL_IDENTITIES, Tables, sweep


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nmax", type=int, default=12)
    parser.add_argument("--rows", default="2:10", help="inclusive row range lo:hi")
    parser.add_argument("--delta", type=int, default=1)
    args = parser.parse_args()
    lo, hi = map(int, args.rows.split(":"))

    base = Tables.build(args.nmax + 2)
    missed = 0
    print(f"{'family':<24} {'n':>3} {'k':>3}  caught by")
    for family in TriangleFamily:
        for n in range(lo, hi + 1):
            for k in range(n + 1):
                tables = base.perturbed(family, n, k, args.delta)
                caught = [i.value for i in ALL_IDENTITIES if not sweep(i, args.nmax, tables=tables).passed]
                missed += not caught
                print(f"{family.value:<24} {n:>3} {k:>3}  {' '.join(caught) or '-- MISSED --'}")
    print(f"\nundetected perturbations: {missed}")


if __name__ == "__main__":
    main()
