#!/usr/bin/env python3
"""Wall-clock cost of each identity sweep as n_max grows."""
from __future__ import annotations

import argparse
import time

from stirling_identities.identities import ALL_IDENTITIES, Tables, sweep


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--nmax", type=int, nargs="+", default=[10, 20, 40, 80])
    args = parser.parse_args()

    print("n_max  " + "  ".join(f"{i.value:>8}" for i in ALL_IDENTITIES) + "     build")
    for n_max in args.nmax:
        t0 = time.perf_counter()
        tables = Tables.build(n_max + 2)
        build = time.perf_counter() - t0
        cells = []
        for identity in ALL_IDENTITIES:
            t0 = time.perf_counter()
            report = sweep(identity, n_max, tables=tables)
            dt = time.perf_counter() - t0
            cells.append(f"{dt:8.3f}" if report.passed else "    FAIL")
        print(f"{n_max:5d}  " + "  ".join(cells) + f"  {build:8.3f}")


if __name__ == "__main__":
    main()
