"""Cycle types of U and V on C(n) for a range of n, as CSV.

Fixed points are checked against the recurrences; longer cycles are only
reported, since nothing is claimed about them.

    python scripts/cycle_census.py [--nmax 16] [--out census.csv]
"""

from __future__ import annotations

import argparse
import csv
import sys

from complab.verify import Permutation, cycle_census


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=16)
    ap.add_argument("--out", help="CSV path (default stdout)")
    args = ap.parse_args(argv)

    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["perm", "n", "cycles", "fixed", "expected_fixed", "longest", "cycle_type"])
    bad = 0
    for perm in Permutation:
        for n in range(1, args.nmax + 1):
            c = cycle_census(perm, n)
            kinds = " ".join(f"{length}x{mult}" for length, mult in sorted(c.cycle_type.items()))
            w.writerow([perm.value, n, len(c.cycles), c.fixed_point_count, c.expected_fixed_points, max(c.cycle_type), kinds])
            bad += not c.matches_count
    if args.out:
        fh.close()
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
