"""Write OEIS-format b-file fixtures for the sequences complab is compared against.

The sandbox these fixtures were made in had no route to oeis.org, so each file
is produced from a rational generating function by sympy's power-series
expansion. That route shares no code with complab's recurrences or part DP.
Replace the files with real downloads (https://oeis.org/Annnnnn/bnnnnnn.txt)
whenever network access is available; ``complab check oeis`` reads either.

    python scripts/make_bfile_fixtures.py [--out tests/data/bfiles] [--terms 121]
"""

from __future__ import annotations

import argparse
from pathlib import Path

import sympy as sp

x = sp.symbols("x")

# A-number -> (generating function, description), offset 0 for all four
GENERATING_FUNCTIONS = {
    "A000045": (x / (1 - x - x**2), "Fibonacci numbers"),
    "A000931": ((1 - x**2) / (1 - x**2 - x**3), "Padovan sequence"),
    # compositions into even parts and the part 1: 1 / (1 - x - x^2/(1 - x^2))
    "A028495": ((1 - x**2) / (1 - x - 2 * x**2 + x**3), "compositions into 1 and even parts"),
    # compositions into odd parts and the part 2: 1 / (1 - x/(1 - x^2) - x^2)
    "A052535": ((1 - x**2) / (1 - x - 2 * x**2 + x**4), "compositions into odd parts and 2"),
}


def coefficients(gf, terms: int) -> list[int]:
    poly = sp.series(gf, x, 0, terms).removeO()
    return [int(poly.coeff(x, i)) for i in range(terms)]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "tests" / "data" / "bfiles"))
    ap.add_argument("--terms", type=int, default=121)
    args = ap.parse_args(argv)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for a_number, (gf, desc) in GENERATING_FUNCTIONS.items():
        path = out / f"b{a_number[1:]}.txt"
        lines = [
            f"# {a_number} {desc}: fixture in b-file format, expanded from g.f. {gf}",
            "# generated by scripts/make_bfile_fixtures.py, not downloaded from oeis.org",
        ]
        lines += [f"{i} {v}" for i, v in enumerate(coefficients(gf, args.terms))]
        path.write_text("\n".join(lines) + "\n")
        print(f"wrote {path} ({args.terms} terms)")


if __name__ == "__main__":
    main()
