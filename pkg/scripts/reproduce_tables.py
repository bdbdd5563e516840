"""Regenerate every table into one directory, one file per table and format.

    python scripts/reproduce_tables.py [--out results/tables] [--formats plain csv json]
"""

from __future__ import annotations

import argparse
from pathlib import Path

from complab.tables import BUILDERS, build_table

EXT = {"plain": "txt", "csv": "csv", "json": "json"}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results/tables")
    ap.add_argument("--formats", nargs="+", choices=list(EXT), default=["plain", "csv"])
    args = ap.parse_args(argv)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for table_id in BUILDERS:
        table = build_table(table_id)
        for fmt in args.formats:
            path = out / f"table_{table_id}.{EXT[fmt]}"
            path.write_text(table.render(fmt))
        print(f"table {table_id}: {table.title} ({len(table.rows)} rows)")


if __name__ == "__main__":
    main()
