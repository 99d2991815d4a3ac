#!/usr/bin/env python3
"""Write all blade multiplication tables for n = 1..2 into an output directory.

Usage: python scripts/emit_tables.py [--out DIR] [--max-dim N]
"""

import argparse
import pathlib
import sys

from hyclif.tables import FORMATS, PRODUCTS, emit_table

EXT = {"text": "txt", "csv": "csv", "json": "json"}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="tables", type=pathlib.Path)
    parser.add_argument("--max-dim", default=2, type=int, choices=(1, 2, 3))
    args = parser.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    for n in range(1, args.max_dim + 1):
        for product in PRODUCTS:
            for fmt in FORMATS:
                path = args.out / f"table_{product}_n{n}.{EXT[fmt]}"
                path.write_text(emit_table(n, product, fmt))
                print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
