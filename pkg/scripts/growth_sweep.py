#!/usr/bin/env python3
"""Count rich words for several alphabet sizes and write one CSV per q.

    python scripts/growth_sweep.py --q 2 3 4 --max-n 18 --outdir results/
"""

import argparse
import csv
import time
from pathlib import Path

from richlang import bounds
from richlang.enumerate import count_rich


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--q", type=int, nargs="+", default=[2, 3])
    parser.add_argument("--max-n", type=int, default=18)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--outdir", type=Path, default=Path("results"))
    args = parser.parse_args()

    args.outdir.mkdir(parents=True, exist_ok=True)
    for q in args.q:
        start = time.monotonic()
        table = count_rich(q, args.max_n, "reduced", workers=args.workers)
        growth = bounds.growth_report(table)
        path = args.outdir / f"rich_counts_q{q}.csv"
        with path.open("w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["n", "R_n", "root", "certificate"])
            writer.writerow([0, 1, "", ""])
            for row in growth:
                writer.writerow([row.n, table[row.n], f"{row.root:.6f}", f"{row.certificate:.6f}"])
        print(f"q={q}: n<={args.max_n} in {time.monotonic() - start:.1f}s, "
              f"certificate {growth[-1].certificate:.6f} -> {path}")


if __name__ == "__main__":
    main()
