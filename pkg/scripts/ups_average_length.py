#!/usr/bin/env python3
"""Average and maximum UPS part counts over all rich words of each length.

Prints n, number of rich words, mean p, max p, mean part length n/p and
ln(n) side by side.  Purely descriptive; nothing is asserted.
"""

import argparse
import math

from richlang.enumerate import enumerate_rich
from richlang.rich import ups_part_count


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--q", type=int, default=2)
    parser.add_argument("--max-n", type=int, default=14)
    args = parser.parse_args()

    print(f"{'n':>3} {'R_n':>8} {'mean p':>8} {'max p':>6} {'n/mean p':>9} {'ln n':>6}")
    for n in range(2, args.max_n + 1):
        ps = []
        enumerate_rich(args.q, n, lambda w: ps.append(ups_part_count(w)))
        mean = sum(ps) / len(ps)
        print(f"{n:>3} {len(ps):>8} {mean:>8.3f} {max(ps):>6} {n / mean:>9.3f} {math.log(n):>6.3f}")


if __name__ == "__main__":
    main()
