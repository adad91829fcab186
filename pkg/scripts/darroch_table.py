"""Print the greatest modal index K of each Bell row next to Darroch's centre.

    python scripts/darroch_table.py --r 2,2 --max-n 15
"""
import argparse

from rpbell.analysis import max_index_report
from rpbell.exact_arith import format_rational
from rpbell.rp_stirling import RestrictionVector


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--r", default="2,2")
    ap.add_argument("--max-n", type=int, default=12)
    args = ap.parse_args()
    r = RestrictionVector.parse(args.r)
    print(f"{'n':>3} {'K':>3} {'centre':>12} {'|K-c|':>8}  within_one")
    for n in range(args.max_n + 1):
        rep = max_index_report(n, r)
        gap = abs(rep.K - rep.darroch_center)
        print(f"{n:>3} {rep.K:>3} {float(rep.darroch_center):>12.6f} {float(gap):>8.4f}  "
              f"{rep.within_one}  ({format_rational(rep.darroch_center)})")


if __name__ == "__main__":
    main()
