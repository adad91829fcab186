"""Sturm-certify B_n(z; r) for every r in a grid, beyond the acceptance range.

    python scripts/real_root_scan.py --max-n 25 --max-r 6 --max-parts 3
"""
import argparse
import time

from rpbell.analysis import certify_real_negative_roots, check_strong_log_concavity
from rpbell.bell import bell_poly
from rpbell.rp_stirling import restriction_grid


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=20)
    ap.add_argument("--max-r", type=int, default=6)
    ap.add_argument("--max-parts", type=int, default=3)
    args = ap.parse_args()

    start = time.perf_counter()
    grid = restriction_grid(args.max_r, args.max_parts)
    failures = 0
    for r in grid:
        for n in range(args.max_n + 1):
            poly = bell_poly(n, r).poly
            cert = certify_real_negative_roots(poly)
            lc = check_strong_log_concavity(poly.coeffs)
            if not (cert.all_real_negative and lc):
                failures += 1
                print(f"FAIL n={n} r={r}: {cert} log-concave={lc}")
    print(f"{len(grid)} restriction vectors, n <= {args.max_n}: {failures} failures "
          f"in {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
