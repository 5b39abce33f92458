"""Per-m cost of a prebuilt expansion table versus the determinant route.

Writes CSV (N,m,method,nanos) to stdout; refusals go to stderr.
"""

import argparse
import csv
import sys

from homrep.bench import run_bench


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--N", type=int, nargs="+", default=[6, 9, 12])
    ap.add_argument("--m", type=int, nargs="+", default=[10**3, 10**6, 10**9])
    ap.add_argument("--blocks", type=int, default=4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    out = csv.writer(sys.stdout)
    out.writerow(["N", "m", "method", "nanos"])
    for N in args.N:
        n = min(args.blocks, N)
        for row in run_bench(N, args.m, n=n, seed=args.seed, log=lambda s: print(s, file=sys.stderr)):
            out.writerow([row.N, row.m, row.method, row.nanos])
    return 0


if __name__ == "__main__":
    sys.exit(main())
