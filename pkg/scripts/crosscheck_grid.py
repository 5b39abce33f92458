"""Run the exact cross-check sweep and print a summary line.

    python3 scripts/crosscheck_grid.py               # desk grid
    python3 scripts/crosscheck_grid.py --extended    # n<=6, |kappa|<=9, m<=10
"""

import argparse
import os
import sys
import time

from homrep.crosscheck import GridBounds, run_crosscheck


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--extended", action="store_true")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    args = ap.parse_args()

    bounds = GridBounds(6, 9, 10) if args.extended else GridBounds()
    t0 = time.perf_counter()
    rep = run_crosscheck(bounds, seed=args.seed, jobs=args.jobs)
    print(f"{bounds}: {rep.cases} cases, {rep.passed} passed, {rep.failed} failed "
          f"in {time.perf_counter() - t0:.1f}s")
    for f in rep.failures[:10]:
        print("  ", f, file=sys.stderr)
    return 0 if rep.ok else 3


if __name__ == "__main__":
    sys.exit(main())
