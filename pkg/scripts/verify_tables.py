#!/usr/bin/env python3
"""Run the full catalog verification and print a per-record summary.

Equivalent to `triv9 verify --tables builtin`, exposed as a script for
experiment-style runs with custom parameter points.
"""

import argparse
import sys
import time

from triv9.catalog import builtin_catalog, load_catalog, verify_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--catalog", default=None, help="record file (default: builtin)")
    ap.add_argument("--family", default=None)
    ap.add_argument("--points", type=int, default=3)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    records = load_catalog(args.catalog) if args.catalog else builtin_catalog()
    if args.family:
        records = [r for r in records if r.family == args.family]
    t0 = time.time()
    failures = 0

    def progress(rep):
        nonlocal failures
        if not rep.ok:
            failures += 1
            for line in rep.lines():
                print(line)
        else:
            print(rep.lines()[0])
        sys.stdout.flush()

    reports = verify_all(records, points_per_family=args.points,
                         jobs=args.jobs, progress=progress)
    dt = time.time() - t0
    print(f"\n{len(reports) - failures}/{len(reports)} checks passed in {dt:.0f}s")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
