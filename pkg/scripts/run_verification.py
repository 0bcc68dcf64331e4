#!/usr/bin/env python3
"""Run the full identity-verification suite and print a result table.

Usage: python3 scripts/run_verification.py [--n-points N] [--seed S]
"""

import argparse
import sys
import time

from curvint import verify


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-points", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    t0 = time.perf_counter()
    checks = verify.run_verification(n_points=args.n_points, seed=args.seed)
    dt = time.perf_counter() - t0

    width = max(len(c.name) for c in checks)
    for c in checks:
        flag = "PASS" if c.passed else "FAIL"
        print(f"[{flag}] {c.name:<{width}}  max={c.max_residual:.3e}  "
              f"tol={c.threshold:.0e}")
    ok = verify.all_passed(checks)
    print(f"\n{len(checks)} checks in {dt:.2f} s: "
          f"{'all passed' if ok else 'FAILURES PRESENT'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
