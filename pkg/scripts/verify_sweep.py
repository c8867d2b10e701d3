"""Run the full verification suite over a grid of n and parameter pairs."""

import argparse
import time
from fractions import Fraction

from sl2n_howe.suite import SuiteConfig, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ns", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    pairs = [(Fraction(1, 2), Fraction(1, 3)), (Fraction(3, 2), Fraction(1, 2)), (Fraction(5, 3), Fraction(2, 3))]
    failed = 0
    for n in args.ns:
        for a1, a2 in pairs:
            t = time.perf_counter()
            checks = run_suite(SuiteConfig(n, a1, a2, seed=args.seed), workers=args.workers)
            bad = [c.name for c in checks if not c.passed]
            failed += len(bad)
            print(f"n={n} a1={a1} a2={a2}: {len(checks) - len(bad)}/{len(checks)} pass "
                  f"({time.perf_counter() - t:.1f}s) {bad or ''}")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
