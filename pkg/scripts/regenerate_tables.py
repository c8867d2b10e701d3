"""Write markdown correspondence tables (plain, s, ss) for a few parameter pairs."""

import argparse
from fractions import Fraction
from pathlib import Path

from sl2n_howe.branching import build_table
from sl2n_howe.weylmodule import ModuleParams

PAIRS = [(Fraction(1, 2), Fraction(1, 3)), (Fraction(3, 2), Fraction(1, 2)), (Fraction(1, 2), Fraction(1, 2))]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="tables")
    ap.add_argument("--ns", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--b-min", type=int, default=-3)
    ap.add_argument("--b-max", type=int, default=3)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for n in args.ns:
        for a1, a2 in PAIRS:
            p = ModuleParams(n, a1, a2)
            for variant in ("plain", "s", "ss"):
                rep = build_table(p, range(args.b_min, args.b_max + 1), variant=variant)
                name = f"n{n}_a1-{a1.numerator}-{a1.denominator}_a2-{a2.numerator}-{a2.denominator}_{variant}.md"
                (out / name).write_text(rep.to_markdown())
                print(f"{name}: {'pass' if rep.passed else 'FAIL'}")


if __name__ == "__main__":
    main()
