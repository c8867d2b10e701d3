"""Compare closed-form singular vectors against the kernel oracle and print a census."""

import argparse
from fractions import Fraction

from sl2n_howe.dualpair import build_dual_pair
from sl2n_howe.singular import hwv_bruteforce, hwv_closed_form, singular_kernel
from sl2n_howe.weylmodule import ModuleParams


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--a1", type=Fraction, default=Fraction(1, 2))
    ap.add_argument("--a2", type=Fraction, default=Fraction(1, 3))
    ap.add_argument("--c-max", type=int, default=4)
    args = ap.parse_args()
    p = ModuleParams(args.n, args.a1, args.a2)
    g = build_dual_pair(p)
    print("b  c  kernel_dim  terms  match")
    for b in range(-3, 4):
        for c in range(args.c_max + 1):
            dim = len(singular_kernel(p, (b, c), g))
            v = hwv_closed_form(p, (b, c))
            match = dim == 1 and hwv_bruteforce(p, (b, c), g) == v
            print(f"{b:>2} {c:>2} {dim:>10} {len(v.support()):>6}  {match}")


if __name__ == "__main__":
    main()
