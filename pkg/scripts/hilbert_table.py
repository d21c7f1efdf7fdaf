"""Hilbert function of Z_m next to the span of h_1..h_6, degree by degree.

    python scripts/hilbert_table.py 3 4 --extra 4
"""

import argparse
from math import comb

from dimfermat import arrangements as arr
from dimfermat.cyclotomic import ambient_field
from dimfermat.linsys import generator_span_dim, hilbert_dim


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("ms", type=int, nargs="+")
    ap.add_argument("--extra", type=int, default=3, help="degrees past 2m+1 to tabulate")
    args = ap.parse_args()
    for m in args.ms:
        F = ambient_field(m)
        Z = arr.diminished_set(m, F)
        hs = arr.generators_Z(m, F)
        print(f"m = {m}, |Z| = {len(Z)}")
        print(f"{'d':>4} {'forms':>6} {'naive':>6} {'I(Z)_d':>7} {'J_d':>5}")
        for d in range(2 * m - 1, 2 * m + 2 + args.extra):
            forms = comb(d + 2, 2)
            span, _ = generator_span_dim(hs, d, with_basis=False)
            print(f"{d:>4} {forms:>6} {max(0, forms - len(Z)):>6} {hilbert_dim(Z, d):>7} {span:>5}")
        print()


if __name__ == "__main__":
    main()
