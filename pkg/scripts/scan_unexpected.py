"""One line per m: fat point count, multiplicity certificate, bpf saturation degree.

    python scripts/scan_unexpected.py --m-max 6
"""

import argparse
import time

from dimfermat.linsys import unexpectedness_check
from dimfermat.unexpected import bpf_check, default_n_max, gamma, lambda_system, mult_certificate


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--m-min", type=int, default=1)
    ap.add_argument("--m-max", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    print(f"{'m':>2} {'dim I_d':>7} {'expect':>6} {'actual':>6} {'U':>3} {'mult xyz/abc':>13} {'bpf N':>6} {'sec':>6}")
    for m in range(args.m_min, args.m_max + 1):
        t0 = time.perf_counter()
        rep = unexpectedness_check(m, seed=args.seed)
        curve = gamma(m)
        mults = [mult_certificate(curve, s).exact_multiplicity for s in ("xyz", "abc")]
        bpf = bpf_check(lambda_system(m), default_n_max(m)).witness["saturating_degree"]
        flag = "yes" if rep.unexpected else "no"
        print(f"{m:>2} {rep.dim_IZ_d:>7} {rep.expected:>6} {rep.dim_actual:>6} {flag:>3} "
              f"{str(mults[0]) + '/' + str(mults[1]):>13} {str(bpf):>6} {time.perf_counter() - t0:>6.1f}")


if __name__ == "__main__":
    main()
