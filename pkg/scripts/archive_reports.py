"""Write one JSON certificate document per m into a directory.

    python scripts/archive_reports.py --sweep 3..6 --out reports/
"""

import argparse
import time
from pathlib import Path

from dimfermat.certificate import emit
from dimfermat.cli import RunConfig, exit_code, run_report


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sweep", default="3..6")
    ap.add_argument("--out", type=Path, default=Path("reports"))
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    lo, _, hi = args.sweep.partition("..")
    args.out.mkdir(parents=True, exist_ok=True)
    worst = 0
    for m in range(int(lo), int(hi or lo) + 1):
        t0 = time.perf_counter()
        certs = run_report(RunConfig(m, seed=args.seed))
        path = args.out / f"report_m{m}.json"
        path.write_text(emit(certs, "json"))
        code = exit_code(certs)
        worst = max(worst, code)
        print(f"m={m}: {'pass' if code == 0 else 'FAIL'} -> {path} ({time.perf_counter() - t0:.1f}s)")
    raise SystemExit(worst)


if __name__ == "__main__":
    main()
