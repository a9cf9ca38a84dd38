"""Full identity sweep at acceptance scale; writes every report as JSON.

    python scripts/run_sweep.py --n-max 30 --N-max 30 --K 200 --jobs 4 --out sweep.json
"""

import argparse
import json
import sys

from eulerian_ode.identities import sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=30)
    ap.add_argument("--N-max", type=int, default=30)
    ap.add_argument("--series-max", type=int, default=15, help="grid bound for the series identities")
    ap.add_argument("--K", type=int, default=200)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out")
    args = ap.parse_args()

    poly = sweep(args.n_max, args.N_max, identities=("thm2",), jobs=args.jobs)
    series = sweep(args.series_max, args.series_max, args.K, identities=("thm3", "eq37"), jobs=args.jobs)
    print(poly.summary())
    print(series.summary())
    if args.out:
        with open(args.out, "w") as fh:
            json.dump([r.to_json() for r in poly.reports + series.reports], fh)
    return 0 if poly.passed and series.passed else 2


if __name__ == "__main__":
    sys.exit(main())
