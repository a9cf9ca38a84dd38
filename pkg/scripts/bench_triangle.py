"""Time the four triangle routes over a range of row counts.

    python scripts/bench_triangle.py --sizes 10 25 50 100 --reps 3
"""

import argparse
import json

from eulerian_ode.bench import run_bench


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 25, 50, 100])
    ap.add_argument("--reps", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    res = run_bench(max(args.sizes), args.reps, sizes=args.sizes)
    if args.json:
        print(json.dumps(res, indent=2))
        return
    print("route        " + "".join(f"{n:>12}" for n in res["sizes"]))
    for name, r in res["routes"].items():
        print(f"{name:<13}" + "".join(f"{s:>11.4f}s" for s in r["median_seconds"]))
    print("agree:", res["agree"])
    print("bit lengths (last row):", res["bits"])


if __name__ == "__main__":
    main()
