"""Per-query membership time of the diagram and of a plain generator list
as the number of generators grows (random small-degree family, n = 10)."""

import argparse
import csv
import sys

from mddkit.cli import BENCH_FIELDS, bench_membership
from mddkit.families import Family, FamilySpec


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--r", default="100,200,500,1000")
    ap.add_argument("--queries", type=int, default=5000)
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    writer = csv.DictWriter(sys.stdout, BENCH_FIELDS, lineterminator="\n")
    writer.writeheader()
    per_query = {}
    for r in map(int, args.r.split(",")):
        spec = FamilySpec(Family.RANDOM_SMALL_DEGREE, 10, r, seed=args.seed)
        for row in bench_membership(spec, args.queries, args.reps):
            writer.writerow(row)
            per_query.setdefault(row["backend"], []).append(float(row["per_query_us"]))
    for backend, times in per_query.items():
        print(f"{backend}: growth x{times[-1] / times[0]:.2f} from first to last r", file=sys.stderr)


if __name__ == "__main__":
    main()
