"""Size study: diagram and tree sizes against generator-list size.

Writes one CSV row per ideal for the random families (at the chosen
scale) and the complete-degree ideals I_{n,d}.
"""

import argparse
import csv
import sys
import time
from dataclasses import asdict

from mddkit.cli import DESK_PRESET, SIZE_FIELDS, size_row
from mddkit.families import Family, FamilySpec, generate


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--scale", type=float, default=0.1, help="fraction of the full generator counts")
    ap.add_argument("--seeds", type=int, default=1)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    writer = csv.DictWriter(out, SIZE_FIELDS, lineterminator="\n")
    writer.writeheader()
    for fam, n, rs, bound in DESK_PRESET:
        for r in rs:
            r = max(1, round(r * args.scale * 10))
            for seed in range(args.seeds):
                t0 = time.perf_counter()
                spec = FamilySpec(fam, n, r, bound, seed)
                writer.writerow(asdict(size_row(spec.label, n, generate(spec))))
                out.flush()
                print(f"{spec.label}: {time.perf_counter() - t0:.1f}s", file=sys.stderr)
    for n in range(2, 6):
        for d in range(1, 9):
            spec = FamilySpec(Family.COMPLETE_DEGREE, n, bound=d)
            writer.writerow(asdict(size_row(spec.label, n, generate(spec))))


if __name__ == "__main__":
    main()
