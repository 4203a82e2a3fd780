"""Write the benchmark polynomial systems to data/systems/ as text files."""

import argparse
from pathlib import Path

from mddkit.poly import format_system
from mddkit.systems import cyclic, katsura, random_dense

SYSTEMS = {
    "cyclic4": lambda: cyclic(4),
    "cyclic5": lambda: cyclic(5),
    "cyclic6": lambda: cyclic(6),
    "katsura5": lambda: katsura(5),
    "katsura6": lambda: katsura(6),
    "dense3": lambda: random_dense(3, [2, 3, 3], seed=1),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="data/systems")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, build in SYSTEMS.items():
        ring, polys = build()
        (out / f"{name}.txt").write_text(f"# {name}\n" + format_system(ring, polys))
        print(out / f"{name}.txt")


if __name__ == "__main__":
    main()
