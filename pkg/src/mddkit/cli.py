"""Command-line interface: ``mddkit <command> ...``.

Exit codes: 0 success, 1 usage error, 2 input error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import statistics
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .buchberger import buchberger, is_groebner
from .families import Family, FamilySpec, generate, random_monomials
from .idealtree import naive_contains
from .mdd import DiagramStore
from .monomial import MonomialFormatError, MonomialOrder, format_monomials, read_monomials
from .poly import ParseError, PolyRing, format_system, read_system
from .sgb import SgbStats, lead_ideals_equal, sgb_incremental

EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_VERIFY = 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class SizeReportRow:
    source: str
    n: int
    r_raw: int
    r_min: int
    gens_words: int
    tree_words: int
    mdd_words: int
    nodes: int
    edges: int
    width: int
    branching: int


SIZE_FIELDS = list(SizeReportRow.__dataclass_fields__)
BENCH_FIELDS = ["backend", "n", "r", "queries", "reps", "median_seconds", "per_query_us", "members", "agreement"]


def size_row(source: str, n: int, gens) -> SizeReportRow:
    store = DiagramStore(n)
    root = store.build(gens)
    if root is None:
        raise InputError(f"{source}: no generators")
    met = store.metrics(root)
    distinct = set(gens)
    r_min = sum(1 for m in distinct if store.is_minimal(root, m))
    return SizeReportRow(
        source=source,
        n=n,
        r_raw=len(gens),
        r_min=r_min,
        gens_words=len(gens) * n,
        tree_words=met.tree_words,
        mdd_words=met.seq_words,
        nodes=met.nodes,
        edges=met.edges,
        width=met.width,
        branching=met.branching_degree,
    )


def _spec_row(spec: FamilySpec) -> SizeReportRow:
    return size_row(spec.label, spec.n, generate(spec))


def _file_row(path: str) -> SizeReportRow:
    n, gens = _read_monomial_file(path)
    return size_row(path, n, gens)


def _read_monomial_file(path: str):
    try:
        return read_monomials(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except MonomialFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


# 1/10 of the generator counts of the random benchmark families
DESK_PRESET = [
    (Family.RANDOM_LARGE_DEGREE, 10, [4, 12, 20], 30000),
    (Family.RANDOM_SMALL_DEGREE, 10, [10, 50, 100], 10),
    (Family.RANDOM_SQUAREFREE, 20, [10, 100, 1000], 1),
    (Family.RANDOM_FIXED_TOTAL_DEGREE, 10, [100, 2900, 29000], 12),
]


def _parse_counts(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"bad generator count list {text!r}") from None


def _specs_from_args(args) -> list[FamilySpec]:
    specs = []
    if args.preset == "desk":
        for fam, n, rs, bound in DESK_PRESET:
            specs += [FamilySpec(fam, n, r, bound, args.seed) for r in rs]
    if args.family:
        if args.n is None:
            raise InputError("--family needs --n")
        for r in _parse_counts(args.r):
            try:
                specs.append(FamilySpec(Family(args.family), args.n, r, args.bound, args.seed))
            except ValueError as exc:
                raise InputError(str(exc)) from None
    return specs


def cmd_size_report(args, out) -> int:
    specs = _specs_from_args(args)
    jobs = [(_spec_row, s) for s in specs] + [(_file_row, p) for p in args.input or []]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            futures = [pool.submit(fn, x) for fn, x in jobs]
            rows = [f.result() for f in futures]
    else:
        rows = [fn(x) for fn, x in jobs]
    writer = csv.DictWriter(out, SIZE_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(asdict(row))
    return 0


def bench_membership(spec: FamilySpec, queries: int, reps: int, query_bound: int | None = None,
                     linear_below: int = 0) -> list[dict]:
    """Time MDD against list membership for one generator set.

    Raises ``AssertionError`` if the two backends disagree on any query.
    """
    gens = generate(spec)
    qb = spec.effective_bound if query_bound is None else query_bound
    qs = random_monomials(spec.n, queries, qb, spec.seed ^ 0x5EED)
    if not qs:
        return []
    store = DiagramStore(spec.n, linear_below)
    root = store.build(gens)

    def run_mdd():
        contains = store.contains
        return [contains(root, q) for q in qs]

    def run_naive():
        return [naive_contains(gens, q) for q in qs]

    answers = {}
    rows = []
    for backend, fn in (("mdd", run_mdd), ("naive-list", run_naive)):
        times = []
        for _ in range(max(reps, 1)):
            t0 = time.perf_counter()
            answers[backend] = fn()
            times.append(time.perf_counter() - t0)
        med = statistics.median(times)
        rows.append({
            "backend": backend,
            "n": spec.n,
            "r": spec.r,
            "queries": len(qs),
            "reps": max(reps, 1),
            "median_seconds": f"{med:.6f}",
            "per_query_us": f"{med / len(qs) * 1e6:.3f}",
            "members": sum(answers[backend]),
        })
    bad = [q for q, a, b in zip(qs, answers["mdd"], answers["naive-list"]) if a != b]
    if bad:
        raise AssertionError(f"backends disagree on {len(bad)} queries, first {bad[0]}")
    for row in rows:
        row["agreement"] = "100%"
    return rows


def cmd_bench_membership(args, out) -> int:
    if not args.family or args.n is None:
        raise InputError("bench-membership needs --family and --n")
    rows = []
    for r in _parse_counts(args.r):
        try:
            spec = FamilySpec(Family(args.family), args.n, r, args.bound, args.seed)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        try:
            rows += bench_membership(spec, args.queries, args.reps, args.query_bound, args.linear_below)
        except AssertionError as exc:
            print(f"mddkit: membership disagreement: {exc}", file=sys.stderr)
            return EXIT_VERIFY
    writer = csv.DictWriter(out, BENCH_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return 0


def _load_store(path: str):
    n, gens = _read_monomial_file(path)
    store = DiagramStore(n)
    root = store.build(gens)
    if root is None:
        raise InputError(f"{path}: no generators")
    return store, root


def cmd_dot(args, out) -> int:
    store, root = _load_store(args.input)
    out.write(store.to_dot(root))
    return 0


def cmd_basis(args, out) -> int:
    store, root = _load_store(args.input)
    gens = store.minimal_generators(root) if args.minimal else store.enumerate_basis(root)
    out.write(format_monomials(gens, store.dim))
    return 0


def cmd_seqform(args, out) -> int:
    store, root = _load_store(args.input)
    for row in store.sequential_form(root):
        out.write(" ".join(map(str, row)) + "\n")
    return 0


def cmd_groebner(args, out) -> int:
    path = args.system or args.input
    if not path:
        raise InputError("groebner needs a system file")
    try:
        system = read_system(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None
    ring, polys = system.ring, system.polys
    if args.char is not None or args.order is not None:
        try:
            ring = PolyRing(
                ring.n,
                args.char if args.char is not None else ring.p,
                MonomialOrder.parse(args.order) if args.order else ring.order,
            )
        except ValueError as exc:
            raise InputError(str(exc)) from None
        polys = [ring.poly(f.terms) for f in polys]
    polys = [f for f in polys if f]
    if not polys:
        raise InputError(f"{path}: no nonzero polynomials")
    stats = None
    t0 = time.perf_counter()
    if args.engine == "sgb":
        gb, sstats = sgb_incremental(polys)
        stats = sstats.as_dict()
    else:
        gb = buchberger(polys)
    elapsed = time.perf_counter() - t0
    out.write(format_system(ring, gb))
    status = 0
    if args.verify:
        other = buchberger(polys) if args.engine == "sgb" else sgb_incremental(polys)[0]
        ok_gb = is_groebner(gb)
        ok_lead = lead_ideals_equal(gb, other)
        print(f"verify: is_groebner={ok_gb} lead_ideal_match={ok_lead}", file=sys.stderr)
        if not (ok_gb and ok_lead):
            status = EXIT_VERIFY
    if args.stats:
        # the JSON object keeps exactly the SgbStats schema; the plain
        # Buchberger engine reports it with all counters at zero
        print(f"# engine={args.engine} basis_size={len(gb)} seconds={elapsed:.6f}", file=sys.stderr)
        print(json.dumps(stats or SgbStats().as_dict()), file=sys.stderr)
    return status


def build_parser() -> argparse.ArgumentParser:
    default_seed = int(os.environ.get("MDDKIT_SEED", "0"))
    parser = _Parser(prog="mddkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def family_flags(p):
        p.add_argument("--family", choices=[f.value for f in Family])
        p.add_argument("--n", type=int)
        p.add_argument("--r", default="1", help="generator count, or comma-separated counts")
        p.add_argument("--bound", type=int, help="max exponent, or total degree")
        p.add_argument("--seed", type=int, default=default_seed)

    def out_flag(p):
        p.add_argument("--out", help="write the result here instead of stdout")

    p = sub.add_parser("size-report", help="CSV of diagram and tree sizes")
    family_flags(p)
    p.add_argument("--input", action="append", help="monomial list file (repeatable)")
    p.add_argument("--preset", choices=["desk"], help="the random families at 1/10 scale")
    p.add_argument("--jobs", type=int, default=1)
    out_flag(p)
    p.set_defaults(func=cmd_size_report)

    p = sub.add_parser("bench-membership", help="time MDD against list membership")
    family_flags(p)
    p.add_argument("--queries", type=int, default=10000)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--query-bound", type=int, help="max query exponent (default: --bound)")
    p.add_argument("--linear-below", type=int, default=0, help="linear scan for nodes smaller than this")
    out_flag(p)
    p.set_defaults(func=cmd_bench_membership)

    for name, func, helptext in (
        ("dot", cmd_dot, "DOT rendering of the diagram of a monomial list"),
        ("basis", cmd_basis, "basis read off the diagram"),
        ("seqform", cmd_seqform, "sequential word encoding of the diagram"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--input", required=True)
        if name == "basis":
            p.add_argument("--minimal", action="store_true", help="minimal generators only")
        out_flag(p)
        p.set_defaults(func=func)

    p = sub.add_parser("groebner", help="Groebner basis of a polynomial system file")
    p.add_argument("system", nargs="?")
    p.add_argument("--input")
    p.add_argument("--engine", choices=["sgb", "buchberger"], default="sgb")
    p.add_argument("--char", type=int, help="override the field characteristic")
    p.add_argument("--order", choices=[o.value for o in MonomialOrder])
    p.add_argument("--verify", action="store_true")
    p.add_argument("--stats", action="store_true", help="JSON statistics on stderr")
    out_flag(p)
    p.set_defaults(func=cmd_groebner)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "out", None):
            with open(args.out, "w") as out:
                return args.func(args, out)
        return args.func(args, sys.stdout)
    except InputError as exc:
        print(f"mddkit: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
