"""Acceptance suite.  Each test prints one PASS/FAIL line with its numbers.

Run alone with ``pytest tests/test_acceptance.py -s -v``.
"""

import csv
import itertools
import random
import time
from math import comb

import pytest

from mddkit.buchberger import buchberger, is_groebner
from mddkit.cli import bench_membership, main
from mddkit.families import Family, FamilySpec, SplitMix64, complete_degree, generate, minimalize
from mddkit.idealtree import build_tree, naive_contains, tree_contains, tree_node_count, tree_words
from mddkit.mdd import DiagramStore
from mddkit.sgb import sgb_incremental
from mddkit.systems import cyclic, katsura, random_dense


@pytest.fixture
def report(capsys):
    def emit(name, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'}  {name}: {detail}")
        return ok

    return emit


# -- shared corpora -----------------------------------------------------

@pytest.fixture(scope="module")
def monomial_corpus():
    """200 random generator sets with n in {2,3,4}, exponents <= 6, r <= 12.

    Sets of equal dimension share one store; the width after every
    insertion is recorded.
    """
    rng = SplitMix64(20240601)
    stores = {n: DiagramStore(n) for n in (2, 3, 4)}
    cases = []
    for _ in range(200):
        n = 2 + rng.uniform(3)
        r = 1 + rng.uniform(12)
        gens = [tuple(rng.uniform(7) for _ in range(n)) for _ in range(r)]
        store = stores[n]
        root = None
        widths = []
        for g in gens:
            before = store.metrics(root) if root is not None else None
            root = store.insert(root, g)
            after = store.metrics(root)
            widths.append((before.width if before else 0, after.width))
        cases.append((n, gens, root, widths))
    return stores, cases


@pytest.fixture(scope="module")
def gb_corpus():
    systems = [
        ("cyclic-4", cyclic(4)),
        ("cyclic-5", cyclic(5)),
        ("cyclic-6", cyclic(6)),
        ("katsura-5", katsura(5)),
        ("katsura-6", katsura(6)),
    ]
    rng = SplitMix64(2024)
    for i in range(20):
        n = 2 + i % 4
        degrees = [1 + rng.uniform(3) for _ in range(n)]
        systems.append((f"dense-{i}:n={n}:deg={degrees}", random_dense(n, degrees, 1000 + i)))
    results = []
    for name, (ring, F) in systems:
        t0 = time.perf_counter()
        G, _ = sgb_incremental(F)
        elapsed = time.perf_counter() - t0
        t0 = time.perf_counter()
        ok = is_groebner(G)
        check = time.perf_counter() - t0
        B = buchberger(F)
        results.append((name, F, G, B, ok, elapsed, check))
    return results


# -- criteria -----------------------------------------------------------

def test_exhaustive_oracle_equivalence(monomial_corpus, report):
    stores, cases = monomial_corpus
    t0 = time.perf_counter()
    mismatches = 0
    points = 0
    for n, gens, root, _ in cases:
        store = stores[n]
        tree = build_tree(gens)
        for q in itertools.product(range(8), repeat=n):
            a = store.contains(root, q)
            b = tree_contains(tree, q)
            c = naive_contains(gens, q)
            points += 1
            mismatches += not (a == b == c)
    elapsed = time.perf_counter() - t0
    ok = mismatches == 0 and elapsed < 60 and len(cases) >= 200
    report("exhaustive-oracle-equivalence", ok,
           f"{len(cases)} sets, {points} points, {mismatches} mismatches, {elapsed:.1f}s (limit 60s)")
    assert mismatches == 0
    assert elapsed < 60


def test_canonical_under_insertion_order(report):
    # distinct monomials of one total degree never divide each other
    gens = list(dict.fromkeys(generate(FamilySpec(Family.RANDOM_FIXED_TOTAL_DEGREE, 4, 40, 9, seed=77))))[:15]
    assert len(minimalize(gens)) == 15
    store = DiagramStore(4)
    shuffler = random.Random(5)
    t0 = time.perf_counter()
    roots = set()
    for _ in range(1000):
        order = list(gens)
        shuffler.shuffle(order)
        roots.add(store.build(order))
    elapsed = time.perf_counter() - t0
    ok = len(roots) == 1 and elapsed < 10
    report("canonical-under-insertion-order", ok,
           f"1000 orders of {len(gens)} generators -> {len(roots)} distinct root id(s), {elapsed:.2f}s (limit 10s)")
    assert len(roots) == 1
    assert elapsed < 10


def test_width_laws(monomial_corpus, report):
    stores, cases = monomial_corpus
    step_bad = final_bad = edge_bad = 0
    steps = 0
    for n, gens, root, widths in cases:
        for before, after in widths:
            steps += 1
            step_bad += after > 2 * before + 1
        met = stores[n].metrics(root)
        final_bad += met.width > 2 ** len(gens) - 1
        edge_bad += met.edges > n * met.branching_degree * met.width
    ok = step_bad == final_bad == edge_bad == 0
    report("width-laws", ok,
           f"{steps} insertions: {step_bad} step violations, {final_bad} final-width violations, "
           f"{edge_bad} edge-bound violations")
    assert ok


def test_complete_degree_structure(report):
    t0 = time.perf_counter()
    bad = []
    for n in range(2, 6):
        for d in range(1, 9):
            store = DiagramStore(n)
            root = store.build(complete_degree(n, d))
            width = store.metrics(root).width
            mins = len(store.minimal_generators(root))
            if width != d + 1 or mins != comb(d + n - 1, n - 1):
                bad.append((n, d, width, mins))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 30
    report("complete-degree-structure", ok,
           f"32 ideals, width == d+1 and minimal count == C(d+n-1, n-1); failures {bad}, {elapsed:.1f}s (limit 30s)")
    assert not bad
    assert elapsed < 30


def test_sequential_size_accounting(tmp_path, report):
    gens = complete_degree(2, 2)
    store = DiagramStore(2)
    met = store.metrics(store.build(gens))
    tree = build_tree(gens)
    small = (met.seq_words, len(gens) * 2, met.tree_nodes, tree_node_count(tree), tree_words(tree))
    small_ok = small == (17, 6, 7, 7, 19)

    out = tmp_path / "desk.csv"
    t0 = time.perf_counter()
    code = main(["size-report", "--preset", "desk", "--out", str(out)])
    elapsed = time.perf_counter() - t0
    rows = list(csv.DictReader(out.open()))
    families = {r["source"].split(":")[0] for r in rows}
    order_bad = [r["source"] for r in rows if int(r["mdd_words"]) > int(r["tree_words"])]
    ok = small_ok and code == 0 and len(families) == 4 and not order_bad
    report("sequential-size-accounting", ok,
           f"I_2,2 mdd_words/gens_words/tree_nodes = {small[0]}/{small[1]}/{small[2]}; "
           f"{len(rows)} report rows over {len(families)} random families, "
           f"mdd_words > tree_words in {len(order_bad)} rows, {elapsed:.0f}s")
    assert small_ok
    assert code == 0 and len(families) == 4
    assert not order_bad


def test_signature_engine_correctness(gb_corpus, report):
    bad = []
    total = 0.0
    for name, F, G, B, ok, elapsed, check in gb_corpus:
        total += elapsed + check
        same_leads = sorted(minimalize([g.lm for g in G])) == sorted(minimalize([b.lm for b in B]))
        if not (ok and same_leads):
            bad.append(name)
    passed = not bad and total < 600
    report("signature-engine-correctness", passed,
           f"{len(gb_corpus)} systems, failures {bad}, engine+check time {total:.1f}s (limit 600s)")
    assert not bad
    assert total < 600


def test_criteria_soundness(gb_corpus, report):
    checks = nonzero = 0
    for name, F, *_ in gb_corpus:
        _, stats = sgb_incremental(F, check_criteria=True)
        checks += stats.forced_checks
        nonzero += stats.forced_nonzero
    ok = checks > 0 and nonzero == 0
    pct = 100.0 * (checks - nonzero) / checks if checks else 0.0
    report("criteria-soundness", ok,
           f"{checks} skipped pairs force-reduced, {pct:.1f}% reached zero")
    assert ok


def test_membership_scaling(report):
    rows = {}
    for r in (100, 1000):
        spec = FamilySpec(Family.RANDOM_SMALL_DEGREE, 10, r, seed=0)
        for row in bench_membership(spec, queries=5000, reps=5):  # raises on disagreement
            rows[row["backend"], r] = float(row["per_query_us"])
    mdd = rows["mdd", 1000] / rows["mdd", 100]
    naive = rows["naive-list", 1000] / rows["naive-list", 100]
    timing_ok = mdd < 3 and naive >= 5
    report("membership-scaling", timing_ok,
           f"agreement 100%; per-query growth r=100 -> 1000: mdd x{mdd:.2f} (want < 3), "
           f"naive x{naive:.2f} (want >= 5)" + ("" if timing_ok else " [soft: timing only, not failed]"))


def test_hash_cons_audit(monomial_corpus, report):
    stores, _ = monomial_corpus
    dups = 0
    grew = 0
    wrong = 0
    calls = 0
    t0 = time.perf_counter()
    for store in stores.values():
        dups += store.duplicate_count()
        size = len(store)
        for node in range(1, size):
            wrong += store.make_node(store.edges(node)) != node
            calls += 1
        grew += len(store) - size
    per_call = (time.perf_counter() - t0) / max(calls, 1) * 1e6
    ok = dups == 0 and grew == 0 and wrong == 0 and all(s.consistent() for s in stores.values())
    report("hash-cons-audit", ok,
           f"{sum(len(s) for s in stores.values())} arena entries, {dups} duplicate edge lists; "
           f"{calls} make_node calls on existing lists: {wrong} new ids, arena growth {grew}, "
           f"{per_call:.2f} us/call")
    assert ok
