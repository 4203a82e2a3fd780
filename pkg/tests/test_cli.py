import csv
import io
import json
import subprocess
import sys

import pytest

from mddkit.cli import BENCH_FIELDS, SIZE_FIELDS, main
from mddkit.poly import format_system
from mddkit.sgb import SgbStats
from mddkit.systems import cyclic


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


@pytest.fixture
def i22(tmp_path):
    path = tmp_path / "i22.txt"
    path.write_text("n 2\n2 0\n1 1\n0 2\n")
    return str(path)


def test_size_report_complete_degree(capsys):
    code, out, _ = run(capsys, "size-report", "--family", "complete-degree", "--n", "2", "--bound", "2")
    assert code == 0
    (row,) = rows(out)
    assert list(row) == SIZE_FIELDS
    assert (row["gens_words"], row["mdd_words"], row["tree_words"], row["width"]) == ("6", "17", "19", "3")
    assert int(row["mdd_words"]) == int(row["nodes"]) + 2 * int(row["edges"])


def test_size_report_file_matches_family(capsys, i22):
    _, a, _ = run(capsys, "size-report", "--input", i22)
    _, b, _ = run(capsys, "size-report", "--family", "complete-degree", "--n", "2", "--bound", "2")
    strip = lambda t: [{k: v for k, v in r.items() if k != "source"} for r in rows(t)]
    assert strip(a) == strip(b)


@pytest.mark.parametrize("n, d", [(3, 1), (3, 4), (4, 3)])
def test_size_report_width(capsys, n, d):
    _, out, _ = run(capsys, "size-report", "--family", "complete-degree", "--n", str(n), "--bound", str(d))
    assert rows(out)[0]["width"] == str(d + 1)


def test_size_report_empty(capsys):
    code, out, _ = run(capsys, "size-report")
    assert code == 0
    assert out == ",".join(SIZE_FIELDS) + "\n"


def test_size_report_deterministic_and_parallel(capsys, monkeypatch):
    args = ["size-report", "--family", "random-small-degree", "--n", "5", "--r", "5,20", "--seed", "3"]
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args, "--jobs", "2")
    assert a == b and len(rows(a)) == 2
    monkeypatch.setenv("MDDKIT_SEED", "3")
    _, c, _ = run(capsys, *args[:-2])
    assert c == a


def test_size_report_errors(capsys, tmp_path):
    assert run(capsys, "size-report", "--input", str(tmp_path / "missing.txt"))[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("1 2\n1\n")
    code, _, err = run(capsys, "size-report", "--input", str(bad))
    assert code == 2 and "line 2" in err
    assert run(capsys, "size-report", "--family", "random-squarefree", "--n", "3", "--bound", "4")[0] == 2
    assert run(capsys, "size-report", "--family", "random-squarefree")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["size-report", "--family", "nope"])
    assert exc.value.code == 1


def test_bench_membership(capsys):
    code, out, _ = run(capsys, "bench-membership", "--family", "random-small-degree", "--n", "6",
                       "--r", "10,40", "--queries", "200", "--reps", "2")
    assert code == 0
    got = rows(out)
    assert len(got) == 4 and list(got[0]) == BENCH_FIELDS
    assert {r["backend"] for r in got} == {"mdd", "naive-list"}
    assert all(r["agreement"] == "100%" for r in got)
    assert got[0]["members"] == got[1]["members"]


def test_bench_zero_queries(capsys):
    code, out, _ = run(capsys, "bench-membership", "--family", "random-small-degree", "--n", "4", "--queries", "0")
    assert code == 0 and rows(out) == []


def test_bench_disagreement_aborts(capsys, monkeypatch):
    import mddkit.cli as cli

    monkeypatch.setattr(cli, "naive_contains", lambda gens, q: False)
    code, out, err = run(capsys, "bench-membership", "--family", "random-small-degree", "--n", "3",
                         "--r", "30", "--queries", "50")
    assert code == 3
    assert out == "" and "disagree" in err


def test_dot(capsys, i22):
    code, out, _ = run(capsys, "dot", "--input", i22)
    assert code == 0 and out.startswith("digraph")
    assert out.count("->") == 6


def test_basis_and_seqform(capsys, i22, tmp_path):
    _, out, _ = run(capsys, "basis", "--input", i22, "--minimal")
    assert sorted(out.splitlines()[1:]) == ["0 2", "1 1", "2 0"]
    dest = tmp_path / "seq.txt"
    assert run(capsys, "seqform", "--input", i22, "--out", str(dest))[0] == 0
    words = dest.read_text().split()
    assert len(words) == 17


@pytest.fixture
def cyclic4(tmp_path):
    ring, F = cyclic(4)
    path = tmp_path / "cyclic4.txt"
    path.write_text(format_system(ring, F))
    return str(path)


def test_groebner_xy(capsys, tmp_path):
    path = tmp_path / "xy.txt"
    path.write_text("p 7\nn 2\nx1\nx2\n")
    code, out, err = run(capsys, "groebner", str(path), "--verify")
    assert code == 0
    assert out.splitlines()[3:] == ["x2", "x1"]
    assert "is_groebner=True" in err


def test_groebner_engines_agree(capsys, cyclic4):
    _, a, _ = run(capsys, "groebner", cyclic4, "--engine", "sgb")
    _, b, _ = run(capsys, "groebner", cyclic4, "--engine", "buchberger", "--verify")
    assert a == b


def test_groebner_stats(capsys, cyclic4):
    code, _, err = run(capsys, "groebner", "--input", cyclic4, "--stats")
    meta, line = err.strip().splitlines()[-2:]
    stats = json.loads(line)
    assert code == 0
    assert list(stats) == list(SgbStats.__dataclass_fields__)
    assert stats["pairs_processed"] > 0
    assert "basis_size=7" in meta
    _, _, err = run(capsys, "groebner", cyclic4, "--engine", "buchberger", "--stats")
    assert set(json.loads(err.strip().splitlines()[-1]).values()) == {0}


def test_groebner_overrides(capsys, cyclic4):
    code, out, _ = run(capsys, "groebner", cyclic4, "--char", "32003", "--order", "lex", "--verify")
    assert code == 0 and out.startswith("p 32003\nn 4\norder lex\n")
    assert run(capsys, "groebner", cyclic4, "--char", "8")[0] == 2


def test_groebner_parse_error(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("n 2\nx0^2 + x1\n")
    code, _, err = run(capsys, "groebner", str(path))
    assert code == 2 and "line 2, column 1" in err
    assert run(capsys, "groebner")[0] == 2


def test_module_entry_point(i22):
    proc = subprocess.run([sys.executable, "-m", "mddkit", "dot", "--input", i22], capture_output=True, text=True)
    assert proc.returncode == 0 and "digraph" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "mddkit"], capture_output=True, text=True)
    assert proc.returncode == 1
