import json
import subprocess
import sys

import pytest

from qhdisc.cli import main
from qhdisc.theoremlab import load_corpus


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "y^2 - x^3", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["agreement"] is True and report["verdict_A"]["type"] == [6, 2, 3]


def test_analyze_degenerate(capsys):
    code, out, _ = run(capsys, "analyze", "x + 1")
    assert code == 0
    assert "(A) False" in out and "(B) False" in out and "(C) False" in out
    assert "reduced=True" in out


def test_analyze_mod_p(capsys):
    code, out, _ = run(capsys, "analyze", "y^2 + x^3", "--field", "fp:2")
    assert code == 0 and "agreement  False" in out


def test_usage_errors(capsys):
    assert run(capsys, "analyze", "x*(y")[0] == 1
    assert run(capsys, "analyze")[0] == 1
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys, "analyze", "x", "--field", "fp:4")[0] == 1
    assert run(capsys, "disc", "x + 1")[0] == 1
    assert run(capsys, "charp", "--p-range", "20..10")[0] == 1
    assert run(capsys, "branches", "y - 1")[0] == 1


def test_disc_homogenize_decompose(capsys):
    assert run(capsys, "disc", "y^2 - x^3 - x^2")[1].strip() == "4*x^3 + 4*x^2"
    assert run(capsys, "homogenize", "y^2 - x^3")[1].strip() == "bidegree (3, 2): -x^3*yt^2 + xt^3*y^2"
    code, out, _ = run(capsys, "decompose", "1 + x*y + x^2*y^2")
    assert code == 0 and "g(z) = z^2 + z + 1" in out and "k' = 2" in out
    code, _, err = run(capsys, "decompose", "y^2 - x^3 - x^2")
    assert code == 1 and "not quasi-homogeneous" in err


def test_branches(capsys):
    code, out, _ = run(capsys, "branches", "y^2 - x^3")
    assert code == 0 and "exponents  3/2, 3/2" in out and out.count("h-limit -2/3") == 2
    code, out, _ = run(capsys, "branches", "y^2 - x^3", "--ramify", "2", "--order", "8")
    assert code == 0 and "O(t^9)" in out


def test_fuzz_and_corpus(tmp_path, capsys):
    corpus = tmp_path / "corpus.jsonl"
    code, out, _ = run(capsys, "fuzz", "--count", "5", "--seed", "3", "--degree", "3", "--corpus", str(corpus), "--record-all")
    assert code == 0 and "5 instances, 0 disagreements" in out
    assert len(load_corpus(corpus)) == 5


def test_charp_exhaustive(tmp_path, capsys):
    corpus = tmp_path / "cx.jsonl"
    code, out, _ = run(capsys, "charp", "--p", "2", "--degree", "3", "--exhaustive", "--corpus", str(corpus))
    assert code == 0 and "84 counterexamples" in out
    recs = load_corpus(corpus)
    assert len(recs) == 84 and {r.kind for r in recs} == {"charp-counterexample"}
    assert any(r.report.canonical == "x^3 + y^2" for r in recs)


def test_charp_json(capsys):
    code, out, _ = run(capsys, "charp", "--p-range", "11..13", "--count", "50", "--json")
    data = json.loads(out)
    assert code == 0 and [c["summary"]["p"] for c in data["cells"]] == [11, 13]
    assert data["largest_failing_prime"] == {}


@pytest.mark.slow
def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qhdisc", "analyze", "y^2 - x^3", "--json"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["agreement"] is True
