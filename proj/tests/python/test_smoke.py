import json
import os
import random
import subprocess
from fractions import Fraction
from pathlib import Path

import pytest
import sympy as sp

import jdomain

GOLDEN = Path(__file__).resolve().parent.parent / "golden"
DATA = Path(__file__).resolve().parent.parent / "data"


def test_builtins_listed():
    assert jdomain.builtin_names() == ["vinberg5", "dI21", "halfplane"]


@pytest.mark.parametrize("name", ["vinberg5", "dI21", "halfplane"])
def test_suite_passes(name):
    text = jdomain.run_suite(name, samples=20)
    last = text.strip().splitlines()[-1]
    passed, total = last.split()[1].split("/")
    assert passed == total


def test_model_dimensions():
    m = jdomain.Model("vinberg5")
    assert m.dims == {"g": 12, "b": 10, "k": 2, "rank": 3, "udim": 5, "vdim": 0}
    assert m.xi_names == ["x", "y", "n", "nprime"]
    d = jdomain.Model("dI21").dims
    assert (d["g"], d["b"], d["k"], d["vdim"]) == (8, 4, 4, 1)


def test_bracket_table_matches_golden():
    lines = jdomain.Model("vinberg5").bracket_table()
    assert lines == (GOLDEN / "vinberg5_brackets.txt").read_text().splitlines()


def test_grades():
    g = jdomain.Model("dI21").grades()
    assert g == {"A": "0", "Dp": "0", "E": "-1", "V1": "-1/2", "V2": "-1/2", "Y1": "1/2", "Yi": "1/2", "Z": "1"}
    assert jdomain.Model("vinberg5").grades()["W1"] == "mixed"


def test_in_cone_agrees_with_sympy():
    m = jdomain.Model("vinberg5")
    rng = random.Random(1)
    for _ in range(100):
        z = [Fraction(rng.randint(-3, 6), rng.randint(1, 3)) for _ in range(3)]
        z += [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(2)]
        mat = sp.Matrix([[z[0], 0, z[3]], [0, z[1], z[4]], [z[3], z[4], z[2]]]).applyfunc(sp.Rational)
        assert m.in_cone([str(x) for x in z]) == bool(mat.is_positive_definite)


def test_delta_closed_form():
    m = jdomain.Model("vinberg5")
    for x, y, n, np_ in [(-1, 0, 1, 1), (-2, 3, 2, 5), (0, 1, 0, 0)]:
        xi = [str(x), str(y), str(n), str(np_)]
        assert m.delta(xi, [1, 1, 1, 0, 0]) == pytest.approx(1)
        assert m.delta(xi, [2, 2, 2, 0, 0]) == pytest.approx(2.0 ** (2 * x - n - np_))
        k = m.kernel(xi, [1j, 1j, 1j, 0, 0], [1j, 1j, 1j, 0, 0])
        assert k == pytest.approx(m.delta(xi, [2, 2, 2, 0, 0]))


def test_classification():
    assert jdomain.is_unitarizable("-1", "0", 1, 1)
    assert jdomain.is_unitarizable("0", "5", 0, 0)
    assert not jdomain.is_unitarizable("-1", "0", 0, 1)
    assert not jdomain.is_unitarizable("1", "0", 1, 1)
    assert jdomain.partition_label("-1", "0", 2, 3, "G") == jdomain.partition_label("-2", "7", 2, 3, "G")
    assert jdomain.partition_label("-1", "0", 1, 1, "B") == jdomain.partition_label("-2", "3", 4, 5, "B")
    assert jdomain.partition_label("0", "1", 0, 0, "B") != jdomain.partition_label("0", "2", 0, 0, "B")
    assert jdomain.classify("0", "3", 0, 2) == {
        "xi": ["0", "3", "0", "2"],
        "unitarizable": True,
        "B_class": "B:Singleton(3,0,2)",
        "G_class": "G:Singleton(3,0,2)",
    }
    with pytest.raises(jdomain.ValidationError):
        jdomain.partition_label("1", "0", 1, 1, "B")


def test_grid_rows_match_golden():
    rows = (GOLDEN / "classify_grid.jsonl").read_text().splitlines()
    rng = random.Random(2)
    for line in rng.sample(rows, 300):
        want = json.loads(line)
        x, y, n, np_ = want["xi"]
        assert jdomain.classify(x, y, int(n), int(np_)) == want


def test_export_round_trip():
    text = jdomain.export_fields("halfplane")
    env = json.loads(text)
    assert env["version"] == 1 and env["kind"] == "fields"
    assert jdomain.suite_from_json(text) == jdomain.run_suite("halfplane")
    with pytest.raises(jdomain.ParseError):
        jdomain.suite_from_json("{")


CLI = os.environ.get("JDOMAIN_CLI")


@pytest.mark.skipif(not CLI, reason="JDOMAIN_CLI not set")
def test_cli_exit_codes_and_json():
    def run(*args):
        return subprocess.run([CLI, *args], capture_output=True, text=True)

    assert run("validate", "--builtin", "vinberg5").returncode == 0
    assert run("validate", str(DATA / "vinberg5_corrupted.json")).returncode == 1
    assert run("validate", str(DATA / "malformed.json")).returncode == 2
    assert run("classify", "--batch", str(DATA / "xi_noninteger.json")).returncode == 2
    assert run("delta", "--xi=-1,0,1,1", "--point=1,1,-1,0,0").returncode == 1

    out = run("--json", "classify", "--x", "-1", "--y", "0", "--n", "1", "--nprime", "1")
    assert out.returncode == 0
    assert json.loads(out.stdout) == {
        "xi": ["-1", "0", "1", "1"],
        "unitarizable": True,
        "B_class": "B:MinusClass",
        "G_class": "G:Minus(1,1)",
    }
    rep = json.loads(run("--json", "suite", "--builtin", "halfplane", "--samples", "10").stdout)
    assert rep["suite"] == "halfplane" and rep["ok"]
    assert all(item["pass"] for item in rep["checks"])
    d = json.loads(run("--json", "delta", "--xi=-1,0,1,1", "--point", "2E").stdout)
    assert float(d["delta"]["re"]) == pytest.approx(0.0625)
