from __future__ import annotations

import json
import shutil
import subprocess

import pytest

from tfrac_lab.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_expand_quasiaffine(capsys):
    code, out, _ = call(capsys, "expand", "--tfraction", "quasiaffine:1,1,1,1,1,1,1,1", "--order", "6")
    assert code == 0
    assert json.loads(out)["coefficients"] == [1, 2, 6, 24, 124, 800, 6208]
    code, out, _ = call(capsys, "--format", "plain", "expand", "--tfraction", "quasiaffine:1,1,1,1,1,1,1,1",
                        "--order", "6")
    assert out.strip() == "1,2,6,24,124,800,6208"


def test_expand_symbolic_and_json_specs(capsys):
    code, out, _ = call(capsys, "expand", "--jfraction", '{"gamma": "n + 1", "beta": "n"}', "--order", "4")
    assert code == 0 and json.loads(out)["coefficients"][:3] == [1, 1, 2]
    code, out, _ = call(capsys, "expand", "--sfraction", '{"alpha": ["x", "y"]}', "--order", "2")
    assert json.loads(out)["coefficients"] == [1, "x", "x*y + x^2"]


def test_enumerate_count(capsys):
    code, out, _ = call(capsys, "enumerate", "--family", "irt", "--n", "2", "--count")
    assert code == 0 and json.loads(out)["count"] == 6
    code, out, _ = call(capsys, "enumerate", "--family", "bt", "--n", "3", "--limit", "2")
    assert len(json.loads(out)["trees"]) == 2


def test_stats_worked_tree(capsys):
    code, out, _ = call(capsys, "stats", "--family", "bt", "--worked", "--traversal", "inorder")
    rows = json.loads(out)["vertices"]
    assert [(r["nid"], r["croix"]) for r in rows] == [(0, 0), (1, 0), (0, 2), (2, 0), (0, 2), (1, 1), (0, 1), (0, 0)]


def test_poly_and_grammar(capsys):
    code, out, _ = call(capsys, "poly", "--kind", "p_rt", "--n", "2")
    assert json.loads(out)["polynomial"] == "w*y1 + x2*y1 + y1*y2"
    code, out, _ = call(capsys, "grammar", "iterate", "--family", "rt", "--n", "8", "--ones")
    assert json.loads(out)["value"] == 155355
    code, out, _ = call(capsys, "grammar", "dumont", "--max-degree", "3")
    assert code == 0


def test_bijection_roundtrip(capsys):
    code, out, _ = call(capsys, "bijection", "--family", "irt", "--worked")
    res = json.loads(out)
    code, out, _ = call(capsys, "bijection", "--family", "irt", "--inverse", "--path", res["path"],
                        "--labels", json.dumps(res["labels"]))
    assert json.loads(out)["tree"] == res["tree"]
    code, out, _ = call(capsys, "bijection", "--family", "bt", "--worked")
    assert json.loads(out)["permutation"] == [5, 7, 3, 1, 6, 2, 8, 4]


def test_verify_and_conjecture(capsys):
    code, out, _ = call(capsys, "verify", "--id", "cor-irt-counts", "--order", "6")
    assert code == 0 and json.loads(out)["pass"]
    code, out, _ = call(capsys, "conjecture", "--nmax", "6")
    assert code == 0 and len(json.loads(out)["results"]) == 6


def test_oeis_and_riordan(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("TFRAC_LAB_OEIS_CACHE", str(tmp_path))
    code, out, _ = call(capsys, "oeis", "table", "--offline")
    assert code == 0 and len(json.loads(out)["rows"]) == 13
    code, out, _ = call(capsys, "--offline", "oeis", "sweep", "--which", "first")
    assert json.loads(out)["size"] == 48
    code, out, _ = call(capsys, "riordan", "lah", "--n", "4",
                        "--specialize", '{"x1":1,"x2":1,"y1":1,"y2":1,"w":1}')
    assert json.loads(out)["output_column"] == [1, 3, 11, 51]


@pytest.mark.parametrize("argv", [
    ["expand", "--order", "3"],
    ["verify", "--id", "no-such-theorem"],
    ["enumerate", "--family", "xyz", "--n", "2"],
    ["expand", "--tfraction", "quasiaffine:1,2", "--order", "3"],
    ["stats", "--family", "bt", "--tree", "1(L:"],
    ["--jobs", "0", "conjecture", "--nmax", "3"],
    ["nonsense"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_verification_failure_exits_1(capsys, monkeypatch):
    from tfrac_lab import theorems
    monkeypatch.setitem(theorems.THEOREMS, "cor-rt-counts",
                        theorems.THEOREMS["cor-rt-counts"]._replace(fn=lambda spec, N: {"pass": False}))
    code, out, _ = call(capsys, "verify", "--id", "cor-rt-counts")
    assert code == 1 and json.loads(out)["pass"] is False


@pytest.mark.skipif(shutil.which("tfrac-lab") is None, reason="console script not installed")
def test_console_script():
    out = subprocess.run(["tfrac-lab", "enumerate", "--family", "irt", "--n", "2", "--count"],
                         capture_output=True, text=True, check=True).stdout
    assert json.loads(out)["count"] == 6
