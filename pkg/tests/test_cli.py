import json
import subprocess
import sys
from pathlib import Path

import pytest

from zcancel.cli import main

HERE = Path(__file__).parent
SPECS = HERE / "specs"
GOLDENS = HERE / "goldens"


def run_cli(*args, stdin=None):
    proc = subprocess.run([sys.executable, "-m", "zcancel.cli", *map(str, args)],
                          capture_output=True, text=True, input=stdin)
    return proc.returncode, proc.stdout


@pytest.mark.parametrize("golden", sorted(GOLDENS.glob("*.json")), ids=lambda p: p.name)
def test_output_matches_golden(golden, capsys):
    stem, command = golden.name[:-len(".json")].rsplit(".", 1)
    code = main([command, str(SPECS / f"{stem}.json")])
    assert code == 0
    assert capsys.readouterr().out == golden.read_text()


def result(command, spec, *extra):
    code, out = run_cli(command, SPECS / spec, *extra)
    return code, json.loads(out)


def test_verdict_quantum_plane():
    code, doc = result("verdict", "quantum_plane_minus1.json")
    assert code == 0
    assert doc["result"]["conclusion"] == "StronglyCancellative"
    assert doc["result"]["discriminant"]["normalized"]["text"] == "x1^4*x2^4"


def test_tsets_odd():
    code, doc = result("tsets", "skew3_order2.json")
    assert [t["witness"] for t in doc["result"]["t_sets"]] == [[1, 1]] * 3


def test_discriminant_generic_exit_one():
    code, doc = result("discriminant", "generic_plane.json")
    assert code == 1 and doc["error"]["kind"] == "unsupported"


def test_input_errors_exit_two(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"spec_version": 1, "family": "skew", "generators": ["a", "b"], '
                   '"order": 2, "params": [{"i": 2, "j": 1, "torsion": 1}]}')
    code, out = run_cli("center", bad)
    assert code == 2 and json.loads(out)["error"]["kind"] == "input"
    code, _ = run_cli("center", tmp_path / "missing.json")
    assert code == 2
    code, _ = run_cli("witness", SPECS / "skew3_order2.json")
    assert code == 2


def test_stdin_and_text_format():
    code, out = run_cli("ml", "-", "--format", "text",
                        stdin=(SPECS / "quantum_plane_minus1.json").read_text())
    assert code == 0 and "is_full: yes" in out


def test_witness_command():
    code, doc = result("witness", "skew3_order2.json", "--generator", "2")
    assert doc["result"]["derivation"]["first_order_images"] == {"x1": "0", "x2": "x1*x3", "x3": "0"}


def test_bounds_from_environment(monkeypatch, capsys):
    monkeypatch.setenv("ZCANCEL_DEGREE_BOUND", "2")
    monkeypatch.setenv("ZCANCEL_INDEX_BOUND", "5")
    main(["verify-witness", str(SPECS / "skew3_order2.json")])
    doc = json.loads(capsys.readouterr().out)["result"]
    assert (doc["degree_bound"], doc["index_bound"]) == (2, 5)
    main(["verify-witness", str(SPECS / "skew3_order2.json"), "--degree-bound", "3"])
    assert json.loads(capsys.readouterr().out)["result"]["degree_bound"] == 3
    monkeypatch.setenv("ZCANCEL_INDEX_BOUND", "lots")
    assert main(["verify-witness", str(SPECS / "skew3_order2.json")]) == 2


def test_out_and_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for p in (a, b):
        assert main(["verdict", str(SPECS / "tensor_two_planes.json"), "--out", str(p)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_bless_writes_golden(tmp_path):
    main(["center", str(SPECS / "weyl_order3.json"), "--bless", "--goldens", str(tmp_path)])
    assert (tmp_path / "weyl_order3.center.json").read_text() == (GOLDENS / "weyl_order3.center.json").read_text()
