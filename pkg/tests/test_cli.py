import json
import shutil
import subprocess
import sys

import pytest

from conftest import CORPUS
from xtalk.cli import main

POLY_XTN = ("xtn 1\ndesign and2_or2\ninput a b\noutput y\nctrl ct=free default=0\n"
            "gate g0 template=AND2_OR2 phase=0 A=a B=b Ct=ct Y=y\n")
BAD_AND_XTN = ("xtn 1\ninput a b\noutput f\ngate g0 template=NAND2 phase=0 A=a B=b Y=f\n")


def _fa(tmp_path):
    out = tmp_path / "fa.xtn"
    assert main(["map", str(CORPUS / "full_adder.blif"), "-o", str(out)]) == 0
    return out


def test_map_writes_netlist_and_report(tmp_path):
    out = _fa(tmp_path)
    assert "template=FA" in out.read_text()
    report = json.loads((tmp_path / "fa.map.json").read_text())
    assert report["total_transistors"] == 13


def test_map_latch_is_parse_error(tmp_path, capsys):
    src = tmp_path / "seq.blif"
    src.write_text(".model s\n.inputs a\n.outputs q\n.latch a q 0\n.end\n")
    assert main(["map", str(src), "-o", str(tmp_path / "s.xtn")]) == 1
    assert "line 4" in capsys.readouterr().err


def test_map_poly_on_xor_is_semantic_error(tmp_path, capsys):
    code = main(["map", str(CORPUS / "xor2.blif"), "-o", str(tmp_path / "x.xtn"),
                 "--poly", "f"])
    assert code == 2
    assert "PairMismatch" in capsys.readouterr().err


def test_missing_file_is_io_error(tmp_path):
    assert main(["map", str(tmp_path / "nope.blif"), "-o", str(tmp_path / "x.xtn")]) == 4


def test_verify_pass(tmp_path, capsys):
    out = _fa(tmp_path)
    capsys.readouterr()
    assert main(["verify", str(out), "--against", str(CORPUS / "full_adder.blif")]) == 0
    assert "8/8 vectors" in capsys.readouterr().out


def test_verify_random_flag(tmp_path, capsys):
    out = _fa(tmp_path)
    capsys.readouterr()
    code = main(["verify", str(out), "--against", str(CORPUS / "full_adder.blif"),
                 "--random", "200", "--seed", "7"])
    assert code == 0
    assert "random(200, seed=0x7)" in capsys.readouterr().out


def test_verify_fail_prints_counterexample(tmp_path, capsys):
    bad = tmp_path / "bad.xtn"
    bad.write_text(BAD_AND_XTN)
    assert main(["verify", str(bad), "--against", str(CORPUS / "and2.blif")]) == 3
    out = capsys.readouterr().out
    assert out.startswith("FAIL")
    assert "counterexample: a=0 b=0 expected f=0 got f=1" in out


def test_sim_prints_outputs(tmp_path, capsys):
    design = tmp_path / "p.xtn"
    design.write_text(POLY_XTN)
    stim = tmp_path / "s.txt"
    stim.write_text("inputs ct a b\n001\n101\n")
    vcd = tmp_path / "p.vcd"
    assert main(["sim", str(design), "--stimulus", str(stim), "--vcd", str(vcd)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["ct a b | y", "001 | 0", "101 | 1"]
    assert vcd.read_text().startswith("$")


def test_sim_width_mismatch(tmp_path):
    design = tmp_path / "p.xtn"
    design.write_text(POLY_XTN)
    stim = tmp_path / "s.txt"
    stim.write_text("inputs ct a b\n01\n")
    assert main(["sim", str(design), "--stimulus", str(stim)]) == 2


def test_report_formats(tmp_path, capsys):
    out = _fa(tmp_path)
    capsys.readouterr()
    src = str(CORPUS / "full_adder.blif")
    assert main(["report", str(out), "--against", src, "--format", "csv"]) == 0
    captured = capsys.readouterr()
    assert "full_adder,13,40,67.5,67.5" in captured.out
    assert "FA" in captured.err  # declared-versus-formula note
    target = tmp_path / "r.json"
    assert main(["report", str(out), "--against", src, "--format", "json", "-o",
                 str(target)]) == 0
    assert json.loads(target.read_text())["crosstalk_total"] == 13


def test_malformed_xtn_is_parse_error(tmp_path):
    design = tmp_path / "bad.xtn"
    design.write_text("xtn 1\nwire a\n")
    assert main(["verify", str(design), "--against", str(CORPUS / "and2.blif")]) == 1


def test_key_enumerate_and_attack(tmp_path, capsys):
    design = tmp_path / "p.xtn"
    design.write_text(POLY_XTN)
    assert main(["key", "enumerate", str(design)]) == 0
    assert "2 keys, 2 distinct functions" in capsys.readouterr().out
    result = tmp_path / "attack.json"
    assert main(["key", "attack", str(design), "--oracle-key", "1", "--json", str(result)]) == 0
    assert capsys.readouterr().out.startswith("key 1 recovered after")
    assert json.loads(result.read_text())["status"] == "found"


def test_key_apply(tmp_path, capsys):
    design = tmp_path / "p.xtn"
    design.write_text(POLY_XTN)
    assert main(["key", "apply", str(design), "--key", "1"]) == 0
    assert "ctrl ct=1" in capsys.readouterr().out
    assert main(["key", "apply", str(design), "--key", "3"]) == 2


def test_attack_without_oracle(tmp_path):
    design = tmp_path / "p.xtn"
    design.write_text(POLY_XTN)
    assert main(["key", "attack", str(design)]) == 2


@pytest.mark.skipif(shutil.which("xt") is None, reason="console script not installed")
def test_console_script(tmp_path):
    proc = subprocess.run(["xt", "map", str(CORPUS / "and2.blif"), "-o", str(tmp_path / "a.xtn")],
                          capture_output=True, text=True)
    assert proc.returncode == 0


def test_module_entry(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "xtalk.cli", "verify",
                           str(tmp_path / "missing.xtn"), "--against", "x.blif"],
                          capture_output=True, text=True)
    assert proc.returncode == 4
