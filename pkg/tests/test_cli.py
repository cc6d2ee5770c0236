import json
import subprocess
import sys

import pytest

from qident.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def strip_elapsed(text):
    data = json.loads(text)
    for report in data.get("reports", [data]):
        report.pop("elapsed_ms", None)
    return data


def test_eval_prints_value_last(capsys):
    code, out, _ = run(capsys, "eval", "--family", "q-cesaro", "--n", "1",
                       "--param", "p=1/2", "--param", "s=1", "--param", "z=1")
    lines = out.strip().splitlines()
    assert code == 0
    assert "q = 1/4" in lines[0]
    assert lines[-1] == "3/2"


def test_eval_with_q(capsys):
    code, out, _ = run(capsys, "eval", "--family", "q-cesaro", "--n", "1",
                       "--param", "q=1/2", "--param", "s=1", "--param", "z=1")
    assert code == 0 and out.strip().splitlines()[-1] == "2"


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "--family", "classical-batemanz", "--n", "1",
                       "--param", "z=3", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"family": "classical-batemanz", "n": 1, "binding": {"z": "3/1"}, "value": "-5/1"}


@pytest.mark.parametrize("argv", [
    ["eval", "--family", "q-cesaro", "--n", "1", "--param", "p=0.707", "--param", "s=1", "--param", "z=1"],
    ["eval", "--family", "q-cesaro", "--n", "1", "--param", "p=1/2", "--param", "s=1"],
    ["eval", "--family", "q-nope", "--n", "1"],
    ["eval", "--family", "q-sylvester", "--n", "1", "--param", "p=1/2", "--param", "z=0", "--param", "Z=1/4"],
    ["eval", "--family", "q-cesaro", "--n", "1", "--param", "p=1/2", "--param", "p=1/3"],
    ["verify", "--id", "Q-GF-3.8", "--all"],
    ["verify", "--id", "NOPE"],
    ["verify", "--all", "--param", "p=1/2"],
    ["verify", "--all", "--unknown-flag"],
    ["limit", "--id", "LIM-FACT", "--param", "n=2", "--precision", "32"],
    ["limit", "--id", "LIM-EXP", "--param", "t=3/4"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2
    assert out == ""


def test_verify_single_json(capsys):
    code, out, _ = run(capsys, "verify", "--id", "Q-GF-3.8", "--param", "p=1/2", "--param", "s=2",
                       "--param", "z=3", "--order", "12", "--format", "json")
    report = json.loads(out)
    assert code == 0
    assert report["status"] == "pass" and report["order"] == 12
    assert list(report)[-1] == "elapsed_ms"


def test_verify_schema_error_exits_1(capsys):
    code, out, _ = run(capsys, "verify", "--id", "Q-GF-3.6", "--param", "p=1/2", "--param", "z=0",
                       "--param", "Z=1/3", "--format", "json")
    assert code == 1
    assert json.loads(out)["status"] == "error"


def test_verify_sampled_single_identity(capsys):
    code, out, _ = run(capsys, "verify", "--id", "Q-GF-3.1", "--trials", "2", "--mode", "free")
    assert code == 0
    assert "total 2  passed 2" in out


def test_verify_all_deterministic(capsys):
    argv = ["verify", "--all", "--seed", "42", "--trials", "5", "--order", "16", "--format", "json"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    first, second = strip_elapsed(out1), strip_elapsed(out2)
    assert first == second
    assert first["failed"] == 0 and first["errors"] == 0


def test_limit_text_and_json(capsys):
    code, out, _ = run(capsys, "limit", "--id", "LIM-COR-J", "--param", "m=1", "--param", "j=0",
                       "--param", "t=1/4")
    assert code == 0 and "status pass" in out
    code, out, _ = run(capsys, "limit", "--id", "LIM-FACT", "--param", "n=2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["status"] == "pass" and data["precision_bits"] == 256
    assert len(data["steps"]) == 12


def test_limit_fail_exits_1(capsys):
    code, _, _ = run(capsys, "limit", "--id", "LIM-L11", "--param", "m=4", "--param", "t=1/2",
                     "--steps", "3")
    assert code == 1


def test_list(capsys):
    code, out, _ = run(capsys, "list", "--format", "json")
    assert code == 0
    assert len(json.loads(out)) == 28
    code, out, _ = run(capsys, "list")
    assert "Q-GF-3.11" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qident", "eval", "--family", "q-batemanz", "--n", "1",
                           "--param", "q=1/2", "--param", "z=1"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip().splitlines()[-1] == "4"
    proc = subprocess.run([sys.executable, "-m", "qident", "eval", "--family", "q-batemanz"],
                          capture_output=True, text=True)
    assert proc.returncode == 2


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    assert code == 0
    assert out.strip().splitlines()[-1] == "selftest: pass"
