from __future__ import annotations

import csv
import json
import subprocess
import sys

import pytest

from painleve_wb.cli.main import main
from painleve_wb.cli.report import VerificationReport
from painleve_wb.cli.suites import Options, UsageError, run_suite


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_unknown_suite_is_a_usage_error(capsys):
    with pytest.raises(UsageError):
        run_suite("nonsense")
    code, _, err = run(["suite", "nonsense"], capsys)
    assert code == 2 and "unknown suite" in err


def test_bad_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["suite", "lax", "--format", "yaml"])
    assert exc.value.code == 2


def test_enumerate_suite(capsys):
    code, out, _ = run(["--format", "json", "suite", "enumerate"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["summary"] == {"pass": 11, "fail": 0, "skip": 0}
    assert all(r["anchor"] for r in data["records"])


def test_lax_suite():
    rep = run_suite("lax")
    assert rep.exit_code == 0
    assert len(rep.records) == 18
    assert all(r.detail.get("residual", "0") == "0" for r in rep.records)


def test_second_order_suite_reports_the_pv_display():
    rep = run_suite("second-order")
    assert [r.id for r in rep.failed] == ["second-order/pv"]
    assert rep.exit_code == 1
    corrected = next(r for r in rep.records if r.id == "second-order/pv/corrected")
    assert corrected.status == "pass"


def test_reports_are_byte_identical():
    opts = Options(seed=7, cyclic_samples=3)
    assert run_suite("cyclic", opts).dumps() == run_suite("cyclic", opts).dumps()
    assert run_suite("numeric-isomonodromy", opts).dumps() == run_suite("numeric-isomonodromy", opts).dumps()


def test_report_exit_code_and_text():
    rep = VerificationReport("demo")
    rep.add("a", True, "anchor a")
    rep.add("b", None, "anchor b")
    assert rep.exit_code == 0
    rep.add("c", False, "anchor c", witness=[1, 2])
    assert rep.exit_code == 1
    assert "FAIL  c  [anchor c]" in rep.text()
    assert json.loads(rep.dumps())["summary"] == {"pass": 1, "fail": 1, "skip": 1}


def test_families_dump(capsys):
    code, out, _ = run(["families", "dump", "--family", "pi"], capsys)
    assert code == 0 and json.loads(out)["pi"]["dimP"] == 0


def test_verify_single_family(capsys):
    code, out, _ = run(["verify", "hamiltonian", "--family", "piv"], capsys)
    assert code == 0 and "hamiltonian/piv" in out
    code, _, err = run(["verify", "lax", "--family", "pvi"], capsys)
    assert code == 2 and "unknown family" in err


def test_derive_json(capsys):
    code, out, _ = run(["--format", "json", "derive", "--family", "pi"], capsys)
    data = json.loads(out)
    assert code == 0 and data["qprime"] == "2*p" and data["B_text"] == [["0", "z + 2*q"], ["1", "0"]]


def test_cyclic_commands(capsys):
    code, out, _ = run(["cyclic", "count", "--family", "piii_d6", "--seed", "3"], capsys)
    assert code == 0 and "4 good cyclic vectors" in out
    code, out, _ = run(["cyclic", "scalar-op", "--family", "pi"], capsys)
    assert code == 0 and out.startswith("a1 = ")


def test_cubic_eval(capsys):
    code, out, _ = run(["--format", "json", "cubic", "eval", "--family", "pv", "--params", "s1=2,s2=0,s3=5",
                        "--point", "1,5,0"], capsys)
    data = json.loads(out)
    assert code == 0 and data["singular"] is True
    code, _, err = run(["cubic", "eval", "--family", "pv", "--params", "s1=2", "--point", "1,5,0"], capsys)
    assert code == 2


def test_cubic_verify_exit_codes(capsys):
    code, _, _ = run(["cubic", "verify", "--family", "pii_fn", "--samples", "2"], capsys)
    assert code == 0
    code, out, _ = run(["--format", "json", "cubic", "verify", "--family", "pv", "--samples", "1"], capsys)
    data = json.loads(out)
    assert code == 1 and data["summary"]["fail"] == 3


def test_flow_integrate_writes_csv(tmp_path, capsys):
    out = tmp_path / "flow.csv"
    code, _, _ = run(["--out", str(out), "flow", "integrate", "--family", "piv", "--theta0", "0.3",
                      "--thetainf", "0.1", "--t0", "1", "--t1", "1.5"], capsys)
    assert code == 0
    rows = list(csv.DictReader(out.open()))
    assert float(rows[0]["t_re"]) == 1.0 and abs(float(rows[-1]["t_re"]) - 1.5) < 1e-12


def test_mono_check(tmp_path, capsys):
    out = tmp_path / "mono.json"
    argv = ["mono", "check", "--family", "pv", "--theta0", "0.3333333333333333", "--theta1", "0.2",
            "--thetainf", "0.14285714285714285", "--t0", "1", "--t1", "2", "--loops", "0", "--out", str(out)]
    assert main(argv) == 0
    data = json.loads(out.read_text())
    assert data["residual"] <= 1e-6 and len(data["samples"]) == 6
    assert main(argv + ["--no-frame"]) == 1
    code, _, err = run(["mono", "check", "--family", "pv", "--loops", "2"], capsys)
    assert code == 2 and "not a finite singular point" in err


def test_environment_overrides(monkeypatch, capsys):
    monkeypatch.setenv("PAINLEVE_WB_FORMAT", "json")
    code, out, _ = run(["suite", "enumerate"], capsys)
    assert code == 0 and json.loads(out)["suite"] == "enumerate"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "painleve_wb", "suite", "enumerate"], capture_output=True, text=True)
    assert proc.returncode == 0 and "11 pass, 0 fail" in proc.stdout
