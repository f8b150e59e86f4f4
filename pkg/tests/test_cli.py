import io
import json
import subprocess
import sys

import pytest

from qes.cli import main

BD = ["--model", "T1.x", "--param", "alpha=1", "--param", "beta=0", "--param", "gamma=-1", "--n", "3"]


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def test_list_text_and_json():
    code, text = run(["list"])
    assert code == 0 and "T2.x(1-x)(a-x)(b-x)" in text
    code, text = run(["list", "--k", "4", "--format", "json"])
    data = json.loads(text)
    assert data["schema"] == "qes/1"
    assert all(e["k"] == 4 for e in data["entries"])


def test_solve_json_report():
    code, text = run(["solve", *BD, "--format", "json"])
    data = json.loads(text)
    assert code == 0
    assert data["schema"] == "qes/1"
    assert [float(e) for e in data["spectrum"]["eigenvalues"]] == pytest.approx(
        [-7.398556194, -2.293766823, 2.293766823, 7.398556194], abs=1e-8
    )
    assert data["spectrum"]["root_counts"] == [0, 1, 2, 3]
    assert data["critical_polynomial"] == ["288", "0", "-60", "0", "1"]
    assert data["verified"] is True


def test_solve_text_and_csv():
    code, text = run(["solve", *BD])
    assert code == 0 and "E^4 - 60*E^2 + 288" in text
    code, text = run(["solve", *BD, "--format", "csv"])
    assert code == 0 and text.splitlines()[0].startswith("i,")


def test_custom_operator_from_coefficients():
    code, text = run(["solve", "--A", "0,1", "--F", "2,0,-2", "--interval", "0,inf", "--n", "3", "--format", "json"])
    assert code == 0
    assert len(json.loads(text)["spectrum"]["eigenvalues"]) == 4


def test_bad_parameter_exits_2(capsys):
    code, _ = run(["solve", "--model", "T1.x", "--param", "alpha=x", "--n", "1"])
    assert code == 2
    assert "not a rational" in capsys.readouterr().err


def test_unknown_model_exits_2_with_json_error(capsys):
    code, _ = run(["solve", "--model", "nope", "--n", "1", "--format", "json"])
    err = json.loads(capsys.readouterr().err)
    assert code == 2 and err["error"]["type"] == "UnknownModelError"


def test_non_real_spectrum_exits_4():
    # the sign-flipped weight exp(+x^2) is not normalizable; P_4 has complex roots
    code, _ = run(["solve", "--A", "0,1", "--F", "2,0,2", "--n", "3"])
    assert code == 4


def test_verify_single_model():
    code, text = run(["verify", "--model", "T1.x", "--trials", "3", "--n-max", "4", "--format", "json"])
    data = json.loads(text)
    assert code == 0 and data["ok"] and data["failures"] == []


def test_verify_needs_a_target(capsys):
    assert run(["verify"])[0] == 2


def test_potential_csv_and_closed_form():
    code, text = run(["potential", *BD, "--t-min", "0.5", "--t-max", "3", "--steps", "6", "--closed-form"])
    rows = [r.split(",") for r in text.strip().splitlines()]
    assert code == 0 and rows[0] == ["t", "V", "V_closed_form"]
    for _, v, c in rows[1:]:
        assert float(v) == pytest.approx(float(c), rel=1e-9)


def test_potential_singular_sample_exits_2():
    code, _ = run(["potential", *BD, "--t-min", "0", "--t-max", "1", "--steps", "3"])
    assert code == 2


def test_potential_fd_check_json():
    code, text = run(["potential", *BD, "--t-min", "1", "--t-max", "2", "--steps", "2", "--fd-check", "--format", "json"])
    data = json.loads(text)
    assert code == 0
    assert max(float(r) for r in data["fd_check"]["relative_error"]) < 0.01


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "qes.cli", "list", "--k", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and "T1.heun" in proc.stdout
