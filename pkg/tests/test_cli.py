import json
import shutil
import subprocess

import pytest

from cycleforge import data
from cycleforge.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_INPUT, EXIT_OK, main, resolve_params


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_resolve_params_forms(tmp_path):
    assert resolve_params("fig11")["kind"] == "model"
    inline = resolve_params("s=1/2,K=10,a=5/4,b=-33/20")
    assert inline["kind"] == "reduced"
    f = tmp_path / "p.json"
    f.write_text(json.dumps({"r": 1, "K": 10, "m": "0.54", "a": "1.25", "s": "0.4", "h": 1, "b": "-1.65"}))
    assert resolve_params(str(f))["kind"] == "model"


def test_classify_fig11(capsys):
    code, out = run(capsys, "classify", "--params", "fig11")
    assert code == EXIT_OK
    rep = json.loads(out)
    assert [e["tag"] for e in rep["equilibria"]] == ["StableFocus", "HyperbolicSaddle", "StableFocus"]
    assert rep["discriminants"]["DeltaTilde"] == 11664


def test_classify_table(capsys):
    code, out = run(capsys, "classify", "--params", "s=11/40,K=10,a=5/4,b=-33/20", "--format", "table")
    assert code == EXIT_OK
    assert "WeakFocusOrCenter" in out and "ThreeDistinct" in out


def test_invalid_parameters_exit_2(capsys):
    code, _ = run(capsys, "classify", "--params", "s=1,K=10,a=1,b=-3")
    assert code == EXIT_INPUT
    code, _ = run(capsys, "classify", "--params", "no_such_set")
    assert code == EXIT_INPUT
    code, _ = run(capsys, "isolate")
    assert code == EXIT_INPUT


def test_lyapunov_at_s_star(capsys):
    code, out = run(capsys, "lyapunov", "--params", "s=1,K=10,a=5/4,b=-33/20", "--at-s-star", "--count", "3")
    assert code == EXIT_OK
    rep = json.loads(out)
    assert rep["order"] == 1
    assert rep["values"][:2] == [0, "7411/768"]
    assert rep["signs"]["V3"] == "+"


def test_lyapunov_order_four_box(capsys):
    code, out = run(capsys, "lyapunov", "--params", "pstar")
    assert code == EXIT_OK
    rep = json.loads(out)
    assert rep["order"] == 4 and rep["signs"]["V9"] == "-"


def test_isolate_phi1_bstar(capsys):
    code, out = run(capsys, "isolate", "--phi", "1", "--at", "K=100,a=60", "--width", "1/10^20",
                    "--region", "Lambda,Sigma2,Sigma3")
    assert code == EXIT_OK
    rep = json.loads(out)
    inside = [r for r in rep["roots"] if r["region"] == "Inside"]
    assert len(inside) == 1
    assert inside[0]["width"] <= 1e-20


def test_isolate_plain_poly(capsys):
    code, out = run(capsys, "isolate", "--poly", "x^2 - 2", "--domain", "0,2", "--width", "2^-30")
    assert code == EXIT_OK
    (root,) = json.loads(out)["roots"]
    assert abs(root["mid"] - 2**0.5) < 1e-8


def test_verify_paper_transcription(capsys):
    code, out = run(capsys, "verify-paper", "--suite", "transcription,signs")
    assert code == EXIT_OK
    assert json.loads(out)["verdict"] == "PASS"


def test_verify_paper_checksum_failure_exit_1(capsys, monkeypatch):
    def broken():
        raise data.DataIntegrityError("phi2.poly checksum mismatch")

    monkeypatch.setattr(data, "verify_checksums", broken)
    code, _ = run(capsys, "verify-paper", "--suite", "transcription")
    assert code == EXIT_FAIL


def test_bifurcate_wrong_direction_fails(capsys):
    code, out = run(capsys, "bifurcate", "--recipe", "simultaneous_pair", "--eps=-1/1000", "--no-hunt")
    assert code == EXIT_FAIL
    assert json.loads(out)["pattern_ok"] is False


def test_bifurcate_order_two(capsys):
    code, out = run(capsys, "bifurcate", "--recipe", "order2_two_cycles")
    assert code == EXIT_OK
    assert json.loads(out)["pattern_ok"] is True


def test_census_budget_exit_3(capsys, tmp_path):
    code, _ = run(capsys, "census", "--params", "fig11", "--budget", "1", "--out", str(tmp_path))
    assert code == EXIT_BUDGET


def test_census_artifacts_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for d in (a, b):
        code, _ = run(capsys, "census", "--params", "fig11", "--out", str(d))
        assert code == EXIT_OK
    for name in ("census.json", "cycles.csv", "census.svg"):
        assert (a / name).read_bytes() == (b / name).read_bytes()
    rep = json.loads((a / "census.json").read_text())
    assert len(rep["cycles"]) == 3
    assert (a / "cycles.csv").read_text().count("\n") == 4


def test_simulate_writes_csv_and_svg(capsys, tmp_path):
    code, _ = run(capsys, "simulate", "--params", "fig11", "--x0", "3,2", "--t-end", "20", "--samples", "50",
                  "--out", str(tmp_path))
    assert code == EXIT_OK
    assert (tmp_path / "trajectory.csv").read_text().startswith("t,x,y\n")
    assert (tmp_path / "simulate.svg").read_text().lstrip().startswith("<?xml")


def test_verify_paper_json_deterministic(capsys, tmp_path):
    outs = []
    for d in ("r1", "r2"):
        code, _ = run(capsys, "verify-paper", "--suite", "transcription,bstar,theorem44", "--out", str(tmp_path / d))
        assert code == EXIT_OK
        outs.append((tmp_path / d / "verify_paper.json").read_bytes())
    assert outs[0] == outs[1]


@pytest.mark.skipif(shutil.which("cycleforge") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["cycleforge", "classify", "--params", "fig11"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["equilibria"][0]["x_star"] == 1
