import json
import subprocess
import sys

import pytest

from hyperpoincare.cli import run
from hyperpoincare.exactalg import RationalFunction


def out(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_series_json_round_trip(capsys):
    code, text, _ = out(capsys, ["series", "--family", "cycle-graph", "--n", "5", "--format", "json"])
    assert code == 0
    obj = json.loads(text)
    assert str(RationalFunction.from_json(obj["hilbert"])) == "(1 + 3t + t^2) / (1 - t)^2"
    assert str(RationalFunction.from_json(obj["poincare"])) == "(1 + t)^2 / (1 - 3t + t^2)"


def test_series_text_mentions_provenance(capsys):
    code, text, _ = out(capsys, ["series", "--family", "wheel", "--n", "3"])
    assert code == 0
    assert "P(t) = (1 + t) / (1 - 3t)" in text


def test_output_is_deterministic(capsys):
    argv = ["betti", "--family", "wheel", "--n", "6", "--format", "json"]
    _, first, _ = out(capsys, argv)
    _, second, _ = out(capsys, argv)
    assert first == second


def test_betti_both_reports_recorded_disagreements(capsys):
    code, text, _ = out(capsys, ["betti", "--family", "wheel", "--n", "5"])
    assert code == 0
    assert "recorded in the typo ledger" in text


def test_expand_from_coefficients(capsys):
    code, text, _ = out(capsys, ["expand", "--num", "1", "1", "--den", "1", "-2", "--order", "3", "--format", "json"])
    assert code == 0
    assert json.loads(text)["coefficients"] == ["1", "3", "6", "12"]


def test_expand_family(capsys):
    code, text, _ = out(capsys, ["expand", "--family", "line-graph", "--n", "2", "--series", "hilbert", "--order", "3"])
    assert code == 0
    assert text.strip().endswith("1 3 4 5")


def test_verify_success(capsys):
    code, text, _ = out(capsys, ["verify", "--suite", "fibonacci", "--n-max", "10"])
    assert code == 0 and "OVERALL: PASS" in text


def test_verify_betti_free_vertex(capsys):
    code, _, _ = out(capsys, ["verify", "--suite", "betti", "--family", "hyperline", "--n", "3", "--d", "3"])
    assert code == 0


def test_verify_failure_exit_code(capsys, monkeypatch):
    from hyperpoincare import oracle

    def broken(n_max):
        rep = oracle.VerificationReport("forced")
        rep.check("always wrong", 1, 2)
        return rep

    monkeypatch.setattr(oracle, "verify_fibonacci", broken)
    code, text, _ = out(capsys, ["verify", "--suite", "fibonacci"])
    assert code == 1 and "OVERALL: FAIL" in text


def test_library_error_exit_code(capsys):
    code, _, err = out(capsys, ["series", "--family", "hyperline", "--n", "3", "--d", "5", "--alpha", "3"])
    assert code == 2 and err.startswith("error:")


def test_size_limit_exit_code(capsys):
    code, _, err = out(capsys, ["betti", "--family", "hyperstar", "--n", "10", "--d", "3", "--method", "hochster"])
    assert code == 3 and "size limit" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["series", "--family", "banana", "--n", "3"])
    assert exc.value.code == 2


def test_ledger_json(capsys):
    code, text, _ = out(capsys, ["ledger"])
    assert code == 0
    assert len(json.loads(text)["entries"]) >= 8


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "hyperpoincare", "series", "--family", "line-graph", "--n", "3"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0
    assert "(1 + t)^2 / (1 - 2t)" in res.stdout
