import json
import subprocess
import sys

import pytest

from natfromint import signs
from natfromint.algebra import Iso, Right
from natfromint.cli import main
from natfromint.verification import validate_report


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize(
    "argv, first_line",
    [
        (["classify", "-3"], "Neg"),
        (["classify", "0"], "Mid"),
        (["split", "5"], "right 2"),
        (["split", "-4"], "left -2"),
        (["sub", "3", "5"], "-2"),
        (["lt", "-5", "3"], "true"),
        (["lt", "3", "3"], "false"),
        (["nat", "add", "2", "3"], "5"),
        (["nat", "mul", "3", "4"], "12"),
        (["nat", "rank", "6"], "6"),
        (["universe", "cop", "unit", "unit", "--scan", "10"], "0 1"),
        (["universe", "empty", "--scan", "10"], "(no members)"),
    ],
)
def test_commands(capsys, argv, first_line):
    code, out, _ = run(capsys, *argv)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == first_line
    assert lines[1].startswith("counters: succ_steps=")


def test_counters_delta_is_reported(capsys):
    _, out, _ = run(capsys, "classify", "7", "--json")
    data = json.loads(out)
    assert data["result"] == "Pos"
    assert data["counters"]["sigma_steps"] == 7 and data["counters"]["fold_steps"] == 7


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "x"],
        ["classify", "1.5"],
        ["sub", "1"],
        ["nat", "add", "-1", "2"],
        ["nat", "add", "1"],
        ["nat", "pow", "1", "2"],
        ["universe", "cop", "unit", "--scan", "3"],
        ["universe", "bogus", "--scan", "3"],
        ["bench", "--max", "1000"],
        ["verify", "--level", "slow"],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 2


def test_verify_quick_json(capsys):
    code, out, _ = run(capsys, "verify", "--level", "quick", "--seed", "42", "--json")
    data = json.loads(out)
    validate_report(data)
    assert code == 0 and data["failed"] == 0 and data["suite"] == "quick"
    assert data["passed"] == len(data["cases"])


def test_verify_detects_corrupted_sigma(capsys, monkeypatch):
    honest = signs.shift_auto

    def corrupted(e):
        sigma = honest(e)

        def forward(x):
            if isinstance(x, signs.Mid):
                return signs.Mid(x.value)  # mid clause broken: stays in the middle
            return sigma.forward(x)

        return Iso(forward, sigma.backward)

    monkeypatch.setattr(signs, "shift_auto", corrupted)
    code, out, _ = run(capsys, "verify", "--level", "quick", "--json")
    data = json.loads(out)
    validate_report(data)
    assert code == 1
    status = {c["name"]: c["status"] for c in data["cases"]}
    assert status["sign_decomposition"] == "fail"
    assert status["rolling_rule"] == "pass"


def test_text_and_json_verdicts_agree(capsys, monkeypatch):
    from natfromint import verification

    cases = {k: verification.ACCEPTANCE[k] for k in ("rolling_rule", "seal_discipline")}
    cases["broken"] = lambda scale, rng: (_ for _ in ()).throw(AssertionError("boom"))
    monkeypatch.setattr(verification, "ACCEPTANCE", cases)
    monkeypatch.setattr(verification, "INVARIANTS", {})
    code_text, text, _ = run(capsys, "verify")
    code_json, js, _ = run(capsys, "verify", "--json")
    data = json.loads(js)
    assert code_text == code_json == 1
    assert "2 passed, 1 failed" in text
    assert (data["passed"], data["failed"]) == (2, 1)
    assert "FAIL  broken" in text


def test_omega_seed_overrides(capsys, monkeypatch):
    from natfromint import cli

    seen = []
    monkeypatch.setattr(cli, "run_suite", lambda level, seed: seen.append(seed) or _empty_report())
    monkeypatch.setenv("OMEGA_SEED", "99")
    assert main(["verify", "--seed", "1"]) == 0
    monkeypatch.setenv("OMEGA_SEED", "nope")
    assert main(["verify"]) == 2
    assert seen == [99]


def _empty_report():
    from natfromint.verification import Report

    return Report(suite="full")


def test_bench_json(capsys):
    code, out, _ = run(capsys, "bench", "--max", "16", "--json")
    rows = json.loads(out)
    assert code == 0
    assert {r["operation"] for r in rows} == {"classify", "sub", "m_ind-rank", "nat-add"}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "natfromint", "split", "5"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.splitlines()[0] == "right 2"
