import json

import pytest

from koornwinder.cli import main
from koornwinder.suites import SUITES

QUAD = {"qh": "1/2", "t0": "3/5", "t0v": "5/4", "t": "2/3", "tn": "2/5", "tnv": "6/5"}
DEGENERATE = {"qh": "1/2", "t0": "2", "t0v": "2/3", "t": "1", "tn": "1", "tnv": "4/5"}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def params_file(tmp_path, values):
    path = tmp_path / "params.json"
    path.write_text(json.dumps(values))
    return str(path)


def test_trivial_polynomial(capsys):
    code, out = run(capsys, "compute-ns", "--n", "2", "--lambda", "0,0")
    assert code == 0
    assert json.loads(out)["poly"] == "1"


def test_symmetric_and_antisymmetric(capsys):
    code, out = run(capsys, "compute-sym", "--lambda", "1,0")
    assert code == 0 and json.loads(out)["kind"] == "sym"
    code, out = run(capsys, "compute-anti", "--lambda", "2,1")
    assert code == 0 and json.loads(out)["kind"] == "antisym"
    assert run(capsys, "compute-anti", "--lambda", "1,0")[0] == 2
    assert run(capsys, "compute-sym", "--lambda", "0,1")[0] == 2


def test_eval_reports_agreement(capsys):
    code, out = run(capsys, "eval", "--lambda", "1,0")
    report = json.loads(out)
    assert code == 0 and report["match"] is True
    assert report["nonsymmetric"]["solver"] == report["nonsymmetric"]["formula"]


def test_normalize_and_norms(capsys):
    assert run(capsys, "normalize", "--lambda", "0,1")[0] == 0
    assert run(capsys, "normalize", "--symmetric", "--lambda", "1,1")[0] == 0
    code, out = run(capsys, "norms", "--lambda", "1,0")
    assert code == 0 and "symmetric_ratio" in json.loads(out)


def test_usage_errors(capsys):
    assert run(capsys, "compute-ns", "--lambda", "1,0,0")[0] == 2
    assert run(capsys, "compute-ns", "--lambda", "a,b")[0] == 2
    assert run(capsys, "compute-ns")[0] == 2
    assert run(capsys, "compute-ns", "--n", "1", "--lambda", "0")[0] == 2
    assert run(capsys, "verify", "no-such-suite")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_bad_parameter_file(capsys, tmp_path):
    path = params_file(tmp_path, {"qh": "1/2"})
    code, out = run(capsys, "compute-ns", "--lambda", "0,0", "--params", path)
    assert code == 2 and json.loads(out)["error"] == "usage"


def test_degenerate_parameters_exit_3(capsys, tmp_path):
    code, out = run(capsys, "compute-ns", "--lambda", "1,0", "--params", params_file(tmp_path, DEGENERATE))
    report = json.loads(out)
    assert code == 3
    assert "gamma(0, 0)" in report["message"] and "gamma(-1, 0)" in report["message"]


def test_list_suites(capsys):
    code, out = run(capsys, "verify", "--list")
    names = [s["name"] for s in json.loads(out)["suites"]]
    assert code == 0 and names == list(SUITES)
    code, out = run(capsys, "verify", "--list", "--table")
    assert code == 0 and "transform" in out


def test_verify_exact_suite(capsys):
    code, out = run(capsys, "verify", "evaluation", "--box", "1")
    report = json.loads(out)
    assert code == 0 and report["pass"] is True


def test_verify_numeric_suite(capsys, tmp_path):
    path = params_file(tmp_path, QUAD)
    code, out = run(capsys, "verify", "constant-term", "--params", path, "--N", "64", "--table")
    assert code == 0 and "PASS" in out


def test_numeric_suites_skip_outside_quadrature(capsys, tmp_path):
    path = params_file(tmp_path, {**QUAD, "t0": "3"})
    code, out = run(capsys, "verify", "residues", "--params", path)
    report = json.loads(out)
    assert code == 0 and report["suites"][0]["skipped"] is True


def test_failed_check_exits_1(capsys):
    code, out = run(capsys, "verify", "constant-term", "--N", "16")
    assert code == 1 and json.loads(out)["pass"] is False


def test_output_is_deterministic(capsys):
    argv = ("verify", "relations", "--seed", "3", "--trials", "4")
    first = json.loads(run(capsys, *argv)[1])
    second = json.loads(run(capsys, *argv)[1])
    for report in (first, second):
        for entry in report["suites"]:
            entry.pop("seconds")
    assert first == second


@pytest.mark.parametrize("name", ["relations", "eigen", "hecke", "duality", "character-formula", "norm-relations"])
def test_exact_suites_pass_on_a_small_box(name):
    from koornwinder.suites import Config, run_suite

    checks = run_suite(name, Config(box=1, trials=5))
    assert checks and all(c.passed for c in checks)
