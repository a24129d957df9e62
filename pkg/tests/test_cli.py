import json
import subprocess
import sys

import pytest

from adhm.cli import main
from adhm.core import AdhmDatum
from adhm.experiments import regular_r2c1, stable_point
from adhm.io import load_datum, parse_datum, serialize_datum


@pytest.fixture
def write(tmp_path):
    def _write(X, name="x.json"):
        path = tmp_path / name
        path.write_text(serialize_datum(X))
        return str(path)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def kv(text):
    return dict(line.split(": ", 1) for line in text.splitlines() if ": " in line)


def test_check(capsys, write):
    code, out, _ = run(capsys, "check", "--in", write(regular_r2c1()))
    assert code == 0 and "solution: true" in out.splitlines()
    bad = AdhmDatum.from_lists([[0]], [[0]], [[1]], [[1]])
    code, out, _ = run(capsys, "check", "--in", write(bad))
    assert code == 1 and kv(out)["solution"] == "false"


def test_classify_zero_datum(capsys, write):
    code, out, _ = run(capsys, "classify", "--in", write(AdhmDatum.zero(1, 2)))
    rep = kv(out)
    assert code == 0
    assert rep["is_solution"] == "true"
    for key in ("stable", "costable", "regular", "sj", "ts"):
        assert rep[key] == "false"
    keys = [line.split(":")[0] for line in out.splitlines()]
    assert keys == sorted(keys)


def test_json_output_carries_the_same_fields(capsys, write):
    path = write(stable_point())
    _, text, _ = run(capsys, "classify", "--in", path)
    _, js, _ = run(capsys, "classify", "--in", path, "--json")
    doc = json.loads(js)
    assert set(doc) == set(kv(text))
    assert doc["stable"] is True and doc["tangent_dim"] == 3


def test_audit_dimensions(capsys):
    code, out, _ = run(capsys, "audit-dimensions", "--rmax", "3", "--cmax", "4")
    lines = out.splitlines()[1:]
    assert code == 0 and len(lines) == 45
    assert all(line.split()[-1] == "true" and line.split()[3] == line.split()[4] for line in lines)


def test_sample_is_seeded_and_env_overrides(capsys, monkeypatch):
    args = ("sample", "--r", "2", "--c", "3", "--s", "1", "--count", "2", "--conjugate")
    monkeypatch.delenv("ADHM_SEED", raising=False)
    _, a, _ = run(capsys, *args, "--seed", "9")
    _, b, _ = run(capsys, *args, "--seed", "9")
    assert a == b
    monkeypatch.setenv("ADHM_SEED", "9")
    _, c, _ = run(capsys, *args, "--seed", "1")
    assert c == a
    data = [parse_datum(line) for line in a.splitlines()]
    assert len(data) == 2 and all(X.c == 3 and X.r == 2 for X in data)


def test_sample_to_directory(capsys, tmp_path):
    code, out, _ = run(capsys, "sample", "--r", "1", "--c", "2", "--s", "0", "--count", "3",
                       "--out", str(tmp_path / "d"))
    files = out.split()
    assert code == 0 and len(files) == 3
    assert all(load_datum(f).I.is_zero() for f in files)


def test_monad_commands(capsys, write):
    path = write(stable_point())
    code, out, _ = run(capsys, "monad", "--in", path, "h0", "--n", "2")
    assert code == 0 and kv(out)["h0"] == "5"
    _, out, _ = run(capsys, "monad", "--in", path, "fiber", "--point", "1,1,1")
    rep = kv(out)
    assert (rep["rank_alpha"], rep["rank_beta"], rep["h0_fiber"], rep["h1_fiber"]) == ("1", "1", "1", "0")
    _, out, _ = run(capsys, "monad", "--in", write(AdhmDatum.zero(1, 1), "z.json"), "support")
    assert "  (0,0) x 1" in out.splitlines()
    _, out, _ = run(capsys, "monad", "--in", write(AdhmDatum.zero(1, 1), "z.json"), "invariants", "--json")
    assert json.loads(out) == {"rank": 1, "charge": 0, "length": 1, "chern_character": [1, 1]}


def test_uhlenbeck_command(capsys, write, tmp_path):
    out_path = tmp_path / "reg.json"
    code, out, _ = run(capsys, "uhlenbeck", "--in", write(stable_point()), "--out", str(out_path), "--json")
    doc = json.loads(out)
    assert code == 0 and doc["cloud_size"] == 1 and doc["points"] == ["(0,0) x 1"]
    assert load_datum(out_path).c == 0


def test_remark_experiment(capsys):
    code, out, _ = run(capsys, "remark-experiment", "--json")
    first, second = json.loads(out)
    assert code == 0
    assert first["mu_vanishes"] and first["sj"] and not first["stable"] and not first["costable"]
    assert second["mu_vanishes"] and second["stabilizer_lie_dim"] == len(second["stabilizer_lie_basis"])


def test_sweep_subset(capsys):
    code, out, _ = run(capsys, "sweep", "--quick", "--only", "1", "--only", "13")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 2 and all(line.startswith("[PASS]") for line in lines)


def test_errors_exit_nonzero(capsys, write, tmp_path):
    code, _, err = run(capsys, "check", "--in", str(tmp_path / "missing.json"))
    assert code == 2 and "error" in err
    bad = tmp_path / "bad.json"
    bad.write_text('{"c": 1, "r": 1, "A": [["0"]], "B": [["0"]], "I": [["1", "2"]], "J": [["0"]]}')
    code, _, err = run(capsys, "classify", "--in", str(bad))
    assert code == 2 and "I:" in err
    code, _, err = run(capsys, "uhlenbeck", "--in", write(AdhmDatum.zero(1, 1)))
    assert code == 2
    code, _, err = run(capsys, "monad", "--in", write(stable_point()), "fiber", "--point", "0,0,0")
    assert code == 2


def test_unknown_flags_are_rejected(capsys):
    with pytest.raises(SystemExit) as info:
        main(["audit-dimensions", "--rmax", "1", "--cmax", "1", "--bogus"])
    assert info.value.code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "adhm.cli", "audit-dimensions", "--rmax", "1", "--cmax", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "formula" in res.stdout


def test_sweep_reports_failures_truthfully(capsys, monkeypatch):
    from adhm import acceptance

    def broken(cfg):
        return acceptance.CriterionResult(13, "injected", False, 1, "forced failure")

    monkeypatch.setitem(acceptance.CRITERIA, 13, broken)
    code, out, _ = run(capsys, "sweep", "--quick", "--only", "13")
    assert code == 1 and out.startswith("[FAIL]")
