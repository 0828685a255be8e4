import json

import pytest

from frobquot.cli import main
from frobquot.grading import group_Z
from frobquot.serialize import from_json, save
from frobquot.tmod import BarModule


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_linebundle_and_dcok_both(tmp_path, capsys):
    path = tmp_path / "m.json"
    code, _, _ = run(capsys, "linebundle", "2", "2", "3", "1,0,2", "--out", str(path))
    assert code == 0
    code, out, _ = run(capsys, "dcok", str(path), "--both")
    assert code == 0
    doc = json.loads(out)
    assert doc["isomorphic"] is True
    for side in ("direct", "staged"):
        assert from_json(doc[side]).is_zero()


def test_dcok_nonzero_direct(tmp_path, capsys):
    path = tmp_path / "m.json"
    run(capsys, "linebundle", "2", "2", "3", "1,1,0", "--out", str(path))
    code, out, _ = run(capsys, "dcok", str(path), "--direct")
    assert code == 0 and "staged" not in json.loads(out)


def test_example_65_matches_golden(capsys):
    code, out, _ = run(capsys, "example", "6.5")
    assert code == 0
    assert "golden: match" in out
    assert "O(x+y)" in out and "(projective)" in out


def test_example_46(capsys):
    code, out, _ = run(capsys, "--trials", "8", "example", "4.6")
    assert code == 0
    assert "agree: True" in out


def test_sthom_projective_is_zero(tmp_path, capsys, K):
    Z = group_Z("d")
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    save(a, BarModule.from_bars(Z, 2, Z(1), [(2, Z(0))], K))
    save(b, BarModule.from_bars(Z, 2, Z(1), [(1, Z(0)), (2, Z(1))], K))
    code, out, _ = run(capsys, "sthom", str(a), str(b))
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(capsys, "sthom", str(b), str(b))
    assert out.strip() == "1"


def test_decompose_barmodule(tmp_path, capsys, K):
    Z = group_Z("d")
    f = tmp_path / "x.json"
    save(f, BarModule.from_bars(Z, 3, Z(1), [(3, Z(0)), (1, Z(2))], K))
    code, out, _ = run(capsys, "decompose", str(f))
    assert code == 0
    assert "bars: " in out and "fitting: " in out


def test_validate_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "factorization"')
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 2 and "line" in err
    path = tmp_path / "m.json"
    run(capsys, "linebundle", "2", "2", "3", "0,0,0", "--out", str(path))
    doc = json.loads(path.read_text())
    # +(x^2 + z^3) violates the sign convention of the y-cycle
    doc["maps"][1] = [["x^2 + z^3"]]
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "validate", str(broken))
    assert code == 1 and "invalid" in out


def test_usage_errors(capsys, tmp_path):
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2
    code, _, _ = run(capsys, "--field", "f4", "verify", "barcode", "1", "0")
    assert code == 2
    code, _, _ = run(capsys, "verify", "nope")
    assert code == 2
    code, _, _ = run(capsys, "validate", str(tmp_path / "missing.json"))
    assert code == 2


@pytest.mark.parametrize("prop,trials,seed", [("lemma22", 500, 1), ("dcok-oracle", 50, 7), ("cok-kernel", 100, 3)])
def test_verify_reports(capsys, prop, trials, seed):
    code, out, _ = run(capsys, "verify", prop, str(trials), str(seed))
    rep = json.loads(out)
    assert code == 0
    assert rep["pass"] == trials and rep["fail"] == 0 and rep["seed"] == seed


def test_verify_parallel_matches_serial(capsys):
    serial = run(capsys, "verify", "inf-kernel", "12", "5")[1]
    parallel = run(capsys, "verify", "inf-kernel", "12", "5", "--jobs", "2")[1]
    assert serial == parallel


def test_dot_command(tmp_path, capsys):
    path, out = tmp_path / "m.json", tmp_path / "g.dot"
    run(capsys, "linebundle", "2", "3", "3", "1,1,0", "--out", str(path))
    code, _, _ = run(capsys, "dot", str(path), str(out))
    assert code == 0 and out.read_text().startswith("digraph")


def test_output_deterministic(tmp_path, capsys):
    path = tmp_path / "m.json"
    run(capsys, "linebundle", "2", "3", "3", "1,1,1", "--out", str(path))
    a = run(capsys, "dcok", str(path), "--both", "--seed", "3")[1]
    b = run(capsys, "dcok", str(path), "--both", "--seed", "3")[1]
    assert a == b
