import json

import pytest

from frobquot.grading import group_L, group_Z
from frobquot.mfact import strand
from frobquot.poly import HomPoly, univariate_base
from frobquot.serialize import (
    SchemaError,
    ValidationError,
    dumps,
    from_json,
    grid_to_dot,
    load,
    loads,
    save,
    to_json,
)
from frobquot.tmod import BarModule
from frobquot.wpl import dcok_direct, line_bundle, rank2_bundle


def test_barmodule_round_trip(tmp_path, K):
    Z = group_Z("d")
    X = BarModule.from_bars(Z, 3, Z(1), [(3, Z(0)), (1, Z(2)), (2, Z(-1))], K)
    path = tmp_path / "x.json"
    save(path, X)
    assert load(path, K).bars == X.bars


def test_broken_composite_reports_index(K):
    B = univariate_base(K)
    F = strand(B, HomPoly(B, {(2,): 1}), [1, 1], B.group(1))
    data = to_json(F)
    data["maps"][1] = [["2*z"]]
    with pytest.raises(ValidationError) as exc:
        from_json(data, K)
    assert "composite 0" in str(exc.value)
    assert exc.value.report.composite_index == 0


def test_grid_resave_is_stable(tmp_path, K):
    G = dcok_direct(line_bundle(2, 2, 3, group_L(2, 2, 3)(1, 1, 0), K))
    text = dumps(G)
    again = dumps(loads(text, K))
    assert text == again
    assert json.loads(text)["kind"] == "grid"


def test_group_and_mcm(K):
    L = group_L(2, 3, 3)
    assert from_json(to_json(L)) == L
    m = rank2_bundle(2, 2, 3, 1, 2, field=K)
    assert dumps(loads(dumps(m), K)) == dumps(m)


def test_schema_errors(K):
    with pytest.raises(SchemaError, match="line 1"):
        loads("{nope", K)
    with pytest.raises(SchemaError, match="kind"):
        loads('{"kind": "spaceship"}', K)
    with pytest.raises(SchemaError, match="missing field"):
        loads('{"kind": "barmodule"}', K)


def test_dot_output(K):
    G = dcok_direct(line_bundle(2, 3, 3, group_L(2, 3, 3)(1, 1, 0), K))
    dot = grid_to_dot(G)
    assert dot.startswith("digraph grid {")
    assert '"c1_1" -> "c1_2" [label="h"]' in dot
