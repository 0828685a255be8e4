"""JSON load/save for every object kind, plus DOT output for grids.

Every file is a UTF-8 JSON object with a top-level ``kind`` tag:
``group``, ``barmodule``, ``grid``, ``factorization`` or ``mcm``.
"""

from __future__ import annotations

import json

from .field import DEFAULT_FIELD
from .grading import GradingGroup
from .inflation import GridObject, validate_grid
from .mfact import Factorization, validate_factorization
from .tmod import BarModule
from .wpl import MCMPresentation, validate_mcm

KINDS = ("group", "barmodule", "grid", "factorization", "mcm")


class SchemaError(ValueError):
    pass


class ValidationError(ValueError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


def to_json(obj) -> dict:
    if isinstance(obj, GradingGroup):
        return {"kind": "group", **obj.to_json()}
    if isinstance(obj, (BarModule, GridObject, Factorization, MCMPresentation)):
        return obj.to_json()
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_json(obj), indent=2, sort_keys=True) + "\n"


def _validate(obj):
    if isinstance(obj, MCMPresentation):
        rep = validate_mcm(obj)
    elif isinstance(obj, Factorization):
        rep = validate_factorization(obj)
    elif isinstance(obj, GridObject):
        rep = validate_grid(obj)
    else:
        return
    if not rep.ok:
        first = rep.errors[0] if hasattr(rep, "errors") else rep.failures[0]
        where = ""
        if getattr(rep, "composite_index", None) is not None:
            where = f" (composite {rep.composite_index})"
        raise ValidationError(f"{type(obj).__name__} failed validation{where}: {first}", rep)


def from_json(data, field=None, validate: bool = True):
    K = field or DEFAULT_FIELD
    if not isinstance(data, dict):
        raise SchemaError("top level must be a JSON object")
    kind = data.get("kind")
    if kind not in KINDS:
        raise SchemaError(f"field 'kind' must be one of {', '.join(KINDS)}; got {kind!r}")
    try:
        if kind == "group":
            obj = GradingGroup.from_json(data)
        elif kind == "barmodule":
            obj = BarModule.from_json(data, K)
        elif kind == "grid":
            obj = GridObject.from_json(data, K)
        elif kind == "factorization":
            obj = Factorization.from_json(data, K)
        else:
            obj = MCMPresentation.from_json(data, K)
    except KeyError as exc:
        raise SchemaError(f"{kind}: missing field {exc.args[0]!r}") from exc
    except (TypeError, IndexError) as exc:
        raise SchemaError(f"{kind}: malformed field ({exc})") from exc
    if validate:
        _validate(obj)
    return obj


def loads(text: str, field=None, validate: bool = True):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return from_json(data, field, validate)


def load(path, field=None, validate: bool = True):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), field, validate)


def save(path, obj) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


def grid_to_dot(G: GridObject, name: str = "grid") -> str:
    """Cells as nodes in ``(i, j)`` order labelled by their bars; ``h``/``v`` maps as edges."""
    lines = [f"digraph {name} {{", "  node [shape=box];"]
    bars = G.bar_strings()
    for i, j in G.cells():
        lines.append(f'  "c{i + 1}_{j + 1}" [label="({i + 1},{j + 1})\\n{bars[(i, j)]}"];')
    for i, j in G.cells():
        if j + 1 < G.n:
            lines.append(f'  "c{i + 1}_{j + 1}" -> "c{i + 1}_{j + 2}" [label="h"];')
        if i + 1 < G.m:
            lines.append(f'  "c{i + 1}_{j + 1}" -> "c{i + 2}_{j + 1}" [label="v"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
