"""Plan-file serialization.

A plan document is UTF-8 JSON::

    {"version": 1,
     "root": {"type": "sequence",
              "label": "example",
              "children": [
                  {"type": "primitive", "pmf": [[1.0, 0.2], [4.0, 0.8]]},
                  {"type": "primitive", "uniform": {"low": 0, "high": 2, "bins": 2}}]}}

Primitives carry exactly one of ``pmf`` (list of [value, probability]
pairs) or ``uniform`` (expanded to midpoint atoms on load).  ``label`` is
optional everywhere.  Saving always writes the expanded ``pmf`` form, so
a save/load round trip reproduces the tree exactly.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import MakespanError, PlanParseError, PlanSchemaError
from .pmf import Pmf, discretized_uniform
from .tree import Parallel, Primitive, Sequence, TaskTree

SCHEMA_VERSION = 1

_KINDS = {"primitive", "sequence", "parallel"}


def load_plan(path: str | Path) -> TaskTree:
    """Read and validate a plan document; error messages carry the node path."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise PlanParseError(f"{path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PlanParseError(f"{path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise PlanSchemaError(f"{path}: document must be a JSON object")
    version = doc.get("version")
    if version != SCHEMA_VERSION:
        raise PlanSchemaError(f"{path}: unsupported schema version {version!r}")
    if "root" not in doc:
        raise PlanSchemaError(f"{path}: missing 'root'")
    return _parse_node(doc["root"], "root")


def save_plan(tree: TaskTree, path: str | Path) -> None:
    """Write a plan document for ``tree`` (primitives in expanded pmf form)."""
    doc = {"version": SCHEMA_VERSION, "root": _node_to_obj(tree)}
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def _parse_node(obj: object, path: str) -> TaskTree:
    if not isinstance(obj, dict):
        raise PlanSchemaError(f"{path}: node must be an object")
    kind = obj.get("type")
    if kind not in _KINDS:
        raise PlanSchemaError(f"{path}: unknown node type {kind!r}")
    label = obj.get("label")
    if label is not None and not isinstance(label, str):
        raise PlanSchemaError(f"{path}: label must be a string")
    if kind == "primitive":
        return _parse_primitive(obj, path, label)
    children = obj.get("children")
    if not isinstance(children, list) or not children:
        raise PlanSchemaError(f"{path}: composite node needs a non-empty 'children' list")
    parsed = tuple(
        _parse_node(c, f"{path}.children[{i}]") for i, c in enumerate(children)
    )
    node_cls = Sequence if kind == "sequence" else Parallel
    return node_cls(parsed, label=label)


def _parse_primitive(obj: dict, path: str, label: str | None) -> Primitive:
    has_pmf = "pmf" in obj
    has_uniform = "uniform" in obj
    if has_pmf == has_uniform:
        raise PlanSchemaError(f"{path}: primitive needs exactly one of 'pmf' or 'uniform'")
    if has_pmf:
        raw = obj["pmf"]
        if not isinstance(raw, list) or not all(
            isinstance(e, list) and len(e) == 2 for e in raw
        ):
            raise PlanSchemaError(f"{path}: 'pmf' must be a list of [value, probability] pairs")
        try:
            dist = Pmf.from_pairs([(float(v), float(p)) for v, p in raw])
        except (MakespanError, TypeError, ValueError) as exc:
            raise _with_path(exc, path) from exc
        return Primitive(dist, label=label)
    raw = obj["uniform"]
    if not isinstance(raw, dict) or not {"low", "high", "bins"} <= raw.keys():
        raise PlanSchemaError(f"{path}: 'uniform' must be an object with low, high, bins")
    try:
        dist = discretized_uniform(float(raw["low"]), float(raw["high"]), raw["bins"])
    except (MakespanError, TypeError, ValueError) as exc:
        raise _with_path(exc, path) from exc
    return Primitive(dist, label=label)


def _with_path(exc: Exception, path: str) -> Exception:
    cls = type(exc) if isinstance(exc, MakespanError) else PlanSchemaError
    return cls(f"{path}: {exc}")


def _node_to_obj(tree: TaskTree) -> dict:
    obj: dict = {}
    if isinstance(tree, Primitive):
        obj["type"] = "primitive"
        obj["pmf"] = [[v, p] for v, p in tree.pmf.items()]
    else:
        obj["type"] = "sequence" if isinstance(tree, Sequence) else "parallel"
        obj["children"] = [_node_to_obj(c) for c in tree.children]
    if tree.label is not None:
        obj["label"] = tree.label
    return obj
