"""JSON matroid files.

One object per file, keyed by ``type``::

    {"type": "uniform", "rank": 2, "size": 4}
    {"type": "graphic", "vertices": 4, "edges": [[0, 1], [1, 2]]}
    {"type": "gf2", "matrix": [[1, 0, 1], [0, 1, 1]]}
    {"type": "bases", "size": 2, "bases": [[0], [1]]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import InvalidSpec, MatroidError
from .matroid import (BasesSpec, GF2Spec, GraphicSpec, Matroid, MatroidSpec,
                      UniformSpec, build)


class ParseError(MatroidError):
    pass


def _int(doc: dict, key: str) -> int:
    v = doc.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParseError(f"field {key!r} must be an integer")
    return v


def _int_rows(doc: dict, key: str) -> tuple[tuple[int, ...], ...]:
    v = doc.get(key)
    if not isinstance(v, list) or not all(
            isinstance(row, list) and all(isinstance(e, int) and not isinstance(e, bool) for e in row)
            for row in v):
        raise ParseError(f"field {key!r} must be a list of integer lists")
    return tuple(tuple(row) for row in v)


def spec_from_dict(doc: Any) -> MatroidSpec:
    if not isinstance(doc, dict):
        raise ParseError("matroid file must hold a JSON object")
    kind = doc.get("type")
    if kind == "uniform":
        return UniformSpec(_int(doc, "rank"), _int(doc, "size"))
    if kind == "graphic":
        edges = _int_rows(doc, "edges")
        if any(len(e) != 2 for e in edges):
            raise ParseError("edges are pairs [u, v]")
        return GraphicSpec(_int(doc, "vertices"), edges)
    if kind == "gf2":
        return GF2Spec(_int_rows(doc, "matrix"))
    if kind == "bases":
        return BasesSpec(_int(doc, "size"), _int_rows(doc, "bases"))
    raise ParseError(f"unknown matroid type {kind!r}")


def spec_to_dict(spec: MatroidSpec) -> dict:
    if isinstance(spec, UniformSpec):
        return {"type": "uniform", "rank": spec.rank, "size": spec.size}
    if isinstance(spec, GraphicSpec):
        return {"type": "graphic", "vertices": spec.vertices, "edges": [list(e) for e in spec.edges]}
    if isinstance(spec, GF2Spec):
        return {"type": "gf2", "matrix": [list(r) for r in spec.matrix]}
    if isinstance(spec, BasesSpec):
        return {"type": "bases", "size": spec.size, "bases": [list(b) for b in spec.bases]}
    raise TypeError(spec)


def load_spec(path: str | Path) -> MatroidSpec:
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}") from exc
    return spec_from_dict(doc)


def load_matroid(path: str | Path) -> Matroid:
    """Parse and build; InvalidSpec is reported as a parse error."""
    spec = load_spec(path)
    try:
        return build(spec)
    except InvalidSpec as exc:
        raise ParseError(f"{path}: {exc}") from exc


def save_spec(spec: MatroidSpec, path: str | Path) -> None:
    Path(path).write_text(json.dumps(spec_to_dict(spec)) + "\n")
