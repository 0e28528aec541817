"""
JSON interchange for diagrams.

Schema::

    {"crossings": C,
     "arcs": [[attachment, attachment], ...],
     "free_loops": k,
     "boundaries": n + 1}

where an attachment is ``["x", crossing, port]`` or ``["b", boundary, label]``.
Loaded diagrams are tagged as not planarity-verified.
"""

from __future__ import annotations

import json

from .diagram.core import LABELS, Diagram
from .errors import PerfectMatchingError, SchemaError

__all__ = ["diagram_to_dict", "diagram_from_dict", "diagram_to_json", "diagram_from_json"]

_KEYS = ("crossings", "arcs", "free_loops", "boundaries")


def _order(a) -> tuple:
    # boundary points first, labels counterclockwise from NW
    kind, i, p = a
    return (0, i, LABELS.index(p)) if kind == "b" else (1, i, p)


def diagram_to_dict(d: Diagram) -> dict:
    arcs = sorted((sorted(arc, key=_order) for arc in d.arcs), key=lambda arc: _order(arc[0]))
    return {
        "crossings": d.crossings,
        "arcs": [[list(u), list(v)] for u, v in arcs],
        "free_loops": d.free_loops,
        "boundaries": d.boundaries,
    }


def diagram_to_json(d: Diagram, indent: int | None = None) -> str:
    """Serialize with the bit-exact field names of the schema."""
    return json.dumps(diagram_to_dict(d), indent=indent)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _attachment(a) -> tuple:
    if not isinstance(a, list) or len(a) != 3:
        raise SchemaError(f"attachment must be a 3-element list, got {a!r}")
    kind, i, p = a
    if kind == "x":
        if not (_is_int(i) and _is_int(p)):
            raise SchemaError(f"crossing attachment needs integer id and port: {a!r}")
    elif kind == "b":
        if not _is_int(i) or p not in LABELS:
            raise SchemaError(f"boundary attachment needs integer id and NW/NE/SE/SW: {a!r}")
    else:
        raise SchemaError(f"attachment kind must be 'x' or 'b': {a!r}")
    return (kind, i, p)


def diagram_from_dict(obj) -> Diagram:
    """Validate and build a diagram from parsed JSON.

    Raises:
        SchemaError: fields are missing or malformed.
        PerfectMatchingError: attachments are reused or left unmatched.
    """
    if not isinstance(obj, dict):
        raise SchemaError("top-level JSON value must be an object")
    missing = [k for k in _KEYS if k not in obj]
    if missing:
        raise SchemaError(f"missing fields: {missing}")
    extra = sorted(set(obj) - set(_KEYS))
    if extra:
        raise SchemaError(f"unknown fields: {extra}")
    for k in ("crossings", "free_loops", "boundaries"):
        if not _is_int(obj[k]) or obj[k] < 0:
            raise SchemaError(f"{k} must be a nonnegative integer")
    if not isinstance(obj["arcs"], list):
        raise SchemaError("arcs must be a list")
    arcs = []
    for arc in obj["arcs"]:
        if not isinstance(arc, list) or len(arc) != 2:
            raise SchemaError(f"arc must be a pair of attachments: {arc!r}")
        arcs.append((_attachment(arc[0]), _attachment(arc[1])))
    try:
        return Diagram(obj["crossings"], tuple(arcs), obj["free_loops"], obj["boundaries"],
                       planarity_verified=False)
    except PerfectMatchingError:
        raise
    except TypeError as exc:
        raise SchemaError(str(exc)) from exc


def diagram_from_json(text: str) -> Diagram:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return diagram_from_dict(obj)
