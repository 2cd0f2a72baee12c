"""
Frame and matrix files, and deterministic report rendering.

Frame files are JSON documents ``{"dim": d, "vectors": [[...], ...],
"name": "..."}``; matrix files are ``{"rows": r, "cols": c, "entries":
[...]}`` with entries in row-major order. Everything is written through
:func:`dumps`, which sorts keys and prints floats with 17 significant
digits so that output bytes depend only on the values and doubles
round-trip exactly.
"""
from __future__ import annotations

import hashlib
import json
import math
from pathlib import Path

import numpy as np

from .errors import FrameError
from .frames import Frame
from .linalg import as_mat

__all__ = [
    "FileFormatError",
    "dumps",
    "format_float",
    "frame_to_dict",
    "frame_from_dict",
    "read_frame",
    "write_frame",
    "matrix_to_dict",
    "matrix_from_dict",
    "read_matrix",
    "digest",
]


class FileFormatError(FrameError, ValueError):
    """A frame or matrix file is unreadable or malformed."""


def format_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x}")
    text = format(x, ".17g")
    if text.lstrip("-").isdigit():
        text += ".0"
    return text


def _scalar(obj) -> str | None:
    if obj is None:
        return "null"
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return format_float(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    return None


def _render(obj, indent: int, level: int) -> str:
    s = _scalar(obj)
    if s is not None:
        return s
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_render(obj[k], indent, level + 1)}"
                 for k in sorted(obj, key=str)]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if all(_scalar(x) is not None for x in obj):
            return "[" + ", ".join(_scalar(x) for x in obj) + "]"
        return "[\n" + ",\n".join(pad + _render(x, indent, level + 1) for x in obj) + "\n" + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, indent: int = 2) -> str:
    """Deterministic JSON text for nested dicts, lists and scalars, newline-terminated."""
    return _render(obj, indent, 0) + "\n"


def _reject_constant(token):
    raise FileFormatError(f"non-finite literal {token!r} is not allowed")


def _load(path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise FileFormatError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise FileFormatError(f"{path}: top level must be an object")
    return doc


def _is_number(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x)


def frame_to_dict(f: Frame) -> dict:
    doc = {"dim": f.dim, "vectors": [[float(x) for x in v] for v in f.vectors]}
    if f.name:
        doc["name"] = f.name
    return doc


def frame_from_dict(doc: dict) -> Frame:
    dim = doc.get("dim")
    vectors = doc.get("vectors")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise FileFormatError("'dim' must be a positive integer")
    if not isinstance(vectors, list):
        raise FileFormatError("'vectors' must be a list of lists")
    for i, v in enumerate(vectors):
        if not isinstance(v, list) or len(v) != dim:
            raise FileFormatError(f"vector {i} must be a list of length {dim}")
        if not all(_is_number(x) for x in v):
            raise FileFormatError(f"vector {i} has non-numeric or non-finite entries")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise FileFormatError("'name' must be a string")
    return Frame(np.array(vectors, dtype=np.float64).reshape(len(vectors), dim),
                 name=name, dim=dim)


def read_frame(path) -> Frame:
    return frame_from_dict(_load(path))


def write_frame(f: Frame, path) -> None:
    Path(path).write_text(dumps(frame_to_dict(f)), encoding="utf-8")


def matrix_to_dict(m) -> dict:
    m = as_mat(m)
    return {"rows": m.shape[0], "cols": m.shape[1], "entries": m.ravel().tolist()}


def matrix_from_dict(doc: dict) -> np.ndarray:
    rows, cols, entries = doc.get("rows"), doc.get("cols"), doc.get("entries")
    for key, val in (("rows", rows), ("cols", cols)):
        if not isinstance(val, int) or isinstance(val, bool) or val < 1:
            raise FileFormatError(f"'{key}' must be a positive integer")
    if not isinstance(entries, list) or len(entries) != rows * cols:
        raise FileFormatError(f"'entries' must be a list of rows*cols = {rows * cols} numbers")
    if not all(_is_number(x) for x in entries):
        raise FileFormatError("matrix has non-numeric or non-finite entries")
    return np.array(entries, dtype=np.float64).reshape(rows, cols)


def read_matrix(path) -> np.ndarray:
    return matrix_from_dict(_load(path))


def digest(path) -> str:
    return "sha256:" + hashlib.sha256(Path(path).read_bytes()).hexdigest()
