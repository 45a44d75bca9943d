"""Canonical JSON and CSV formats.

Pair file::

    {"n": 10, "A": [[re, im], ...100 entries, row-major], "B": [...],
     "t": ..., "u": ..., "c": [c4, c5, c6, c7], "mu": ..., "report": {...}}

Exact rationals are ``{"num": "<int>", "den": "<int>"}``, complex floats are
``[re, im]``, real floats use Python's shortest round-trip repr.  Non-finite
floats become the strings ``"inf"``, ``"-inf"``, ``"nan"``.  Output has sorted
keys, two-space indentation and a trailing LF, so load -> dump is byte-stable.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction

import numpy as np

from .errors import PreconditionError


class MalformedFile(PreconditionError):
    pass


def to_jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, Fraction):
        return {"num": str(obj.numerator), "den": str(obj.denominator)}
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if math.isfinite(x):
            return x
        return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")
    if isinstance(obj, (complex, np.complexfloating)):
        z = complex(obj)
        return [to_jsonable(z.real), to_jsonable(z.imag)]
    if obj is None or isinstance(obj, str):
        return obj
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def decode_scalar(v):
    """Inverse of :func:`to_jsonable` for a single scalar."""
    if isinstance(v, dict) and set(v) == {"num", "den"}:
        return Fraction(int(v["num"]), int(v["den"]))
    if isinstance(v, list) and len(v) == 2:
        return complex(_decode_float(v[0]), _decode_float(v[1]))
    if isinstance(v, str):
        try:
            return Fraction(v)
        except ValueError:
            return _decode_float(v)
    if isinstance(v, bool) or v is None:
        raise MalformedFile(f"not a scalar: {v!r}")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        return v
    raise MalformedFile(f"not a scalar: {v!r}")


def _decode_float(v) -> float:
    if isinstance(v, str):
        if v in ("inf", "-inf", "nan"):
            return float(v)
        raise MalformedFile(f"bad float {v!r}")
    return float(v)


def _matrix(entries, n):
    if not isinstance(entries, list) or len(entries) != n * n:
        raise MalformedFile(f"matrix must have {n * n} [re, im] entries")
    try:
        vals = [complex(float(re), float(im)) for re, im in entries]
    except (TypeError, ValueError) as e:
        raise MalformedFile(f"bad matrix entry: {e}") from e
    return np.array(vals, dtype=complex).reshape(n, n)


def pair_document(pair) -> dict:
    n = pair.A.shape[0]
    return {"n": n,
            "A": [[z.real, z.imag] for z in pair.A.ravel()],
            "B": [[z.real, z.imag] for z in pair.B.ravel()],
            "t": pair.t, "u": pair.u, "c": list(pair.c), "mu": pair.mu,
            "report": pair.report}


def dump_pair(pair) -> str:
    return dumps(pair_document(pair))


def load_pair(text: str) -> dict:
    """Parse a pair file; matrices become arrays, scalars are decoded."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedFile(f"invalid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise MalformedFile("pair file must hold a JSON object")
    for key in ("n", "A", "B", "t", "u", "c", "mu"):
        if key not in doc:
            raise MalformedFile(f"missing key {key!r}")
    n = doc["n"]
    if not isinstance(n, int) or n < 1:
        raise MalformedFile("n must be a positive integer")
    return {"n": n, "A": _matrix(doc["A"], n), "B": _matrix(doc["B"], n),
            "t": decode_scalar(doc["t"]), "u": decode_scalar(doc["u"]),
            "c": [decode_scalar(x) for x in doc["c"]], "mu": _decode_float(doc["mu"]),
            "report": doc.get("report", {})}


def document_from_loaded(d: dict) -> dict:
    """Re-encode a loaded pair (inverse of :func:`load_pair`)."""
    return {"n": d["n"],
            "A": [[z.real, z.imag] for z in d["A"].ravel()],
            "B": [[z.real, z.imag] for z in d["B"].ravel()],
            "t": d["t"], "u": d["u"], "c": d["c"], "mu": d["mu"], "report": d["report"]}


def grid_csv(nodes: np.ndarray, smin: np.ndarray) -> str:
    """CSV with header ``re,im,smin``; one row per node, row-major, 17 significant digits."""
    lines = ["re,im,smin"]
    for z, s in zip(nodes.ravel(), smin.ravel()):
        lines.append(f"{z.real:.17g},{z.imag:.17g},{s:.17g}")
    return "\n".join(lines) + "\n"


def read_grid_csv(text: str):
    rows = text.strip().splitlines()
    if not rows or rows[0] != "re,im,smin":
        raise MalformedFile("grid CSV must start with header re,im,smin")
    data = np.array([[float(x) for x in r.split(",")] for r in rows[1:]])
    return data[:, 0] + 1j * data[:, 1], data[:, 2]
