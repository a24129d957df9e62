"""JSON interchange for ADHM data.

A datum document is an object with integer fields ``c`` and ``r`` and
matrix fields ``A`` (c x c), ``B`` (c x c), ``I`` (c x r) and ``J``
(r x c).  Matrices are row-major lists of rows; entries are rational
strings such as ``"3"`` or ``"-7/2"``.
"""

from __future__ import annotations

import json

from .core import AdhmDatum
from .ratmat import Matrix, format_scalar, parse_scalar

__all__ = [
    "DatumFormatError",
    "matrix_to_json",
    "matrix_from_json",
    "datum_to_dict",
    "serialize_datum",
    "parse_datum",
    "load_datum",
]


class DatumFormatError(ValueError):
    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def matrix_to_json(M: Matrix) -> list[list[str]]:
    return [[format_scalar(v) for v in row] for row in M.tolist()]


def _entry(value, field: str):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise DatumFormatError(field, f"entry {value!r} is not a rational string")
    if isinstance(value, int):
        return value
    try:
        return parse_scalar(value)
    except ValueError as exc:
        raise DatumFormatError(field, str(exc)) from None


def matrix_from_json(data, rows: int, cols: int, field: str = "matrix") -> Matrix:
    if not isinstance(data, list):
        raise DatumFormatError(field, "expected a list of rows")
    if len(data) != rows:
        raise DatumFormatError(field, f"expected {rows} rows, got {len(data)}")
    out = []
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise DatumFormatError(field, f"row {i}: expected {cols} entries, got {got}")
        out.append([_entry(v, field) for v in row])
    return Matrix(out, rows=rows, cols=cols)


def datum_to_dict(X: AdhmDatum) -> dict:
    return {
        "c": X.c,
        "r": X.r,
        "A": matrix_to_json(X.A),
        "B": matrix_to_json(X.B),
        "I": matrix_to_json(X.I),
        "J": matrix_to_json(X.J),
    }


def serialize_datum(X: AdhmDatum, indent: int | None = None) -> str:
    return json.dumps(datum_to_dict(X), indent=indent)


def parse_datum(text: str | dict) -> AdhmDatum:
    """Validate and decode a datum document.

    Errors name the offending field: a missing key, a non-integer
    dimension, a malformed rational or a block of the wrong shape.
    """
    if isinstance(text, dict):
        doc = text
    else:
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DatumFormatError("document", f"invalid JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise DatumFormatError("document", "expected a JSON object")
    for key in ("c", "r", "A", "B", "I", "J"):
        if key not in doc:
            raise DatumFormatError(key, "missing field")
    dims = {}
    for key in ("c", "r"):
        v = doc[key]
        if isinstance(v, bool) or not isinstance(v, int) or v < 0:
            raise DatumFormatError(key, f"expected a non-negative integer, got {v!r}")
        dims[key] = v
    c, r = dims["c"], dims["r"]
    A = matrix_from_json(doc["A"], c, c, "A")
    B = matrix_from_json(doc["B"], c, c, "B")
    I = matrix_from_json(doc["I"], c, r, "I")
    J = matrix_from_json(doc["J"], r, c, "J")
    return AdhmDatum(A, B, I, J)


def load_datum(path) -> AdhmDatum:
    with open(path, encoding="utf-8") as fh:
        return parse_datum(fh.read())
