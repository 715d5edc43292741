"""Deterministic output formatting.

All CLI and file output goes through this module so that identical inputs
produce identical bytes: floats are rendered with 12 significant digits
(round-half-even, lowercase exponent), JSON keys keep insertion order, and
infinities become the quoted strings "inf"/"-inf" (JSON has no inf token).
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

FLOAT_SIG_DIGITS = 12


def format_float(x: float) -> str:
    """Render a finite float with 12 significant digits."""
    if math.isnan(x):
        raise ValueError("cannot format NaN")
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    s = format(float(x), f".{FLOAT_SIG_DIGITS}g")
    if s == "-0":
        s = "0"
    return s


def _emit(obj, out: list) -> None:
    if obj is None:
        out.append("null")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        if math.isinf(obj):
            out.append('"inf"' if obj > 0 else '"-inf"')
        else:
            out.append(format_float(obj))
    elif isinstance(obj, Fraction):
        if obj.denominator == 1:
            out.append(str(obj.numerator))
        else:
            out.append(json.dumps(str(obj)))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(",")
            out.append(json.dumps(str(k)))
            out.append(":")
            _emit(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(",")
            _emit(v, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_json(obj) -> str:
    """Compact JSON with insertion-ordered keys and fixed float format."""
    out: list = []
    _emit(obj, out)
    return "".join(out)


def csv_cell(v) -> str:
    if isinstance(v, float):
        return format_float(v)
    return str(v)


def to_csv(header, rows) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(csv_cell(v) for v in row))
    return "\n".join(lines) + "\n"
