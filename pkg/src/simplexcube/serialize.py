"""JSON/CSV encoding of reports.

Rationals become ``"p/q"`` strings (``"p"`` when integral), floats are
written with 17 significant digits, tuples become lists.  ``decode`` turns
rational strings back into fractions, so ``encode(decode(loads(dumps(
encode(r))))) == encode(r)`` for every report.
"""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import math
import re
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable

import numpy as np

from .exact import format_rational

_RAT = re.compile(r"^-?\d+(/\d+)?$")


def format_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        return repr(x)
    return format(x, ".17g")


def encode(obj: Any) -> Any:
    """Convert a report into plain JSON-ready data."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(format_float(float(obj)))
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: encode(getattr(obj, f.name)) for f in dataclasses.fields(obj)
                if not f.name.startswith("_")}
    if isinstance(obj, dict):
        return {_key(k): encode(v) for k, v in obj.items()}
    if isinstance(obj, (frozenset, set)):
        return [encode(x) for x in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [encode(x) for x in obj]
    if isinstance(obj, np.ndarray):
        return [encode(x) for x in obj.tolist()]
    return obj


def _key(k: Any) -> str:
    if isinstance(k, tuple):
        return " ".join(str(encode(x)) for x in k)
    return str(encode(k)) if not isinstance(k, str) else k


def decode(obj: Any) -> Any:
    """Inverse of :func:`encode` up to container types (lists stay lists)."""
    if isinstance(obj, str) and _RAT.match(obj):
        return Fraction(obj)
    if isinstance(obj, dict):
        return {k: decode(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [decode(x) for x in obj]
    return obj


def dumps(obj: Any) -> str:
    return json.dumps(encode(obj), indent=2, sort_keys=False)


def _cell(x: Any) -> str:
    x = encode(x)
    if x is None:
        return ""
    if isinstance(x, float):
        return format_float(x)
    if isinstance(x, list):
        return ";".join(_cell(v) for v in x)
    return str(x)


def rows_to_csv(rows: Iterable[dict]) -> str:
    rows = list(rows)
    if not rows:
        return ""
    cols: list[str] = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow([_cell(r.get(c)) for c in cols])
    return buf.getvalue()


def report_to_csv(obj: Any) -> str:
    """One ``key,value`` line per top-level field."""
    data = obj if isinstance(obj, dict) else {
        f.name: getattr(obj, f.name) for f in dataclasses.fields(obj) if not f.name.startswith("_")
    }
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["key", "value"])
    for k, v in data.items():
        w.writerow([k, _cell(v)])
    return buf.getvalue()
