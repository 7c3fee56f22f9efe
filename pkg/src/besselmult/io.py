"""CSV and JSON readers/writers.

Matrix CSV: one row per sequence element, comma separated. Complex entries
are written ``a+bi`` / ``a-bi``. Symbol CSV is a single column. Floats are
written with ``repr`` so a write/read round trip is bit exact.
"""

from __future__ import annotations

import csv
import json
import math
from pathlib import Path

import numpy as np

from .core import BesselMultError

__all__ = [
    "InputError",
    "format_scalar",
    "parse_scalar",
    "read_matrix_csv",
    "write_matrix_csv",
    "read_symbol_csv",
    "write_symbol_csv",
    "encode_vector",
    "decode_vector",
    "dump_json",
]


class InputError(BesselMultError):
    """Malformed or missing input file."""


def format_scalar(z) -> str:
    if isinstance(z, (complex, np.complexfloating)):
        re, im = float(z.real), float(z.imag)
        sign = "-" if math.copysign(1.0, im) < 0 else "+"
        return f"{re!r}{sign}{abs(im)!r}i"
    return repr(float(z))


def parse_scalar(token: str):
    tok = token.strip()
    if not tok:
        raise ValueError("empty field")
    if tok.endswith(("i", "j")) and tok.lower() not in ("inf", "-inf", "+inf"):
        return complex(tok[:-1] + "j")
    return float(tok)


def _rows(path):
    path = Path(path)
    if not path.is_file():
        raise InputError(f"{path}: file not found")
    with path.open(newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue
            if row[0].lstrip().startswith("#"):
                continue
            yield lineno, row


def read_matrix_csv(path) -> np.ndarray:
    values, width = [], None
    for lineno, row in _rows(path):
        if width is None:
            width = len(row)
        elif len(row) != width:
            raise InputError(f"{path}:{lineno}: ragged row, expected {width} columns, got {len(row)}")
        try:
            values.append([parse_scalar(x) for x in row])
        except ValueError as exc:
            raise InputError(f"{path}:{lineno}: cannot parse entry ({exc})") from None
    if not values:
        raise InputError(f"{path}: no data rows")
    if any(isinstance(x, complex) for r in values for x in r):
        return np.array(values, dtype=complex)
    return np.array(values, dtype=float)


def read_symbol_csv(path) -> np.ndarray:
    mat = read_matrix_csv(path)
    if mat.shape[1] != 1:
        raise InputError(f"{path}: symbol file must have a single column, got {mat.shape[1]}")
    return mat[:, 0]


def write_matrix_csv(path, matrix) -> None:
    A = np.atleast_2d(np.asarray(matrix))
    cplx = np.iscomplexobj(A)
    with Path(path).open("w", newline="") as fh:
        w = csv.writer(fh)
        for row in A:
            w.writerow([format_scalar(complex(x) if cplx else x) for x in row])


def write_symbol_csv(path, values) -> None:
    write_matrix_csv(path, np.asarray(values).reshape(-1, 1))


def encode_vector(v):
    v = np.asarray(v)
    if np.iscomplexobj(v):
        return [format_scalar(complex(x)) for x in v]
    return [float(x) for x in v]


def decode_vector(items):
    if any(isinstance(x, str) for x in items):
        return np.array([parse_scalar(x) if isinstance(x, str) else x for x in items], dtype=complex)
    return np.array(items, dtype=float)


def _default(o):
    if isinstance(o, np.ndarray):
        return encode_vector(o.ravel()) if o.ndim <= 1 else [encode_vector(r) for r in o]
    if isinstance(o, (np.floating, np.integer)):
        return o.item()
    if isinstance(o, np.bool_):
        return bool(o)
    if isinstance(o, (complex, np.complexfloating)):
        return format_scalar(complex(o))
    if hasattr(o, "to_dict"):
        return o.to_dict()
    raise TypeError(f"cannot serialize {type(o).__name__}")


def _clean(obj):
    # JSON has no inf/nan literals that every reader accepts
    if isinstance(obj, float) and not math.isfinite(obj):
        return "inf" if obj > 0 else ("-inf" if obj < 0 else "nan")
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def dump_json(obj, path=None, indent=2) -> str:
    text = json.dumps(_clean(json.loads(json.dumps(obj, default=_default, allow_nan=True))), indent=indent)
    if path is not None:
        Path(path).write_text(text + "\n")
    return text
