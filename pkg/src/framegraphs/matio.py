"""Shared matrix / frame serialization.

Structured text: a "rows r" line, a "cols c" line, then r lines of c
entries printed with 17 significant digits, which round-trips doubles
exactly.  Blank lines and '#' comments are ignored on input.
"""

from __future__ import annotations

import numpy as np

from .frames import Frame


class MatrixFormatError(ValueError):
    pass


def matrix_to_text(mat: np.ndarray) -> str:
    mat = np.asarray(mat, dtype=float)
    if mat.ndim != 2:
        raise MatrixFormatError(f"expected a 2-d matrix, got shape {mat.shape}")
    lines = [f"rows {mat.shape[0]}", f"cols {mat.shape[1]}"]
    for row in mat:
        lines.append(" ".join(format(x, ".17g") for x in row))
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str) -> np.ndarray:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if len(rows) < 2 or not rows[0].startswith("rows ") or not rows[1].startswith("cols "):
        raise MatrixFormatError("matrix text must start with 'rows r' and 'cols c'")
    try:
        r = int(rows[0].split()[1])
        c = int(rows[1].split()[1])
    except (IndexError, ValueError):
        raise MatrixFormatError("bad rows/cols header") from None
    body = rows[2:]
    if len(body) != r:
        raise MatrixFormatError(f"expected {r} data rows, found {len(body)}")
    data = []
    for line in body:
        vals = line.split()
        if len(vals) != c:
            raise MatrixFormatError(f"expected {c} entries per row, got {len(vals)}")
        try:
            data.append([float(v) for v in vals])
        except ValueError:
            raise MatrixFormatError(f"bad numeric entry in {line!r}") from None
    return np.array(data, dtype=float)


def frame_to_text(f: Frame) -> str:
    return matrix_to_text(f.synthesis)


def frame_from_text(text: str) -> Frame:
    return Frame(matrix_from_text(text))
