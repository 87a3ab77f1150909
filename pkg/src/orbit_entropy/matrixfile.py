"""JSON matrix files: ``{"d": n, "rows": [[[re, im], ...], ...]}``."""

import hashlib
import json
from pathlib import Path

import numpy as np

from .errors import InvalidMatrix, OrbitEntropyError
from .matcore import as_matrix, hermitian


class MatrixFileError(OrbitEntropyError, ValueError):
    pass


def parse_matrix(doc):
    if not isinstance(doc, dict) or "d" not in doc or "rows" not in doc:
        raise MatrixFileError("matrix file must be an object with 'd' and 'rows'")
    d = doc["d"]
    rows = doc["rows"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise MatrixFileError(f"'d' must be a positive integer, got {d!r}")
    if not isinstance(rows, list) or len(rows) != d:
        raise MatrixFileError(f"'rows' must hold {d} rows")
    out = np.empty((d, d), dtype=np.complex128)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != d:
            raise MatrixFileError(f"row {i} must hold {d} entries")
        for j, entry in enumerate(row):
            if (
                not isinstance(entry, list)
                or len(entry) != 2
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in entry)
            ):
                raise MatrixFileError(f"entry ({i}, {j}) must be a [real, imag] pair")
            out[i, j] = complex(entry[0], entry[1])
    try:
        return as_matrix(out)
    except InvalidMatrix as exc:
        raise MatrixFileError(str(exc)) from exc


def read_matrix(path, require_hermitian=True):
    """Load a matrix file; Hermitian files are symmetrized (residual must be <= 1e-8)."""
    try:
        doc = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise MatrixFileError(f"{path}: {exc}") from exc
    mat = parse_matrix(doc)
    return hermitian(mat) if require_hermitian else mat


def matrix_to_doc(a):
    a = np.asarray(a, dtype=np.complex128)
    return {
        "d": int(a.shape[0]),
        "rows": [[[float(z.real), float(z.imag)] for z in row] for row in a],
    }


def write_matrix(path, a):
    Path(path).write_text(json.dumps(matrix_to_doc(a)) + "\n")


def file_digest(path):
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()
