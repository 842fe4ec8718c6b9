"""Reading and writing dual matrices/vectors as JSON documents.

A dual matrix file is a single self-describing JSON object:

    {
      "name": "example",
      "rows": 3,
      "cols": 3,
      "standard": [[...], ...],
      "infinitesimal": [[...], ...]
    }

Both parts must be present (the infinitesimal part may be all zero).
Values are written as decimal text with full round-trip precision
(Python's shortest-repr float formatting, up to 17 significant digits).
"""

import json

import numpy as np

from .dual import DualMatrix, DualVector
from .errors import DimensionError

__all__ = [
    "read_dual_matrix",
    "read_dual_vector",
    "write_dual_matrix",
    "dual_matrix_to_dict",
    "dual_vector_to_dict",
]


def _load(path):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _parse_part(doc, key, rows, cols):
    if key not in doc:
        raise ValueError(f"missing '{key}' array")
    arr = np.asarray(doc[key], dtype=float)
    if arr.ndim == 1:
        arr = arr.reshape(rows, cols)
    if arr.shape != (rows, cols):
        raise DimensionError(f"'{key}' has shape {arr.shape}, declared "
                             f"({rows}, {cols})")
    return arr


def read_dual_matrix(path):
    """Read a dual matrix document; returns (name, DualMatrix)."""
    doc = _load(path)
    rows, cols = int(doc["rows"]), int(doc["cols"])
    std = _parse_part(doc, "standard", rows, cols)
    inf = _parse_part(doc, "infinitesimal", rows, cols)
    return doc.get("name", ""), DualMatrix(std, inf)


def read_dual_vector(path):
    """Read a dual vector document (rows x 1, or flat arrays)."""
    doc = _load(path)
    rows = int(doc["rows"])
    cols = int(doc.get("cols", 1))
    if cols != 1:
        raise DimensionError(f"vector file must have cols = 1, got {cols}")
    std = _parse_part(doc, "standard", rows, cols).ravel()
    inf = _parse_part(doc, "infinitesimal", rows, cols).ravel()
    return doc.get("name", ""), DualVector(std, inf)


def dual_matrix_to_dict(mh, name=""):
    return {
        "name": name,
        "rows": mh.shape[0],
        "cols": mh.shape[1],
        "standard": mh.std.tolist(),
        "infinitesimal": mh.inf.tolist(),
    }


def dual_vector_to_dict(vh, name=""):
    return {
        "name": name,
        "rows": len(vh),
        "cols": 1,
        "standard": vh.std.tolist(),
        "infinitesimal": vh.inf.tolist(),
    }


def write_dual_matrix(path, mh, name=""):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(dual_matrix_to_dict(mh, name), fh, indent=2)
        fh.write("\n")
