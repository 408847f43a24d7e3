"""JSON forms of matrices and reports.

Matrices travel as ``{"ring", "rows", "cols", "entries"}`` with every entry
a decimal string (rationals as ``a/b``).  Keys are emitted in a fixed order
so identical inputs give byte-identical output.
"""

import json

from .exceptions import DimensionMismatch, ParseError
from .matrix import Matrix
from .rings import make_ring


def matrix_from_json(data, ring=None):
    """Build a matrix from parsed JSON; ``ring`` overrides the file's ring."""
    if not isinstance(data, dict):
        raise ParseError("matrix JSON must be an object")
    for key in ("rows", "cols", "entries"):
        if key not in data:
            raise ParseError(f"matrix JSON lacks {key!r}")
    spec = ring if ring is not None else data.get("ring")
    if spec is None:
        raise ParseError("matrix JSON lacks 'ring' and no ring was given")
    R = make_ring(spec)
    m, n, entries = data["rows"], data["cols"], data["entries"]
    if not isinstance(m, int) or not isinstance(n, int) or m < 0 or n < 0:
        raise ParseError("'rows' and 'cols' must be nonnegative integers")
    if not isinstance(entries, list) or len(entries) != m:
        raise DimensionMismatch(f"expected {m} rows of entries")
    rows = []
    for row in entries:
        if not isinstance(row, list) or len(row) != n:
            raise DimensionMismatch(f"expected rows of length {n}")
        rows.append([R.parse_element(x) for x in row])
    return Matrix(R, rows, n)


def matrix_to_json(M):
    fmt = M.domain.format_element
    return {
        "ring": M.domain.spec,
        "rows": M.m,
        "cols": M.n,
        "entries": [[fmt(x) for x in r] for r in M.rows],
    }


def load_matrix(path, ring=None):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc
    return matrix_from_json(data, ring)


def report_to_json(report, counts=False):
    """JSON object for a :class:`~ginv.nagata.GInverseReport`."""
    ring = report.ring
    out = {"status": report.status}
    if report.reason is not None:
        out["reason"] = report.reason
    out["rank_profile"] = [
        {"idempotent": ring.format_element(r), "rank": k} for r, k in report.rank_profile
    ]
    for key in ("B", "proj_image", "proj_coimage"):
        value = getattr(report, key)
        if value is not None:
            out[key] = matrix_to_json(value)
    if counts:
        out["op_counts"] = report.op_counts.as_dict()
    return out


def dumps(obj):
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
