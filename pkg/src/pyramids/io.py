"""JSON and CSV forms of pyramid rows and polynomials.

Numbers are always written in the exact textual form of :func:`format_gauss`,
so writing and reading back is lossless.
"""

from __future__ import annotations

import csv
import io
import json

from .exact import ZPoly, format_gauss, parse_gauss
from .transforms import PyramidRow


def pyramid_to_json(row: PyramidRow) -> dict:
    return {"n": row.n, "entries": [format_gauss(a) for a in row]}


def pyramid_from_json(obj) -> PyramidRow:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or "entries" not in obj:
        raise ValueError('pyramid JSON needs an "entries" list')
    entries = [parse_gauss(str(a)) for a in obj["entries"]]
    n = obj.get("n", len(entries) - 1)
    return PyramidRow(int(n), tuple(entries))


def poly_to_json(P: ZPoly, n: int | None = None) -> dict:
    """Ascending coefficients, padded with zeros up to degree ``n`` if given."""
    length = max(len(P.coeffs), 1 if n is None else n + 1)
    return {"coeffs": [format_gauss(P[r]) for r in range(length)]}


def poly_from_json(obj) -> ZPoly:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise ValueError('polynomial JSON needs a "coeffs" list')
    return ZPoly([parse_gauss(str(c)) for c in obj["coeffs"]])


def dumps(obj) -> str:
    """Canonical text: ``json.dumps`` with default separators and a trailing newline."""
    return json.dumps(obj) + "\n"


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in rows:
        writer.writerow([format_gauss(a) for a in row])
    return buf.getvalue()


def rows_from_csv(text: str) -> list[list]:
    return [[parse_gauss(cell) for cell in line] for line in csv.reader(io.StringIO(text)) if line]
