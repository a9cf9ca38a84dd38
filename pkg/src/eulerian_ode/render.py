"""Text, JSON, CSV and LaTeX renderings of polynomials, series and triangles.

JSON uses decimal strings for every coefficient so that big integers survive
any JSON reader: ``{"var": "t", "coeffs": ["1", "4", "1"]}``.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Sequence

from .kernel import IntPoly, IntSeries


def _terms(coeffs: Sequence[int], power) -> str:
    parts: list[tuple[str, str]] = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + power(k)
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_plain(p: IntPoly) -> str:
    return _terms(p.coeffs, lambda k: "t" if k == 1 else f"t^{k}")


def poly_latex(p: IntPoly) -> str:
    return _terms(p.coeffs, lambda k: "t" if k == 1 else f"t^{{{k}}}")


def poly_to_json(p: IntPoly) -> dict:
    return {"var": "t", "coeffs": [str(c) for c in p.coeffs]}


def poly_from_json(obj: dict) -> IntPoly:
    if obj.get("var", "t") != "t":
        raise ValueError(f"unexpected variable {obj['var']!r}")
    return IntPoly(tuple(int(c) for c in obj["coeffs"]))


def series_to_json(s: IntSeries) -> dict:
    return {"var": "t", "coeffs": [str(c) for c in s.coeffs], "order": s.order}


def series_from_json(obj: dict) -> IntSeries:
    return IntSeries(tuple(int(c) for c in obj["coeffs"]), int(obj["order"]))


def value_to_json(v):
    """JSON form of a polynomial, a series, or ``None``."""
    if v is None:
        return None
    if isinstance(v, IntSeries):
        return series_to_json(v)
    return poly_to_json(v)


def value_from_json(obj):
    if obj is None:
        return None
    if "order" in obj:
        return series_from_json(obj)
    return poly_from_json(obj)


def dumps(obj) -> str:
    return json.dumps(obj, indent=None, separators=(", ", ": "))


# -- triangles ------------------------------------------------------------


def triangle_to_json(rows: Sequence[Sequence[IntPoly]]) -> dict:
    return {"N_max": len(rows) - 1, "rows": [[poly_to_json(p) for p in row] for row in rows]}


def triangle_from_json(obj: dict) -> list[list[IntPoly]]:
    rows = [[poly_from_json(p) for p in row] for row in obj["rows"]]
    if len(rows) - 1 != obj["N_max"]:
        raise ValueError("N_max does not match the number of rows")
    return rows


def triangle_plain(rows: Sequence[Sequence[IntPoly]]) -> str:
    return "\n".join(
        f"N={N}: [" + ", ".join(poly_plain(p) for p in row) + "]" for N, row in enumerate(rows)
    )


def triangle_csv(rows: Sequence[Sequence[IntPoly]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, quoting=csv.QUOTE_NONNUMERIC, lineterminator="\n")
    for N, row in enumerate(rows):
        for i, p in enumerate(row):
            w.writerow([N, i, ";".join(str(c) for c in p.coeffs)])
    return buf.getvalue()


def triangle_latex(rows: Sequence[Sequence[IntPoly]]) -> str:
    """Matrix with entry (i, j) = a_i(j, t): a first row of ones, the
    diagonal i! t^i, zeros below the diagonal."""
    n = len(rows)
    lines = []
    for i in range(n):
        cells = [poly_latex(rows[j][i]) if i <= j else "0" for j in range(n)]
        lines.append(" & ".join(cells) + r" \\")
    return "\\begin{bmatrix}\n" + "\n".join(lines) + "\n\\end{bmatrix}"


# -- tables of polynomials ------------------------------------------------


def table_plain(polys: Sequence[IntPoly], label: str = "A") -> str:
    return "\n".join(f"{label}_{n}(t) = {poly_plain(p)}" for n, p in enumerate(polys))


def table_latex(polys: Sequence[IntPoly], label: str = "A") -> str:
    return "\n".join(f"{label}_{{{n}}}(t) &= {poly_latex(p)} \\\\" for n, p in enumerate(polys))


def poly_csv(p: IntPoly) -> str:
    return "".join(f"{k},{c}\n" for k, c in enumerate(p.coeffs))
