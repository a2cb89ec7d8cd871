"""Serialization of values, reports and tables as text, csv, json or LaTeX.

Rationals are always written ``"p/q"`` (``"p"`` for integers) outside of
LaTeX; polynomials serialize in JSON as ``{"var": ..., "coeffs": {...}}``.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .exactnum import (
    Polynomial,
    format_poly_latex,
    format_poly_latex_factored,
    format_poly_text,
    format_rational,
    latex_rational,
)
from .report import IdentityReport

FORMATS = ("text", "csv", "json", "latex")


@dataclass
class Table:
    """Rows of named cells plus optional document-level metadata for JSON."""

    columns: Sequence[str]
    rows: list[dict[str, Any]]
    meta: dict[str, Any] = field(default_factory=dict)
    scalar: bool = False
    title: str = ""
    factored: bool = False


def _json_value(v: Any) -> Any:
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, Polynomial):
        return v.to_dict()
    if isinstance(v, IdentityReport):
        return v.to_dict()
    if isinstance(v, dict):
        return {str(a): _json_value(b) for a, b in v.items()}
    if isinstance(v, (list, tuple)):
        return [_json_value(x) for x in v]
    return v


def _text_value(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, Polynomial):
        return format_poly_text(v)
    if isinstance(v, dict):
        return " ".join(f"{a}={_text_value(b)}" for a, b in v.items())
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_text_value(x) for x in v) + "]"
    if v is None:
        return ""
    return str(v)


def _latex_value(v: Any, factored: bool = False) -> str:
    if isinstance(v, bool):
        return r"\checkmark" if v else r"\times"
    if isinstance(v, Fraction):
        return f"${latex_rational(v)}$"
    if isinstance(v, int):
        return f"${v}$"
    if isinstance(v, Polynomial):
        body = format_poly_latex_factored(v) if factored else format_poly_latex(v)
        return f"${body}$"
    if isinstance(v, dict):
        return ", ".join(f"${a}={b}$" for a, b in v.items())
    if isinstance(v, (list, tuple)):
        return "$" + ", ".join(str(x) for x in v) + "$"
    return str(v).replace("_", r"\_")


def render_value(v: Any, fmt: str, factored: bool = False) -> str:
    """Render a single value (used for scalar results)."""
    if fmt == "text":
        return _text_value(v)
    if fmt == "json":
        return json.dumps(_json_value(v))
    if fmt == "csv":
        return _text_value(v)
    if fmt == "latex":
        if isinstance(v, Polynomial):
            return format_poly_latex_factored(v) if factored else format_poly_latex(v)
        if isinstance(v, Fraction):
            return latex_rational(v)
        return _latex_value(v)
    raise ValueError(f"unknown format {fmt!r}")


def render(table: Table, fmt: str) -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    if fmt == "json":
        doc = dict(_json_value(table.meta))
        doc["rows"] = [{c: _json_value(r.get(c)) for c in table.columns} for r in table.rows]
        return json.dumps(doc, indent=2)
    if table.scalar and len(table.rows) == 1 and fmt in ("text", "latex"):
        return render_value(table.rows[0][table.columns[-1]], fmt, table.factored)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(table.columns)
        for r in table.rows:
            writer.writerow([_text_value(r.get(c)) for c in table.columns])
        return buf.getvalue().rstrip("\n")
    if fmt == "text":
        cells = [[_text_value(r.get(c)) for c in table.columns] for r in table.rows]
        widths = [max([len(c)] + [len(row[i]) for row in cells]) for i, c in enumerate(table.columns)]
        lines = []
        if table.title:
            lines.append(table.title)
        lines.append("  ".join(c.ljust(w) for c, w in zip(table.columns, widths)).rstrip())
        for row in cells:
            lines.append("  ".join(v.ljust(w) for v, w in zip(row, widths)).rstrip())
        for key, value in table.meta.items():
            if key != "command":
                lines.append(f"{key}: {_text_value(value)}")
        return "\n".join(lines)
    # latex
    spec = "l" * len(table.columns)
    head = " & ".join(c.replace("_", r"\_") for c in table.columns)
    lines = [f"\\begin{{tabular}}{{{spec}}}", r"\hline", head + r" \\", r"\hline"]
    for r in table.rows:
        lines.append(" & ".join(_latex_value(r.get(c), table.factored) for c in table.columns) + r" \\")
    lines += [r"\hline", r"\end{tabular}"]
    return "\n".join(lines)


def report_table(reports: Sequence[IdentityReport], identity: str) -> Table:
    failed = sum(1 for r in reports if not r.holds)
    rows = [
        {
            "identity_id": r.identity_id,
            "params": r.parameters,
            "holds": r.holds,
            "lhs": r.lhs,
            "rhs": r.rhs,
            "residual": r.residual,
        }
        for r in reports
    ]
    meta = {
        "command": "verify",
        "identity": identity,
        "total": len(reports),
        "failed": failed,
        "all_hold": failed == 0,
    }
    return Table(["identity_id", "params", "holds"], rows, meta)


def reports_json(reports: Sequence[IdentityReport], identity: str) -> str:
    failed = sum(1 for r in reports if not r.holds)
    doc = {
        "command": "verify",
        "identity": identity,
        "total": len(reports),
        "failed": failed,
        "all_hold": failed == 0,
        "reports": [r.to_dict() for r in reports],
    }
    return json.dumps(doc, indent=2)
