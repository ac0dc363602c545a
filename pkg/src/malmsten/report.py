"""Verification reports and their JSON / CSV / text renderings.

JSON layout::

    {"version": ..., "grid": {...}, "rows": [...], "overall_pass": bool}

Complex numbers are ``{"re": x, "im": y}``.  Floats are written with
``repr`` (shortest round-trip form), so parsing a report back gives the same
doubles bit for bit.  NaN residuals of failed rows are written as ``null``.
"""

import csv
import io
import json
import math
from dataclasses import dataclass

from . import __version__
from .identities import IdentityCheck, IdentityId

__all__ = ["VerificationReport", "format_complex", "encode_value", "decode_value"]

CSV_COLUMNS = (
    "identity_id",
    "params",
    "lhs_re",
    "lhs_im",
    "rhs_re",
    "rhs_im",
    "abs_err",
    "rel_err",
    "pass",
)


def format_complex(z, precision=None):
    """'re', 're+imi' or 're-imi'; ``precision`` is significant digits (repr if None)."""
    z = complex(z)

    def fmt(x):
        return repr(x) if precision is None else f"{x:.{precision}g}"

    if z.imag == 0.0:
        return fmt(z.real)
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{fmt(z.real)}{sign}{fmt(abs(z.imag))}i"


def _float(x):
    return None if math.isnan(x) else x


def encode_value(v):
    if isinstance(v, complex):
        return {"re": _float(v.real), "im": _float(v.imag)}
    if isinstance(v, float):
        return _float(v)
    return v


def _unfloat(x):
    return float("nan") if x is None else float(x)


def decode_value(v):
    if isinstance(v, dict):
        return complex(_unfloat(v["re"]), _unfloat(v["im"]))
    return v


def _row_to_dict(row):
    return {
        "identity_id": row.identity_id.value,
        "params": {name: encode_value(value) for name, value in row.params},
        "lhs": encode_value(row.lhs),
        "rhs": encode_value(row.rhs),
        "abs_err": _float(row.abs_err),
        "rel_err": _float(row.rel_err),
        "pass": row.passed,
        "tolerance": row.tolerance,
        "error": row.error,
        "excluded": row.excluded,
    }


def _row_from_dict(d):
    return IdentityCheck(
        identity_id=IdentityId(d["identity_id"]),
        params=tuple((k, decode_value(v)) for k, v in d["params"].items()),
        lhs=decode_value(d["lhs"]),
        rhs=decode_value(d["rhs"]),
        abs_err=_unfloat(d["abs_err"]),
        rel_err=_unfloat(d["rel_err"]),
        passed=d["pass"],
        tolerance=d["tolerance"],
        error=d.get("error"),
        excluded=d.get("excluded", False),
    )


@dataclass(frozen=True)
class VerificationReport:
    rows: tuple
    grid_meta: dict
    tool_version: str
    overall_pass: bool

    @classmethod
    def from_rows(cls, rows, grid=None):
        rows = tuple(rows)
        meta = grid.describe() if grid is not None else {}
        return cls(rows, meta, __version__, all(r.ok for r in rows))

    def to_dict(self):
        grid = {k: [encode_value(v) for v in vals] for k, vals in self.grid_meta.items()}
        return {
            "version": self.tool_version,
            "grid": grid,
            "rows": [_row_to_dict(r) for r in self.rows],
            "overall_pass": self.overall_pass,
        }

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent, allow_nan=False)

    @classmethod
    def from_json(cls, text):
        d = json.loads(text)
        grid = {k: [decode_value(v) for v in vals] for k, vals in d["grid"].items()}
        rows = tuple(_row_from_dict(r) for r in d["rows"])
        return cls(rows, grid, d["version"], d["overall_pass"])

    def to_csv(self):
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in self.rows:
            params = ";".join(
                f"{k}={format_complex(v) if isinstance(v, (complex, float)) else v}"
                for k, v in r.params
            )
            writer.writerow(
                [
                    r.identity_id.value,
                    params,
                    repr(r.lhs.real),
                    repr(r.lhs.imag),
                    repr(r.rhs.real),
                    repr(r.rhs.imag),
                    repr(r.abs_err),
                    repr(r.rel_err),
                    "true" if r.passed else "false",
                ]
            )
        return buf.getvalue()

    def to_table(self, precision=6):
        lines = [
            f"{'identity':<22} {'params':<34} {'abs_err':>10} {'rel_err':>10} {'tol':>8}  result"
        ]
        for r in self.rows:
            params = " ".join(
                f"{k}={format_complex(v, precision)}"
                for k, v in r.params
                if not isinstance(v, str)
            )
            if r.excluded:
                verdict = "excluded"
            elif r.error:
                verdict = "ERROR"
            else:
                verdict = "pass" if r.passed else "FAIL"
            lines.append(
                f"{r.identity_id.value:<22} {params:<34} {r.abs_err:>10.2e} "
                f"{r.rel_err:>10.2e} {r.tolerance:>8.0e}  {verdict}"
            )
            if r.error and not r.excluded:
                lines.append(f"    {r.error}")
        n_fail = sum(not r.ok for r in self.rows)
        lines.append(
            f"{len(self.rows)} rows, {n_fail} failing: "
            + ("PASS" if self.overall_pass else "FAIL")
        )
        return "\n".join(lines) + "\n"
