"""Serialization of partitions and bounds for MILP embedding and plotting.

All decimal output uses 17 significant digits, which round-trips IEEE
doubles exactly, and key order is fixed, so identical inputs always
produce byte-identical text.  Unbounded segment edges are encoded as
``null`` rather than infinity sentinels.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .bounds import BoundReport, PiecewiseLinear, evaluate, _evaluate_array, _exact, _grid
from .errors import InvalidParameterError
from .partition import Partition

__all__ = [
    "ExportBundle",
    "to_json",
    "from_json",
    "to_csv_table",
    "to_lp_constraints",
    "plot_data",
]

TOOL_NAME = "losslin"
TOOL_VERSION = "0.1.0"


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _render(obj) -> str:
    """Deterministic JSON rendering with 17-significant-digit reals."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = (f"{json.dumps(k)}: {_render(v)}" for k, v in obj.items())
        return "{" + ", ".join(items) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_render(v) for v in obj) + "]"
    raise InvalidParameterError(f"cannot serialize {type(obj).__name__}")


def _segment_rows(pl: PiecewiseLinear) -> list[dict]:
    bp = pl.breakpoints
    rows = []
    for i, (s, c) in enumerate(zip(pl.slopes, pl.intercepts)):
        rows.append({
            "slope": float(s),
            "intercept": float(c),
            "domain_low": None if i == 0 else float(bp[i - 1]),
            "domain_high": None if i == len(pl.slopes) - 1 else float(bp[i]),
        })
    return rows


def _bound_block(pl: PiecewiseLinear, error_locations) -> dict:
    return {
        "kind": pl.kind,
        "segments": _segment_rows(pl),
        "breakpoints": [float(b) for b in pl.breakpoints],
        "error_locations": [None if math.isinf(x) else float(x)
                            for x in error_locations],
    }


@dataclass(frozen=True)
class ExportBundle:
    """Parsed form of the JSON coefficient document."""

    metadata: dict
    lower: dict
    upper: dict
    partition: dict

    @classmethod
    def from_report(cls, report: BoundReport) -> "ExportBundle":
        part = report.partition
        lower = report.lower
        metadata = {
            "tool": TOOL_NAME,
            "version": TOOL_VERSION,
            "segment_count": lower.n_segments,
            "target": lower.target,
            "kind": "lower_upper_pair",
            "mu": float(lower.scale.mu),
            "sigma": float(lower.scale.sigma),
            "max_error": float(report.max_error),
        }
        partition = {
            "upper_limits": [None if math.isinf(b) else float(b)
                             for b in part.upper_limits],
            "masses": [float(p) for p in part.masses],
            "cond_means": [float(m) for m in part.cond_means],
            "max_error_std": float(part.max_error),
        }
        return cls(
            metadata=metadata,
            lower=_bound_block(lower, report.lower_error_locations),
            upper=_bound_block(report.upper, report.upper_error_locations),
            partition=partition,
        )

    def to_text(self) -> str:
        doc = {
            "metadata": self.metadata,
            "lower": self.lower,
            "upper": self.upper,
            "partition": self.partition,
        }
        return _render(doc) + "\n"


def to_json(report: BoundReport) -> str:
    """Serialize a bound report to the JSON coefficient bundle."""
    return ExportBundle.from_report(report).to_text()


def from_json(text: str) -> ExportBundle:
    """Parse a JSON coefficient bundle back into an ExportBundle."""
    doc = json.loads(text)
    try:
        return ExportBundle(metadata=doc["metadata"], lower=doc["lower"],
                            upper=doc["upper"], partition=doc["partition"])
    except KeyError as exc:
        raise InvalidParameterError(f"bundle is missing section {exc}") from exc


def to_csv_table(partitions: list[Partition]) -> str:
    """Parameter table in CSV form, one row group (b, p, m) per partition.

    Columns run up to the widest partition; narrower rows leave the
    trailing cells blank.
    """
    if not partitions:
        raise InvalidParameterError("need at least one partition")
    width = max(p.n_regions for p in partitions)
    lines = ["segments,error," + ",".join(
        ["param"] + [str(i) for i in range(1, width + 1)])]
    for part in partitions:
        segs = part.n_regions + 1
        err = _fmt(part.max_error)
        for label, values in (("b", part.upper_limits),
                              ("p", part.masses),
                              ("m", part.cond_means)):
            cells = [_fmt(v) if math.isfinite(v) else "inf" for v in values]
            cells += [""] * (width - len(cells))
            lines.append(f"{segs},{err},{label}," + ",".join(cells))
    return "\n".join(lines) + "\n"


def _lp_num(x: float) -> str:
    # positional notation (LP parsers dislike exponents), shortest
    # representation that still round-trips the double
    return np.format_float_positional(float(x), unique=True, trim="-")


def _lp_term(coef: float, var: str) -> str:
    sign = "-" if coef > 0 else "+"
    mag = abs(coef)
    if mag == 1.0:
        return f" {sign} {var}"
    return f" {sign} {_lp_num(mag)} {var}"


def to_lp_constraints(report: BoundReport, var_x: str = "x", var_L: str = "L") -> str:
    """LP-file constraint text embedding the lower bound's epigraph.

    Each lower-bound segment becomes one inequality
    ``var_L - slope*var_x >= intercept``.  The upper bound is not a max
    of affine pieces, so it is emitted as a commented breakpoint/value
    node table; the consumer picks a formulation (lambda/SOS2) for it.
    """
    lower, upper = report.lower, report.upper
    if lower.kind != "lower":
        raise InvalidParameterError("report.lower must be a lower-kind bound")
    if not upper.breakpoints:
        raise InvalidParameterError("upper bound has no breakpoints to tabulate")
    meta = lower.scale
    out = [
        f"\\ {TOOL_NAME} {TOOL_VERSION}: piecewise linear bounds for target"
        f" {lower.target}, normal(mu={_lp_num(meta.mu)}, sigma={_lp_num(meta.sigma)})",
        f"\\ lower bound: {var_L} >= slope*{var_x} + intercept, one row per segment",
        "Subject To",
    ]
    for i, (s, c) in enumerate(zip(lower.slopes, lower.intercepts)):
        lhs = f" lower_{i}: {var_L}"
        if s != 0.0:
            lhs += _lp_term(s, var_x)
        out.append(f"{lhs} >= {_lp_num(c)}")
    out.append("\\ upper bound nodes (x, value); slope 0 before the first node,")
    out.append("\\ slope 1 after the last; apply a lambda or SOS2 formulation")
    for i, bx in enumerate(upper.breakpoints):
        out.append(f"\\ node_{i}: x = {_lp_num(bx)}, value = {_lp_num(evaluate(upper, bx))}")
    out.append("Bounds")
    out.append(f" {var_x} free")
    out.append(f" {var_L} free")
    out.append("End")
    return "\n".join(out) + "\n"


def plot_data(report: BoundReport, n_points: int) -> str:
    """CSV of exact/lower/upper values and signed gaps on the standard grid.

    The grid spans mu +- 8 sigma, extended to the outermost breakpoints
    of either bound.
    """
    if not isinstance(n_points, int) or n_points < 2:
        raise InvalidParameterError("n_points must be an integer >= 2")
    lower, upper = report.lower, report.upper
    xs = np.union1d(_grid(lower, n_points), _grid(upper, 2))
    xs = np.linspace(xs[0], xs[-1], n_points)
    exact = np.asarray(_exact(lower, xs), dtype=float)
    lo = _evaluate_array(lower, xs)
    up = _evaluate_array(upper, xs)
    lines = ["x,exact,lower,upper,gap_lower,gap_upper"]
    for row in zip(xs, exact, lo, up, exact - lo, up - exact):
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"
