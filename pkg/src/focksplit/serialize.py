"""CSV and JSON renderings of distributions, samples and comparisons.

CSV is ``m1,m2,p`` (or ``m1,m2,count``), one row per outcome in ascending
m1 (then m2), floats with 17 significant digits, rationals as ``num/den``.
The JSON envelope is described by ``docs/envelope.schema.json``.
"""

from __future__ import annotations

import io
import json
from dataclasses import asdict
from fractions import Fraction

import numpy as np

from .baselines import JointDistribution
from .experiment import ComparisonReport, SampleResult
from .numerics import ExactProb, format_float
from .quantum import Distribution

__all__ = [
    "format_value",
    "to_csv",
    "to_json",
    "envelope",
    "parse_csv",
    "comparison_to_text",
]


def format_value(value, exact_rationals: bool = False) -> str:
    if isinstance(value, Fraction):
        return str(ExactProb(value)) if exact_rationals else format_float(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return format_float(value)


def _json_value(value, exact_rationals: bool):
    if isinstance(value, Fraction):
        return str(ExactProb(value)) if exact_rationals else float(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    return float(value)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, np.ndarray)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(ExactProb(obj)) if 0 <= obj <= 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    return obj


def _rows(obj):
    if isinstance(obj, SampleResult):
        return [(m1, obj.n_total - m1, c) for m1, c in sorted(obj.counts.items())], "count"
    return obj.rows(), "p"


def to_csv(obj, exact_rationals: bool = False) -> str:
    """Render a Distribution, JointDistribution or SampleResult as CSV text."""
    rows, column = _rows(obj)
    buf = io.StringIO()
    buf.write(f"m1,m2,{column}\n")
    for m1, m2, value in rows:
        buf.write(f"{m1},{m2},{format_value(value, exact_rationals)}\n")
    return buf.getvalue()


def parse_csv(text: str) -> list[tuple[int, int, object]]:
    """Inverse of :func:`to_csv`: values come back as Fraction, int or float."""
    lines = text.strip().splitlines()
    out = []
    for line in lines[1:]:
        m1, m2, raw = line.split(",")
        if "/" in raw:
            value = Fraction(raw)
        elif lines[0].endswith("count"):
            value = int(raw)
        else:
            value = float(raw)
        out.append((int(m1), int(m2), value))
    return out


def envelope(obj, exact_rationals: bool = False) -> dict:
    """The JSON-ready dict for a Distribution, JointDistribution or SampleResult."""
    rows, column = _rows(obj)
    if isinstance(obj, SampleResult):
        cfg = obj.meta.get("config")
        head = {
            "kind": "sample",
            "model": obj.model,
            "n_alpha": cfg.n_alpha if cfg else None,
            "n_beta": cfg.n_beta if cfg else None,
            "n_total": obj.n_total,
            "normalized": False,
            "representation": "counts",
            "shots": obj.shots,
            "seed": obj.seed,
            "algorithm": obj.algorithm,
        }
        meta = {k: v for k, v in obj.meta.items() if k != "config"}
    elif isinstance(obj, JointDistribution):
        head = {
            "kind": "joint_distribution",
            "model": obj.model,
            "n_alpha": None,
            "n_beta": None,
            "n_total": None,
            "normalized": obj.normalized,
            "representation": "float",
        }
        meta = dict(obj.meta)
    elif isinstance(obj, Distribution):
        cfg = obj.config
        rational = obj.representation == "rational" and exact_rationals
        head = {
            "kind": "distribution",
            "model": obj.model,
            "n_alpha": cfg.n_alpha if cfg else None,
            "n_beta": cfg.n_beta if cfg else None,
            "n_total": obj.n_total,
            "normalized": obj.normalized,
            "representation": "rational" if rational else "float",
        }
        meta = dict(obj.meta)
        if cfg is not None:
            meta.setdefault("theta", cfg.theta)
    else:
        raise TypeError(f"cannot serialise {type(obj).__name__}")
    head["rows"] = [
        {"m1": int(m1), "m2": int(m2), column: _json_value(v, exact_rationals)} for m1, m2, v in rows
    ]
    head["meta"] = _jsonable(meta)
    return head


def to_json(obj, exact_rationals: bool = False) -> str:
    if isinstance(obj, ComparisonReport):
        return json.dumps(asdict(obj), indent=2) + "\n"
    return json.dumps(envelope(obj, exact_rationals), indent=2) + "\n"


def comparison_to_text(report: ComparisonReport) -> str:
    return (
        f"tvd,{format_float(report.tvd)}\n"
        f"max_abs,{format_float(report.max_abs)}\n"
        f"max_rel,{format_float(report.max_rel)}\n"
    )
