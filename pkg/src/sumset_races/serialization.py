"""JSON interchange: rationals as "p/q" strings, unions as endpoint pairs.

Rationals serialize in lowest terms, with a bare "p" when the denominator
is 1; floats are rejected on input so nothing inexact can leak into the
arithmetic. Interval unions serialize as ordered lists of [lo, hi] string
pairs. This is the one format shared by every module and the CLI.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .construction import (
    BuildResult,
    DiffMatrix,
    DifferenceReport,
)
from .discrete import IntSet, is_rank_tuple
from .intervals import Interval, IntervalUnion
from .realization import RealizationPlan, TauRaceReport

__all__ = [
    "SchemaError",
    "format_rational",
    "parse_rational",
    "union_to_obj",
    "union_from_obj",
    "read_json",
    "write_json",
    "load_problem",
    "load_sets_file",
    "load_race_targets",
    "build_output_obj",
    "race_output_obj",
]


class SchemaError(ValueError):
    """The file or object does not follow the interchange format."""


_RATIONAL = re.compile(r"^-?\d+(?:/[1-9][0-9]*)?$")


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


def parse_rational(obj: Any) -> Fraction:
    if isinstance(obj, bool):
        raise SchemaError(f"expected a rational 'p/q' string, got {obj!r}")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str) and _RATIONAL.match(obj):
        return Fraction(obj)
    raise SchemaError(f"expected a rational 'p/q' string, got {obj!r}")


def union_to_obj(union: IntervalUnion) -> list[list[str]]:
    return [[format_rational(p.lo), format_rational(p.hi)] for p in union.parts]


def union_from_obj(obj: Any) -> IntervalUnion:
    if not isinstance(obj, list):
        raise SchemaError(f"expected a list of [lo, hi] pairs, got {obj!r}")
    parts = []
    for item in obj:
        if not isinstance(item, list) or len(item) != 2:
            raise SchemaError(f"expected an [lo, hi] pair, got {item!r}")
        lo, hi = parse_rational(item[0]), parse_rational(item[1])
        try:
            parts.append(Interval(lo, hi))
        except ValueError as exc:
            raise SchemaError(str(exc)) from None
    return IntervalUnion(parts)


def _require_int(obj: Any, what: str) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise SchemaError(f"{what} must be an integer, got {obj!r}")
    return obj


def read_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from None


def write_json(path: str | Path, obj: Any) -> None:
    Path(path).write_text(json.dumps(obj, indent=2) + "\n")


def load_problem(path: str | Path) -> tuple[DiffMatrix, Fraction]:
    """Read a problem file: {"n", "H", "theta": "p/q", "m": [[int, ...], ...]}."""
    data = read_json(path)
    if not isinstance(data, dict):
        raise SchemaError("problem file must be a JSON object")
    for key in ("n", "H", "theta", "m"):
        if key not in data:
            raise SchemaError(f"problem file is missing {key!r}")
    n = _require_int(data["n"], "n")
    H = _require_int(data["H"], "H")
    if n < 2:
        raise SchemaError(f"need at least two sets, got n={n}")
    if H < 2:
        raise SchemaError(f"the construction needs a fold horizon H >= 2, got H={H}")
    theta = parse_rational(data["theta"])
    if theta <= 0:
        raise SchemaError(f"theta must be positive, got {theta}")
    m = data["m"]
    if not isinstance(m, list) or len(m) != n - 1:
        raise SchemaError(f"m must be a list of n-1 = {n - 1} rows")
    rows = []
    for row in m:
        if not isinstance(row, list) or len(row) != H:
            raise SchemaError(f"each m row must list H = {H} integers")
        rows.append(tuple(_require_int(v, "m entry") for v in row))
    try:
        return DiffMatrix(tuple(rows)), theta
    except (TypeError, ValueError) as exc:
        raise SchemaError(str(exc)) from None


def load_sets_file(path: str | Path) -> list[IntervalUnion]:
    """Read the "sets" list out of a build or race output file."""
    data = read_json(path)
    if not isinstance(data, dict) or "sets" not in data:
        raise SchemaError("sets file must be a JSON object with a 'sets' key")
    sets_obj = data["sets"]
    if not isinstance(sets_obj, list) or not sets_obj:
        raise SchemaError("'sets' must be a nonempty list")
    return [union_from_obj(item) for item in sets_obj]


def load_race_targets(path: str | Path) -> list[tuple[int, ...]]:
    """Read a race targets file: {"targets": [[rank, ...], ...]}, one tuple per fold."""
    data = read_json(path)
    if not isinstance(data, dict) or "targets" not in data:
        raise SchemaError("targets file must be a JSON object with a 'targets' key")
    raw = data["targets"]
    if not isinstance(raw, list) or not raw:
        raise SchemaError("'targets' must be a nonempty list of rank tuples")
    targets = []
    for row in raw:
        if not isinstance(row, list):
            raise SchemaError(f"each target must be a list of ranks, got {row!r}")
        ranks = tuple(_require_int(v, "rank") for v in row)
        if not is_rank_tuple(ranks):
            raise SchemaError(f"not a valid rank tuple (dense ranks from 1): {list(ranks)}")
        targets.append(ranks)
    n = len(targets[0])
    if n < 2:
        raise SchemaError("a race needs at least two sets")
    if any(len(t) != n for t in targets):
        raise SchemaError("rank tuples must all have the same length")
    return targets


def _difference_report_objs(report: DifferenceReport) -> tuple[list, list]:
    checks = [
        {
            "pair": c.pair,
            "h": c.h,
            "computed": format_rational(c.computed),
            "target": format_rational(c.target),
            "pass": c.ok,
        }
        for c in report.checks
    ]
    telescoping = [
        {"j": t.j, "k": t.k, "h": t.h, "pass": t.ok} for t in report.telescoping
    ]
    return checks, telescoping


def build_output_obj(result: BuildResult, report: DifferenceReport) -> dict:
    checks, telescoping = _difference_report_objs(report)
    params = result.params
    return {
        "params": {
            "eps": format_rational(params.eps),
            "delta": format_rational(params.delta),
            "c": format_rational(params.c),
            "H": params.H,
            "n": params.n,
        },
        "ell": [list(row) for row in result.carves.rows],
        "sets": [union_to_obj(s) for s in result.sets],
        "report": checks,
        "telescoping": telescoping,
        "all_pass": report.all_ok,
    }


def race_output_obj(
    witness: Sequence[IntSet],
    plan: RealizationPlan,
    sets: Sequence[IntervalUnion],
    report: TauRaceReport,
    targets: Sequence[tuple[int, ...]],
) -> dict:
    rows = []
    for check, target in zip(report.checks, targets):
        rows.append(
            {
                "h": check.h,
                "measures": [format_rational(v) for v in check.measures],
                "measure_ranks": list(check.measure_ranks),
                "cardinalities": list(check.cardinalities),
                "cardinality_ranks": list(check.cardinality_ranks),
                "target": list(target),
                "pass": check.ok and check.cardinality_ranks == tuple(target),
            }
        )
    return {
        "witness": [list(b) for b in witness],
        "width": format_rational(plan.width),
        "H": plan.horizon,
        "sets": [union_to_obj(s) for s in sets],
        "report": rows,
        "all_pass": all(row["pass"] for row in rows),
    }
