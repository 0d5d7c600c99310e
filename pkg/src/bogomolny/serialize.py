"""Deterministic CSV and JSON emission.

Floats are formatted with %.17g (shortest round-trippable repr for
doubles) and files are written with "\n" newlines regardless of
platform, so repeated runs with the same inputs are byte-identical.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Iterable, Sequence

from .oracle import ResidualReport


def format_float(value: float) -> str:
    return f"{value:.17g}"


def format_row(values: Sequence[float]) -> list[str]:
    return [format_float(float(v)) for v in values]


def write_csv(
    path: str | Path,
    header: Sequence[str],
    rows: Iterable[Sequence[float]],
) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(list(header))
        for row in rows:
            writer.writerow(format_row(row))


def report_payload(
    model: str,
    action: str,
    params: dict,
    reports: Sequence[ResidualReport],
) -> dict:
    """Top-level JSON document for a verification run.

    The overall "pass" field is the conjunction of the per-check flags.
    """
    return {
        "model": model,
        "action": action,
        "params": dict(params),
        "reports": [r.to_json_dict() for r in reports],
        "pass": all(r.passed for r in reports),
    }


def write_json(path: str | Path, payload: dict) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")
