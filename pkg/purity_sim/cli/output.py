"""
cli/output.py — CSV and JSON emission.

CSV: header row always, UTF-8, comma-separated, '\\n' line endings, floats
in repr form so output never depends on locale.
JSON: a single object {"schema_version": "1", "command": ..., "rows": [...]}.
"""
from __future__ import annotations

import csv
import json
import sys
from collections.abc import Sequence
from fractions import Fraction
from pathlib import Path
from typing import Any, TextIO

SCHEMA_VERSION = "1"

Row = dict[str, Any]


def _json_cell(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, tuple):
        return [_json_cell(x) for x in value]
    return value


def _csv_cell(value: Any) -> Any:
    if value is None:
        return ""
    if isinstance(value, (tuple, list)):
        return "(" + ",".join(str(x) for x in value) + ")"
    return value


def _fieldnames(rows: Sequence[Row]) -> list[str]:
    names: list[str] = []
    for row in rows:
        names.extend(key for key in row if key not in names)
    return names


def write_csv(rows: Sequence[Row], stream: TextIO) -> None:
    writer = csv.DictWriter(stream, fieldnames=_fieldnames(rows), lineterminator="\n")
    writer.writeheader()
    writer.writerows({key: _csv_cell(value) for key, value in row.items()} for row in rows)


def write_json(rows: Sequence[Row], command: str, stream: TextIO) -> None:
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "rows": [{key: _json_cell(value) for key, value in row.items()} for row in rows],
    }
    json.dump(payload, stream, indent=2, ensure_ascii=False)
    stream.write("\n")


def emit(rows: Sequence[Row], command: str, fmt: str, out: Path | None = None) -> None:
    """Write rows to `out` (or stdout) in the requested format."""
    if out is None:
        _write(rows, command, fmt, sys.stdout)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", encoding="utf-8", newline="") as stream:
        _write(rows, command, fmt, stream)


def _write(rows: Sequence[Row], command: str, fmt: str, stream: TextIO) -> None:
    if fmt == "json":
        write_json(rows, command, stream)
    else:
        write_csv(rows, stream)
