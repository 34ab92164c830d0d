"""Serialize report lists as versioned JSON or fixed-header CSV."""

import csv
import io
import json
import logging
from collections.abc import Sequence
from fractions import Fraction
from typing import Any, Literal, Protocol

from ..exceptions import ReportFormatError
from .models import LEVEL_CONVENTION

logger = logging.getLogger(__name__)

SCHEMA = "trivalent-verlinde/1"

OutputFormat = Literal["json", "csv"]


class Report(Protocol):
    @property
    def csv_header(self) -> tuple[str, ...]: ...

    @property
    def ok(self) -> bool: ...

    def to_dict(self) -> dict[str, Any]: ...

    def csv_rows(self) -> list[list[Any]]: ...


def _json_default(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, set | frozenset):
        return sorted(value)
    raise TypeError(f"Cannot serialize {type(value).__name__}")


def _csv_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def emit(
    reports: Sequence[Report],
    fmt: str,
    command: str = "",
    failures: Sequence[str] = (),
) -> bytes:
    """
    Render reports as bytes.

    JSON wraps them in ``{"schema", "level_convention", "command", "reports",
    "failures"}`` with sorted keys. CSV writes one header per run of same-typed reports, with
    runs separated by a blank line.

    Raises:
        ReportFormatError: If ``fmt`` is not json or csv
    """
    if fmt == "json":
        envelope = {
            "schema": SCHEMA,
            "level_convention": LEVEL_CONVENTION,
            "command": command,
            "reports": [report.to_dict() for report in reports],
            "failures": list(failures),
        }
        text = json.dumps(envelope, indent=2, sort_keys=True, default=_json_default)
        return (text + "\n").encode("utf-8")

    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        previous_header: tuple[str, ...] | None = None
        for report in reports:
            header = tuple(report.csv_header)
            if header != previous_header:
                if previous_header is not None:
                    buffer.write("\n")
                writer.writerow(header)
                previous_header = header
            for row in report.csv_rows():
                writer.writerow([_csv_cell(cell) for cell in row])
        for failure in failures:
            buffer.write(f"# failure: {failure}\n")
        return buffer.getvalue().encode("utf-8")

    raise ReportFormatError(f"Unsupported output format: {fmt!r}")
