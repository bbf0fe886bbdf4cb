"""
Report emission in CSV, JSON and text formats.

The CSV data section is a pure function of the records: fixed column order,
floats written with repr, no timings. Versions and timings only appear in
the JSON header block.
"""

from __future__ import annotations

import csv
import io
import json
from enum import Enum, auto
from typing import Any, Optional, Union

from pwlab.errors import ReportIOError
from pwlab.lab.report import ExperimentReport


class ReportFormat(Enum):
    """Available report formats."""
    CSV = auto()
    JSON = auto()
    TEXT = auto()

    @classmethod
    def parse(cls, value: Union[str, "ReportFormat"]) -> "ReportFormat":
        if isinstance(value, cls):
            return value
        try:
            return cls[str(value).upper()]
        except KeyError as exc:
            raise ValueError(f"unknown report format {value!r}") from exc

    @classmethod
    def infer(cls, filepath: str) -> "ReportFormat":
        if filepath.endswith(".json"):
            return cls.JSON
        if filepath.endswith(".csv"):
            return cls.CSV
        return cls.TEXT


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


class Reporter:
    """
    Formats an ExperimentReport.
    """

    def __init__(self, report: ExperimentReport):
        self.report = report

    def generate(self, format: Union[str, ReportFormat] = ReportFormat.CSV) -> str:
        """
        Args:
            format: Output format

        Returns:
            Formatted report string
        """
        fmt = ReportFormat.parse(format)
        if fmt == ReportFormat.CSV:
            return self._generate_csv()
        if fmt == ReportFormat.JSON:
            return self._generate_json()
        return self.report.describe()

    def _generate_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.report.columns)
        for record in self.report.records:
            writer.writerow([_cell(v) for v in self.report.row(record)])
        return buffer.getvalue()

    def _generate_json(self) -> str:
        return json.dumps(self.report.to_dict(), indent=2, sort_keys=True)

    def save(self, filepath: str, format: Optional[Union[str, ReportFormat]] = None) -> None:
        """
        Save the report; the format is inferred from the extension if not given.

        Raises:
            ReportIOError: If the file cannot be written
        """
        fmt = ReportFormat.infer(filepath) if format is None else ReportFormat.parse(format)
        content = self.generate(fmt)
        try:
            with open(filepath, "w", encoding="utf-8", newline="") as fh:
                fh.write(content)
        except OSError as exc:
            raise ReportIOError(filepath, str(exc)) from exc


def emit(report: ExperimentReport, path: str, format: Optional[Union[str, ReportFormat]] = None) -> None:
    """Write a report to path."""
    Reporter(report).save(path, format)


def load_json(path: str) -> ExperimentReport:
    """Read a report written in JSON format."""
    with open(path, "r", encoding="utf-8") as fh:
        return ExperimentReport.from_dict(json.load(fh))
