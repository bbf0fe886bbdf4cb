"""
Experiment records, reports and column summaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

SCHEMA_VERSION = 1

BASE_COLUMNS: Tuple[str, ...] = (
    "value",
    "location",
    "normalizer",
    "normalized",
    "bound",
    "bound_satisfied",
)


def _clean(value: Any) -> Any:
    """Plain JSON types; NaN and infinities become None."""
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value) if math.isfinite(value) else None
    return value


@dataclass
class ExperimentRecord:
    """
    One row of an experiment report.

    Attributes:
        key: Sweep key, e.g. (N,), (M,), (delta,)
        value: Raw extremum or measured value
        location: Where the value was attained (t, index or omega)
        normalizer: eps_N log N for divergence experiments
        normalized: value / normalizer
        bound: Theoretical bound the value is compared with
        bound_satisfied: Outcome of the comparison; None if not applicable
        extras: Experiment-specific columns
        error: Failure message if the key could not be evaluated
    """
    key: Tuple[Any, ...]
    value: Optional[float] = None
    location: Optional[float] = None
    normalizer: Optional[float] = None
    normalized: Optional[float] = None
    bound: Optional[float] = None
    bound_satisfied: Optional[bool] = None
    extras: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None

    def __post_init__(self):
        self.key = tuple(_clean(k) for k in self.key)
        self.extras = {k: _clean(v) for k, v in self.extras.items()}
        for name in BASE_COLUMNS:
            setattr(self, name, _clean(getattr(self, name)))

    @property
    def failed(self) -> bool:
        return self.error is not None or self.bound_satisfied is False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "key": list(self.key),
            **{name: getattr(self, name) for name in BASE_COLUMNS},
            "extras": dict(self.extras),
            "error": self.error,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ExperimentRecord":
        return cls(
            key=tuple(data["key"]),
            **{name: data.get(name) for name in BASE_COLUMNS},
            extras=dict(data.get("extras", {})),
            error=data.get("error"),
        )


@dataclass
class ColumnSummary:
    """
    Summary statistics of one numeric column.

    Attributes:
        name: Column name
        count: Number of finite entries
        mean, std, median, min_val, max_val: Statistics over those entries
    """
    name: str
    count: int = 0
    mean: float = 0.0
    std: float = 0.0
    median: float = 0.0
    min_val: float = 0.0
    max_val: float = 0.0

    @classmethod
    def from_values(cls, name: str, values: List[Optional[float]]) -> "ColumnSummary":
        finite = [float(v) for v in values if isinstance(v, (int, float)) and not isinstance(v, bool)
                  and math.isfinite(v)]
        if not finite:
            return cls(name=name)
        arr = np.array(finite)
        return cls(
            name=name,
            count=len(finite),
            mean=float(np.mean(arr)),
            std=float(np.std(arr)),
            median=float(np.median(arr)),
            min_val=float(np.min(arr)),
            max_val=float(np.max(arr)),
        )

    def describe(self) -> str:
        if not self.count:
            return f"{self.name}: no data"
        return (
            f"{self.name}: mean {self.mean:.6g} ± {self.std:.3g}, "
            f"median {self.median:.6g}, range [{self.min_val:.6g}, {self.max_val:.6g}] "
            f"(n={self.count})"
        )


@dataclass
class ExperimentReport:
    """
    Records of one experiment plus the header block.

    Attributes:
        experiment: Registry name
        key_names: Names of the key columns
        extra_columns: Fixed order of the experiment-specific columns
        records: Rows sorted by key
        config: Echo of the configuration
        header: Versions and timings (kept out of the CSV data section)
        checks: Report-level assertions (trend, growth, identities)
    """
    experiment: str
    key_names: Tuple[str, ...]
    extra_columns: Tuple[str, ...] = ()
    records: List[ExperimentRecord] = field(default_factory=list)
    config: Dict[str, Any] = field(default_factory=dict)
    header: Dict[str, Any] = field(default_factory=dict)
    checks: Dict[str, bool] = field(default_factory=dict)

    def __post_init__(self):
        self.key_names = tuple(self.key_names)
        self.extra_columns = tuple(self.extra_columns)
        self.records = sorted(self.records, key=lambda r: r.key)
        self.checks = {k: bool(v) for k, v in self.checks.items()}

    @property
    def columns(self) -> Tuple[str, ...]:
        return self.key_names + BASE_COLUMNS + self.extra_columns + ("error",)

    @property
    def passed(self) -> bool:
        """No failed record and every report-level check true."""
        return not any(r.failed for r in self.records) and all(self.checks.values())

    @property
    def violations(self) -> int:
        return sum(1 for r in self.records if r.bound_satisfied is False)

    @property
    def errors(self) -> int:
        return sum(1 for r in self.records if r.error is not None)

    def column(self, name: str) -> List[Any]:
        if name in self.key_names:
            i = self.key_names.index(name)
            return [r.key[i] for r in self.records]
        if name in BASE_COLUMNS:
            return [getattr(r, name) for r in self.records]
        if name == "error":
            return [r.error for r in self.records]
        return [r.extras.get(name) for r in self.records]

    def summaries(self) -> List[ColumnSummary]:
        names = ("value", "normalized") + self.extra_columns
        return [ColumnSummary.from_values(n, self.column(n)) for n in names]

    def row(self, record: ExperimentRecord) -> List[Any]:
        return (
            list(record.key)
            + [getattr(record, name) for name in BASE_COLUMNS]
            + [record.extras.get(name) for name in self.extra_columns]
            + [record.error]
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "experiment": self.experiment,
            "key_names": list(self.key_names),
            "extra_columns": list(self.extra_columns),
            "config": self.config,
            "header": self.header,
            "checks": dict(self.checks),
            "records": [r.to_dict() for r in self.records],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ExperimentReport":
        version = data.get("schema_version")
        if version != SCHEMA_VERSION:
            raise ValueError(f"unsupported report schema version {version!r}")
        return cls(
            experiment=data["experiment"],
            key_names=tuple(data["key_names"]),
            extra_columns=tuple(data.get("extra_columns", ())),
            records=[ExperimentRecord.from_dict(r) for r in data.get("records", [])],
            config=dict(data.get("config", {})),
            header=dict(data.get("header", {})),
            checks=dict(data.get("checks", {})),
        )

    def describe(self) -> str:
        """Human-readable summary."""
        lines = [
            f"Experiment: {self.experiment}",
            f"Records: {len(self.records)} (violations: {self.violations}, errors: {self.errors})",
        ]
        for name, ok in sorted(self.checks.items()):
            lines.append(f"Check {name}: {'pass' if ok else 'FAIL'}")
        lines.append("")
        lines.extend(s.describe() for s in self.summaries())
        lines.append("")
        lines.append(f"Result: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)
