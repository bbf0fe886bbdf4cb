"""
Experiment configuration.

Configs are JSON documents; every field has a default so a config file only
names what it changes. Validation happens on construction and raises
ConfigError naming the offending field.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, fields, replace
from typing import Any, Dict, Optional, Tuple

from pwlab.errors import ConfigError, EmptyConstructionError, PwlabError
from pwlab.lab.sweep import SweepConfig
from pwlab.schedule.epsilon import EpsilonSchedule
from pwlab.systems.lti import LtiSystem

EXPERIMENTS: Tuple[str, ...] = (
    "thm1_conjugated",
    "thm2_oversampled_signal",
    "thm3_shannon",
    "oversampling_kernel",
    "remark_sharpness",
    "cesaro",
    "subsequence",
    "threshold",
    "periodic_demo",
    "hardy_demo",
)

# Experiments built on a break plan.
PLAN_EXPERIMENTS = (
    "thm1_conjugated",
    "thm2_oversampled_signal",
    "thm3_shannon",
    "oversampling_kernel",
    "subsequence",
    "threshold",
)

OUTPUT_FORMATS = ("csv", "json", "text")
CESARO_SIGNALS = ("g2", "unit")

DEFAULT_N_LIST = tuple(2 ** j for j in range(3, 13))


@dataclass(frozen=True)
class GridConfig:
    """
    Search grid parameters.

    Attributes:
        step: Grid step in t
        window_scale: Extremum window is +-(N+2) max(1, 1/a) window_scale
        search_max_N: Orders above this use only the analytic candidate points
        probe_count: Points of the operator-norm probe grid on [-1, 1]
        refine: Refine grid extrema by bounded Brent search
    """
    step: float = 0.05
    window_scale: float = 1.5
    search_max_N: int = 64
    probe_count: int = 41
    refine: bool = True

    def __post_init__(self):
        if not self.step > 0:
            raise ConfigError("must be positive", field="grid.step")
        if not self.window_scale > 0:
            raise ConfigError("must be positive", field="grid.window_scale")
        if self.search_max_N < 0:
            raise ConfigError("must be >= 0", field="grid.search_max_N")
        if self.probe_count < 1:
            raise ConfigError("must be >= 1", field="grid.probe_count")


@dataclass(frozen=True)
class OutputConfig:
    """
    Attributes:
        path: Report file; None prints to stdout
        format: csv, json or text
    """
    path: Optional[str] = None
    format: str = "csv"

    def __post_init__(self):
        if self.format not in OUTPUT_FORMATS:
            raise ConfigError(f"must be one of {OUTPUT_FORMATS}", field="output.format")


def _increasing(values, name: str, strict: bool = True) -> None:
    pairs = list(zip(values, values[1:]))
    if strict and any(b <= a for a, b in pairs):
        raise ConfigError("must be strictly increasing", field=name)


@dataclass(frozen=True)
class ExperimentConfig:
    """
    One experiment run.

    Attributes:
        experiment: Registry name (see EXPERIMENTS)
        schedule: Null sequence driving the constructions
        K: Number of windows; None picks enough breaks to cover max(N_list)
        last_break: Optional far closing break N_{K+1}
        span: Materialise samples only on |l| <= span
        a: Oversampling factor
        sigma: Band limit of the filtered signal, in (0, pi]
        N_list: Truncation orders (strictly increasing)
        M_list: Cesaro lengths or Fejer orders (strictly increasing)
        t: Evaluation time for cesaro and subsequence
        mu_schedule: Tolerances of the subsequence search
        N_max: Largest order scanned by the subsequence search
        target: Subsequence limit; None uses the reference output
        delta_list: Thresholds; empty picks 12 across the sample range
        r_list: Radii for the Hardy example
        eps: Exponent shift of the Hardy example
        M_terms: Terms of the extremal power series
        signal: Cesaro input, "g2" or "unit"
        system: LTI system for cesaro and subsequence
        growth_factor: Required growth of the normalized column from the
            first to the last N (None disables the check)
        grid: Search grid
        sweep: Executor settings
        output: Report destination
    """
    experiment: str
    schedule: EpsilonSchedule = field(default_factory=EpsilonSchedule)
    K: Optional[int] = None
    last_break: Optional[int] = None
    span: Optional[int] = None
    a: float = 2.0
    sigma: float = math.pi / 2
    N_list: Tuple[int, ...] = DEFAULT_N_LIST
    M_list: Tuple[int, ...] = (25, 50, 100, 200)
    t: float = 0.3
    mu_schedule: Tuple[float, ...] = (0.2, 0.1, 0.05, 0.02)
    N_max: int = 2000
    target: Optional[float] = None
    delta_list: Tuple[float, ...] = ()
    r_list: Tuple[float, ...] = (0.5, 0.9, 0.99)
    eps: float = 0.5
    M_terms: int = 2000
    signal: str = "g2"
    system: LtiSystem = field(default_factory=LtiSystem.hilbert)
    growth_factor: Optional[float] = None
    grid: GridConfig = field(default_factory=GridConfig)
    sweep: SweepConfig = field(default_factory=SweepConfig)
    output: OutputConfig = field(default_factory=OutputConfig)

    def __post_init__(self):
        object.__setattr__(self, "N_list", tuple(int(n) for n in self.N_list))
        object.__setattr__(self, "M_list", tuple(int(m) for m in self.M_list))
        object.__setattr__(self, "mu_schedule", tuple(float(m) for m in self.mu_schedule))
        object.__setattr__(self, "delta_list", tuple(float(d) for d in self.delta_list))
        object.__setattr__(self, "r_list", tuple(float(r) for r in self.r_list))
        self.validate()

    def validate(self) -> None:
        """
        Raises:
            ConfigError: On the first invalid field
            EmptyConstructionError: If K = 0 for a plan-based experiment
        """
        name = self.experiment
        if name not in EXPERIMENTS:
            raise ConfigError(f"unknown experiment {name!r}", field="experiment")
        if name in PLAN_EXPERIMENTS and self.K is not None:
            if self.K == 0:
                raise EmptyConstructionError("empty construction", field="K")
            if self.K < 0:
                raise ConfigError("must be >= 1", field="K")
        if self.span is not None and self.span < 0:
            raise ConfigError("must be >= 0", field="span")
        if not self.N_list or any(n < 1 for n in self.N_list):
            raise ConfigError("must be a nonempty list of positive orders", field="N_list")
        _increasing(self.N_list, "N_list")
        if not self.M_list or any(m < 1 for m in self.M_list):
            raise ConfigError("must be a nonempty list of positive lengths", field="M_list")
        _increasing(self.M_list, "M_list")
        if name in ("oversampling_kernel", "remark_sharpness") and not self.a > 1:
            raise ConfigError("oversampling factor must exceed 1", field="a")
        if not 0 < self.sigma <= math.pi:
            raise ConfigError("must lie in (0, pi]", field="sigma")
        if not self.mu_schedule or any(m <= 0 for m in self.mu_schedule):
            raise ConfigError("must be positive", field="mu_schedule")
        if any(b > a for a, b in zip(self.mu_schedule, self.mu_schedule[1:])):
            raise ConfigError("must not increase", field="mu_schedule")
        if self.N_max < 1:
            raise ConfigError("must be >= 1", field="N_max")
        if any(d <= 0 for d in self.delta_list):
            raise ConfigError("thresholds must be positive", field="delta_list")
        if not self.r_list or any(not 0 < r < 1 for r in self.r_list):
            raise ConfigError("radii must lie in (0, 1)", field="r_list")
        _increasing(self.r_list, "r_list")
        if not self.eps > 0:
            raise ConfigError("must be positive", field="eps")
        if self.M_terms < 1:
            raise ConfigError("must be >= 1", field="M_terms")
        if self.signal not in CESARO_SIGNALS:
            raise ConfigError(f"must be one of {CESARO_SIGNALS}", field="signal")
        if self.growth_factor is not None and not self.growth_factor > 0:
            raise ConfigError("must be positive", field="growth_factor")

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ExperimentConfig":
        """Build from the JSON form; unknown keys are rejected."""
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown keys {unknown}", field=unknown[0])
        if "experiment" not in data:
            raise ConfigError("missing", field="experiment")
        kwargs = dict(data)
        for key, parse in (("schedule", EpsilonSchedule.from_dict), ("system", LtiSystem.from_dict)):
            if key in kwargs:
                try:
                    kwargs[key] = parse(kwargs[key])
                except (PwlabError, ValueError, TypeError) as exc:
                    raise ConfigError(str(exc), field=key) from exc
        for key, sub in (("grid", GridConfig), ("output", OutputConfig)):
            if key in kwargs:
                try:
                    kwargs[key] = sub(**kwargs[key])
                except TypeError as exc:
                    raise ConfigError(str(exc), field=key) from exc
        if "sweep" in kwargs:
            try:
                kwargs["sweep"] = SweepConfig.from_dict(kwargs["sweep"])
            except (TypeError, ValueError) as exc:
                raise ConfigError(str(exc), field="sweep") from exc
        return cls(**kwargs)

    @classmethod
    def from_file(cls, path: str) -> "ExperimentConfig":
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read {path}: {exc}", field="config") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path} is not valid JSON: {exc}", field="config") from exc
        if not isinstance(data, dict):
            raise ConfigError("top level must be an object", field="config")
        return cls.from_dict(data)

    def with_overrides(self, **overrides: Any) -> "ExperimentConfig":
        """Copy with the given fields replaced; None values are ignored."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        if not changes:
            return self
        return replace(self, **changes)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "experiment": self.experiment,
            "schedule": self.schedule.to_dict(),
            "K": self.K,
            "last_break": self.last_break,
            "span": self.span,
            "a": self.a,
            "sigma": self.sigma,
            "N_list": list(self.N_list),
            "M_list": list(self.M_list),
            "t": self.t,
            "mu_schedule": list(self.mu_schedule),
            "N_max": self.N_max,
            "target": self.target,
            "delta_list": list(self.delta_list),
            "r_list": list(self.r_list),
            "eps": self.eps,
            "M_terms": self.M_terms,
            "signal": self.signal,
            "system": self.system.to_dict(),
            "growth_factor": self.growth_factor,
            "grid": {
                "step": self.grid.step,
                "window_scale": self.grid.window_scale,
                "search_max_N": self.grid.search_max_N,
                "probe_count": self.grid.probe_count,
                "refine": self.grid.refine,
            },
            "sweep": self.sweep.to_dict(),
            "output": {"path": self.output.path, "format": self.output.format},
        }
