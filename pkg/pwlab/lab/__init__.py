"""Experiment configuration, sweep execution, records and report emission."""

from pwlab.lab.config import (
    EXPERIMENTS,
    ExperimentConfig,
    GridConfig,
    OutputConfig,
)
from pwlab.lab.sweep import SweepConfig, SweepResult, SweepExecutor
from pwlab.lab.report import ExperimentRecord, ExperimentReport, ColumnSummary
from pwlab.lab.reporter import Reporter, ReportFormat, emit, load_json
from pwlab.lab.experiments import Experiment, REGISTRY, run_experiment, versions

__all__ = [
    "EXPERIMENTS",
    "ExperimentConfig",
    "GridConfig",
    "OutputConfig",
    "SweepConfig",
    "SweepResult",
    "SweepExecutor",
    "ExperimentRecord",
    "ExperimentReport",
    "ColumnSummary",
    "Reporter",
    "ReportFormat",
    "emit",
    "load_json",
    "Experiment",
    "REGISTRY",
    "run_experiment",
    "versions",
]
