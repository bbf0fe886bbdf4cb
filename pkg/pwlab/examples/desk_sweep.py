#!/usr/bin/env python
"""
Desk sweep

Runs every experiment at a configuration small enough for a laptop and
prints one pass/fail line per experiment.
"""

import logging
from typing import Dict, Iterable, List, Optional

from pwlab.lab.config import EXPERIMENTS, ExperimentConfig
from pwlab.lab.experiments import run_experiment
from pwlab.lab.report import ExperimentReport

LOGGER = logging.getLogger(__name__)

DESK_CONFIGS: Dict[str, dict] = {
    "thm1_conjugated": {"N_list": [2, 4, 8, 16, 32, 64, 128], "grid": {"search_max_N": 16}},
    "thm2_oversampled_signal": {"N_list": [2, 4, 8, 16, 32, 64]},
    "thm3_shannon": {"N_list": [2, 3, 4, 8, 16, 33, 64], "grid": {"search_max_N": 16}},
    "oversampling_kernel": {"a": 2.0, "N_list": [4, 8, 16, 32, 64]},
    "remark_sharpness": {"a": 2.0, "N_list": [16, 32, 64, 128, 256, 512, 1024]},
    "cesaro": {"M_list": [25, 50, 100, 200]},
    "subsequence": {"K": 64, "N_max": 2000},
    "threshold": {"K": 16},
    "periodic_demo": {"M_list": [25, 50, 100, 200]},
    "hardy_demo": {"r_list": [0.5, 0.9, 0.99]},
}


def desk_config(name: str) -> ExperimentConfig:
    data = dict(DESK_CONFIGS[name], experiment=name)
    data.setdefault("sweep", {"show_progress": False})
    return ExperimentConfig.from_dict(data)


def run_desk_sweep(names: Optional[Iterable[str]] = None) -> List[ExperimentReport]:
    """Run the desk configuration of each named experiment (all by default)."""
    reports = []
    for name in names or EXPERIMENTS:
        LOGGER.info("desk sweep: %s", name)
        reports.append(run_experiment(desk_config(name)))
    return reports


def _print_table(reports: List[ExperimentReport]) -> None:
    try:
        from rich.console import Console
        from rich.table import Table
    except ImportError:
        print("\n" + "=" * 60)
        print("DESK SWEEP SUMMARY")
        print("=" * 60)
        print(f"\n{'Experiment':<26} {'Records':>8} {'Violations':>11} {'Errors':>7} {'Result':>7}")
        print("-" * 60)
        for r in reports:
            result = "PASS" if r.passed else "FAIL"
            print(f"{r.experiment:<26} {len(r.records):>8} {r.violations:>11} {r.errors:>7} {result:>7}")
        return

    table = Table(title="Desk sweep")
    for column in ("Experiment", "Records", "Violations", "Errors", "Checks", "Result"):
        table.add_column(column)
    for r in reports:
        checks = ", ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in sorted(r.checks.items()))
        table.add_row(
            r.experiment,
            str(len(r.records)),
            str(r.violations),
            str(r.errors),
            checks or "-",
            "[green]PASS[/green]" if r.passed else "[red]FAIL[/red]",
        )
    Console().print(table)


def main(names: Optional[Iterable[str]] = None) -> int:
    reports = run_desk_sweep(names)
    _print_table(reports)
    return 0 if all(r.passed for r in reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())
