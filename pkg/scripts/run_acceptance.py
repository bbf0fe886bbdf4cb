#!/usr/bin/env python3
"""
Acceptance run

Runs every experiment config in configs/ and writes the reports to an output
directory. Exits non-zero if any report has a violated bound, an errored
record or a failed check.

Usage:
    python scripts/run_acceptance.py --out results/
    python scripts/run_acceptance.py --only thm1_conjugated.json cesaro.json
"""

import argparse
import glob
import logging
import os
import sys

from pwlab.cli import configure_logging
from pwlab.errors import PwlabError
from pwlab.lab.config import ExperimentConfig
from pwlab.lab.experiments import run_experiment
from pwlab.lab.reporter import emit

LOGGER = logging.getLogger("pwlab.acceptance")

EXTENSIONS = {"csv": "csv", "json": "json", "text": "txt"}


def main() -> int:
    parser = argparse.ArgumentParser(description="Run the pwlab acceptance configs")
    parser.add_argument("--configs", default="configs", help="Directory of JSON configs")
    parser.add_argument("--out", default="results", help="Directory for the reports")
    parser.add_argument("--only", nargs="+", help="Config file names to run")
    parser.add_argument("--log-level", default="INFO")
    args = parser.parse_args()
    configure_logging(args.log_level)

    paths = sorted(glob.glob(os.path.join(args.configs, "*.json")))
    if args.only:
        paths = [p for p in paths if os.path.basename(p) in args.only]
    os.makedirs(args.out, exist_ok=True)

    print("=" * 60)
    print("  PWLAB ACCEPTANCE")
    print("=" * 60)
    failures = []
    for path in paths:
        name = os.path.basename(path)
        try:
            config = ExperimentConfig.from_file(path)
            stem = os.path.splitext(name)[0]
            target = os.path.join(args.out, f"{stem}.{EXTENSIONS[config.output.format]}")
            report = run_experiment(config)
            emit(report, target, config.output.format)
        except PwlabError as exc:
            LOGGER.error("%s: %s", name, exc)
            failures.append(name)
            print(f"{name:<32} ERROR")
            continue
        status = "PASS" if report.passed else "FAIL"
        if not report.passed:
            failures.append(name)
        print(f"{name:<32} {status}  ({len(report.records)} records, {report.violations} violations)")

    print("-" * 60)
    print(f"{len(paths) - len(failures)}/{len(paths)} configs passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
