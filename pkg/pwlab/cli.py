"""
CLI entry point for pwlab.

    pwlab <experiment> [--config FILE] [--out PATH] [--format csv|json|text]
                       [--a A] [--K K] [--sigma S] [--t T]
    pwlab list
    pwlab demo
"""

import argparse
import logging
import sys
from dataclasses import replace

from pwlab.errors import ConfigError, PwlabError, ReportIOError, ScheduleError
from pwlab.lab.config import EXPERIMENTS, OUTPUT_FORMATS, ExperimentConfig

LOGGER = logging.getLogger("pwlab")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2


def configure_logging(level: str = "INFO") -> None:
    """Install one stderr handler on the root logger; rich if it is available."""
    try:
        from rich.console import Console
        from rich.logging import RichHandler

        handler: logging.Handler = RichHandler(
            console=Console(stderr=True), show_path=False, rich_tracebacks=False
        )
        fmt = "%(message)s"
    except ImportError:
        handler = logging.StreamHandler(sys.stderr)
        fmt = "%(asctime)s %(levelname)s %(name)s: %(message)s"
    handler.setFormatter(logging.Formatter(fmt))
    root = logging.getLogger()
    root.handlers[:] = [handler]
    root.setLevel(getattr(logging, level.upper(), logging.INFO))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pwlab",
        description="pwlab - divergence experiments for sampling series in Paley-Wiener spaces",
    )
    parser.add_argument(
        "--log-level",
        default="INFO",
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Logging level (default: INFO)",
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-c", "--config", help="JSON config file (fields not given keep defaults)")
    common.add_argument("-o", "--out", help="Report file (format inferred from extension)")
    common.add_argument("-f", "--format", choices=OUTPUT_FORMATS, help="Report format")
    common.add_argument("--a", type=float, help="Oversampling factor")
    common.add_argument("--K", type=int, help="Number of windows of the construction")
    common.add_argument("--sigma", type=float, help="Band limit of the filtered signal")
    common.add_argument("--t", type=float, help="Evaluation time")
    common.add_argument(
        "--sequential",
        action="store_true",
        help="Evaluate keys in order on the main thread",
    )

    subparsers = parser.add_subparsers(dest="command", help="Available commands")
    from pwlab.lab.experiments import REGISTRY

    for name in EXPERIMENTS:
        subparsers.add_parser(name, parents=[common], help=REGISTRY[name].description)

    subparsers.add_parser("list", help="List experiments")
    demo_parser = subparsers.add_parser("demo", help="Run every experiment at desk scale")
    demo_parser.add_argument(
        "--only",
        nargs="+",
        choices=EXPERIMENTS,
        help="Restrict the desk sweep to these experiments",
    )
    return parser


def load_config(args: argparse.Namespace) -> ExperimentConfig:
    """Config file (or defaults) for the chosen experiment, with CLI overrides applied."""
    if args.config:
        config = ExperimentConfig.from_file(args.config)
        if config.experiment != args.command:
            raise ConfigError(
                f"config is for {config.experiment!r}, not {args.command!r}",
                field="experiment",
            )
    else:
        config = ExperimentConfig(experiment=args.command)
    config = config.with_overrides(a=args.a, K=args.K, sigma=args.sigma, t=args.t)
    output = config.output
    if args.out or args.format:
        output = replace(output, path=args.out or output.path, format=args.format or output.format)
        config = replace(config, output=output)
    return config


def run_command(args: argparse.Namespace) -> int:
    """Run one experiment and emit its report."""
    from pwlab.lab.experiments import run_experiment
    from pwlab.lab.reporter import ReportFormat, Reporter

    try:
        config = load_config(args)
    except (ConfigError, ScheduleError) as exc:
        LOGGER.error("invalid configuration: %s", exc)
        return EXIT_CONFIG

    try:
        report = run_experiment(config, sequential=args.sequential)
    except ScheduleError as exc:
        LOGGER.error("construction failed: %s", exc)
        return EXIT_CONFIG
    except PwlabError as exc:
        LOGGER.error("%s failed: %s", config.experiment, exc)
        return EXIT_FAILED

    reporter = Reporter(report)
    if config.output.path:
        try:
            reporter.save(config.output.path, args.format)
        except ReportIOError as exc:
            LOGGER.error("%s", exc)
            return EXIT_FAILED
        LOGGER.info("report saved to %s", config.output.path)
    else:
        print(reporter.generate(ReportFormat.parse(config.output.format)))

    if not report.passed:
        LOGGER.warning(
            "%s: %d violated bounds, %d errors, failed checks: %s",
            report.experiment,
            report.violations,
            report.errors,
            sorted(k for k, ok in report.checks.items() if not ok) or "none",
        )
        return EXIT_FAILED
    return EXIT_OK


def list_experiments() -> int:
    from pwlab.lab.experiments import REGISTRY

    for name in EXPERIMENTS:
        print(f"{name:<26} {REGISTRY[name].description}")
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)

    if args.command == "list":
        return list_experiments()
    if args.command == "demo":
        from pwlab.examples.desk_sweep import main as demo_main

        return demo_main(args.only)
    if args.command in EXPERIMENTS:
        return run_command(args)
    parser.print_help()
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
