"""spa-outage command-line entry point."""

import argparse
import logging
import sys
from contextlib import contextmanager
from typing import Any, Dict, Iterator, List, Optional, Sequence, TextIO

from pydantic import ValidationError

from .cli import (
    build_scenario,
    build_sweep,
    load_section,
    run_compare,
    run_oracle,
    run_outage,
    run_sweep,
    to_row,
    write_rows,
)
from .cli.config_file import SWEEP_KEYS, parse_methods
from .config import Settings, get_settings
from .errors import ConfigError, SpaOutageError
from .logging_config import configure_logging
from .scenario import Scenario

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3

COMMANDS = ("outage", "sweep", "compare", "oracle")
_COMMON_FIELDS = ("method", "seed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spa-outage",
        allow_abbrev=False,
        description="SINR outage probabilities by saddle point approximation",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--config", help="INI scenario file")
    parser.add_argument("--scenario", help="Section of the scenario file (default: first)")
    parser.add_argument("--method", help="auto, nig, sym_nig, normal, gil_pelaez or mc")
    parser.add_argument("--methods", help="Comma-separated methods for sweep and compare")
    parser.add_argument("--seed", help="Monte Carlo seed")
    parser.add_argument("--out", help="CSV output path (default: stdout)")
    parser.add_argument("--threads", type=int, help="Worker threads")
    parser.add_argument("--timing", action="store_true", help="Fill the wall_time_ms column")

    fields = parser.add_argument_group("scenario fields")
    for name, info in Scenario.model_fields.items():
        if name in _COMMON_FIELDS:
            continue
        flags = [f"--{name}"] + ([f"--{info.alias}"] if info.alias else [])
        fields.add_argument(*flags, dest=name)
    for key in SWEEP_KEYS:
        fields.add_argument(f"--{key}", dest=key)
    return parser


def _collect(args: argparse.Namespace) -> Dict[str, Any]:
    """Config file values overridden by any flag given on the command line."""
    loaded = load_section(args.config, args.scenario) if args.config else None
    scenario: Dict[str, Any] = dict(loaded.scenario) if loaded else {}
    if "lambda" in scenario:
        scenario["lam"] = scenario.pop("lambda")
    sweep: Dict[str, Any] = dict(loaded.sweep) if loaded else {}
    methods: List[str] = list(loaded.methods) if loaded else []

    for name in Scenario.model_fields:
        value = getattr(args, name, None)
        if value is not None:
            scenario[name] = value
    for key in SWEEP_KEYS:
        value = getattr(args, key)
        if value is not None:
            sweep[key] = value
    if args.methods:
        methods = parse_methods(args.methods)
    return {"scenario": scenario, "sweep": sweep, "methods": methods}


def _settings(args: argparse.Namespace) -> Settings:
    settings = get_settings()
    updates: Dict[str, Any] = {}
    if args.threads is not None:
        if args.threads < 1:
            raise ConfigError("--threads must be at least 1")
        updates["threads"] = args.threads
    if args.timing:
        updates["record_timing"] = True
    return settings.model_copy(update=updates) if updates else settings


@contextmanager
def _output(path: Optional[str]) -> Iterator[TextIO]:
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as handle:
        yield handle


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one CLI command; returns the process exit code."""
    args = build_parser().parse_args(argv)
    try:
        settings = _settings(args)
    except (ValidationError, ConfigError) as exc:
        configure_logging()
        logger.error(f"Invalid configuration: {exc}")
        return EXIT_CONFIG
    configure_logging(settings.log_level, settings.log_json)

    try:
        collected = _collect(args)
        scenario = build_scenario(collected["scenario"])
        sweep = build_sweep(collected["sweep"])
        methods = collected["methods"] or [scenario.method]
        if args.command == "sweep" and sweep is None:
            raise ConfigError("sweep needs sweep_field, sweep_from, sweep_to and sweep_steps")
    except (ValidationError, ConfigError) as exc:
        logger.error(f"Invalid configuration: {exc}")
        return EXIT_CONFIG

    try:
        if args.command == "outage":
            rows = [to_row(scenario, scenario.method, run_outage(scenario, settings))]
        elif args.command == "sweep":
            assert sweep is not None
            rows = run_sweep(scenario, sweep, methods, settings)
        elif args.command == "compare":
            rows = run_compare(scenario, methods, settings)
        else:
            rows = run_oracle(scenario, settings)
    except ValidationError as exc:
        logger.error(f"Invalid sweep grid: {exc}")
        return EXIT_CONFIG
    except SpaOutageError as exc:
        logger.error(f"{args.command} failed: {exc}")
        return EXIT_NUMERIC

    with _output(args.out) as out:
        write_rows(rows, out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
