"""Command-line verbs: outage, sweep, compare and oracle."""

from .commands import (
    evaluate,
    reference_value,
    run_compare,
    run_oracle,
    run_outage,
    run_sweep,
    to_row,
)
from .config_file import ScenarioFile, SweepSpec, build_scenario, build_sweep, load_section
from .csv_output import COLUMNS, CsvRow, format_cell, write_rows

__all__ = [
    "COLUMNS",
    "CsvRow",
    "ScenarioFile",
    "SweepSpec",
    "build_scenario",
    "build_sweep",
    "evaluate",
    "format_cell",
    "load_section",
    "reference_value",
    "run_compare",
    "run_oracle",
    "run_outage",
    "run_sweep",
    "to_row",
    "write_rows",
]
