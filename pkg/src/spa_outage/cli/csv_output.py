"""CSV emission with a fixed column order."""

import csv
from dataclasses import asdict, dataclass
from typing import Any, Iterable, Optional, TextIO

COLUMNS = [
    "model",
    "method",
    "sweep_field",
    "sweep_value",
    "theta_db",
    "p_out",
    "raw",
    "fell_back",
    "reference",
    "abs_err_vs_reference",
    "unstable",
    "wall_time_ms",
]


@dataclass
class CsvRow:
    model: str
    method: str
    theta_db: float
    sweep_field: Optional[str] = None
    sweep_value: Optional[float] = None
    p_out: Optional[float] = None
    raw: Optional[float] = None
    fell_back: Optional[bool] = None
    reference: Optional[float] = None
    abs_err_vs_reference: Optional[float] = None
    unstable: Optional[bool] = None
    wall_time_ms: Optional[float] = None


def format_cell(value: Any) -> str:
    """Empty for missing values, lower-case booleans, repr for floats."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_rows(rows: Iterable[CsvRow], out: TextIO) -> None:
    writer = csv.DictWriter(out, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({key: format_cell(value) for key, value in asdict(row).items()})
