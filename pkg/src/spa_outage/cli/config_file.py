"""INI scenario files.

Each section describes one scenario. Keys are Scenario field names (`lambda`
for the intensity); sweep_* keys and `methods` describe a sweep or comparison.
"""

import configparser
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, get_args

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..errors import ConfigError
from ..scenario import MethodName, Scenario

logger = logging.getLogger(__name__)

SWEEP_KEYS = ("sweep_field", "sweep_from", "sweep_to", "sweep_steps", "sweep_scale")
INTEGER_FIELDS = ("L", "seed", "mc_trials")


class SweepSpec(BaseModel):
    """Grid of values for one Scenario field."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    field_name: str = Field(alias="sweep_field")
    start: float = Field(alias="sweep_from")
    stop: float = Field(alias="sweep_to")
    steps: int = Field(alias="sweep_steps", ge=1)
    scale: Literal["linear", "log"] = Field("linear", alias="sweep_scale")

    @field_validator("field_name")
    @classmethod
    def validate_field_name(cls, v: str) -> str:
        """The swept key must be a numeric Scenario field."""
        name = "lam" if v == "lambda" else v
        if name not in Scenario.model_fields or name in ("model", "method"):
            raise ValueError(f"cannot sweep {v!r}")
        return name

    @model_validator(mode="after")
    def validate_log_range(self) -> "SweepSpec":
        if self.scale == "log" and not (self.start > 0 and self.stop > 0):
            raise ValueError("log sweeps need positive endpoints")
        return self

    def grid(self) -> List[float]:
        if self.scale == "log":
            values = np.geomspace(self.start, self.stop, self.steps)
        else:
            values = np.linspace(self.start, self.stop, self.steps)
        if self.field_name in INTEGER_FIELDS:
            return [float(round(v)) for v in values]
        return [float(v) for v in values]


@dataclass
class ScenarioFile:
    """Raw contents of one section, split into scenario, sweep and method keys."""

    scenario: Dict[str, str]
    sweep: Dict[str, str] = field(default_factory=dict)
    methods: List[str] = field(default_factory=list)


def load_section(path: str, section: Optional[str] = None) -> ScenarioFile:
    """
    Read one section of an INI scenario file.

    Args:
        path: File path
        section: Section name (defaults to the first section)

    Raises:
        ConfigError: Missing file, missing section or duplicate keys
    """
    if not Path(path).is_file():
        raise ConfigError(f"config file {path!r} not found")
    parser = configparser.ConfigParser(interpolation=None)
    # keep key case: L and R_m are field names
    parser.optionxform = str  # type: ignore[assignment,method-assign]
    try:
        parser.read(path, encoding="utf-8")
    except configparser.Error as exc:
        raise ConfigError(f"cannot parse {path!r}: {exc}") from exc

    sections = parser.sections()
    if not sections:
        raise ConfigError(f"{path!r} has no scenario sections")
    name = section or sections[0]
    if name not in sections:
        raise ConfigError(f"section {name!r} not in {path!r} (have {', '.join(sections)})")

    loaded = ScenarioFile(scenario={})
    for key, value in parser.items(name):
        if key in SWEEP_KEYS:
            loaded.sweep[key] = value
        elif key == "methods":
            loaded.methods = parse_methods(value)
        else:
            loaded.scenario[key] = value
    logger.debug(f"Loaded section {name!r} from {path}: {sorted(loaded.scenario)}")
    return loaded


def parse_methods(value: str) -> List[str]:
    """Comma-separated method names, validated against the known methods."""
    methods = [m.strip() for m in value.split(",") if m.strip()]
    known = get_args(MethodName)
    unknown = [m for m in methods if m not in known]
    if unknown:
        raise ConfigError(f"unknown methods {unknown!r}; choose from {', '.join(known)}")
    return methods


def build_scenario(values: Dict[str, Any]) -> Scenario:
    """Validate raw key/value pairs into a Scenario (pydantic ValidationError on failure)."""
    return Scenario.model_validate(values)


def build_sweep(values: Dict[str, Any]) -> Optional[SweepSpec]:
    if not values:
        return None
    return SweepSpec.model_validate(values)
