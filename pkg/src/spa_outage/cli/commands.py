"""Command implementations behind the CLI verbs."""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from typing import Dict, List, Optional, Sequence

from ..cgf import QuadratureSettings
from ..config import Settings
from ..errors import ConfigError, SpaOutageError
from ..oracles import InversionSettings, McSettings, gil_pelaez_ccdf, mc_outage
from ..scenario import SPA_METHODS, Scenario
from ..spa import OutageResult, outage
from .config_file import SweepSpec
from .csv_output import CsvRow

logger = logging.getLogger(__name__)

Results = Dict[str, Optional[OutageResult]]


def evaluate(scenario: Scenario, method: str, settings: Settings) -> OutageResult:
    """
    Outage probability of one scenario by one method.

    Raises:
        ConfigError: Unknown method
        SpaOutageError: Numerical failure
    """
    start = time.perf_counter()
    quad = QuadratureSettings.from_settings(settings)
    if method in SPA_METHODS:
        result = outage(scenario, method, quad)
    elif method == "gil_pelaez":
        inv = gil_pelaez_ccdf(
            scenario.build_cgf(quad),
            scenario.evaluation_point,
            InversionSettings.from_settings(settings),
        )
        result = OutageResult(
            p_out=min(1.0, max(0.0, inv.value)),
            raw=inv.value,
            method=method,
            method_used=method,
            err_est=inv.err_est,
            unstable=inv.unstable,
        )
    elif method == "mc":
        mc = mc_outage(scenario, McSettings.from_settings(settings))
        result = OutageResult(
            p_out=mc.p_hat,
            raw=mc.p_hat,
            method=method,
            method_used=method,
            ci_halfwidth=mc.ci_halfwidth,
        )
    else:
        raise ConfigError(f"unknown method {method!r}")

    if settings.record_timing:
        result = replace(result, wall_time_ms=(time.perf_counter() - start) * 1e3)
    return result


def run_outage(scenario: Scenario, settings: Settings) -> OutageResult:
    """Evaluate the scenario with its own method."""
    return evaluate(scenario, scenario.method, settings)


def to_row(
    scenario: Scenario,
    method: str,
    result: Optional[OutageResult],
    reference: Optional[float] = None,
    sweep_field: Optional[str] = None,
    sweep_value: Optional[float] = None,
) -> CsvRow:
    """CSV row for a result; a None result gives a row with empty numeric cells."""
    row = CsvRow(
        model=scenario.model,
        method=method,
        theta_db=scenario.theta_db,
        sweep_field=sweep_field,
        sweep_value=sweep_value,
    )
    if result is None:
        return row
    row.p_out = result.p_out
    row.raw = result.raw
    row.fell_back = result.fell_back
    row.unstable = result.unstable
    row.wall_time_ms = result.wall_time_ms
    if reference is not None:
        row.reference = reference
        row.abs_err_vs_reference = abs(result.p_out - reference)
    return row


def _evaluate_point(scenario: Scenario, methods: Sequence[str], settings: Settings) -> Results:
    results: Results = {}
    for method in methods:
        try:
            results[method] = evaluate(scenario, method, settings)
        except SpaOutageError as exc:
            logger.warning(f"{method} failed for {scenario.model} at {scenario.theta_db} dB: {exc}")
            results[method] = None
    return results


def reference_value(results: Results) -> Optional[float]:
    """Gil-Pelaez value unless missing or unstable, then Monte Carlo."""
    gp = results.get("gil_pelaez")
    if gp is not None and not gp.unstable:
        return gp.p_out
    mc = results.get("mc")
    if mc is not None:
        return mc.p_out
    return None


def _rows(
    scenario: Scenario,
    results: Results,
    sweep_field: Optional[str] = None,
    sweep_value: Optional[float] = None,
) -> List[CsvRow]:
    reference = reference_value(results)
    return [
        to_row(scenario, method, result, reference, sweep_field, sweep_value)
        for method, result in results.items()
    ]


def run_sweep(
    scenario: Scenario, sweep: SweepSpec, methods: Sequence[str], settings: Settings
) -> List[CsvRow]:
    """
    One row per grid point and method, in grid order.

    Points are evaluated on settings.threads workers; failed evaluations give
    rows with empty numeric cells.

    Raises:
        ValidationError: A grid value violates the scenario constraints
    """
    grid = sweep.grid()
    points = [scenario.with_updates(**{sweep.field_name: value}) for value in grid]
    logger.info(f"Sweeping {sweep.field_name} over {len(grid)} points with {list(methods)}")

    def job(point: Scenario) -> Results:
        return _evaluate_point(point, methods, settings)

    if settings.threads > 1:
        with ThreadPoolExecutor(max_workers=settings.threads) as pool:
            outcomes = list(pool.map(job, points))
    else:
        outcomes = [job(point) for point in points]

    rows: List[CsvRow] = []
    for value, point, results in zip(grid, points, outcomes):
        rows.extend(_rows(point, results, sweep.field_name, value))
    return rows


def run_compare(scenario: Scenario, methods: Sequence[str], settings: Settings) -> List[CsvRow]:
    """
    Rows for each method plus the reference, with |p_out - reference|.

    Gil-Pelaez is the reference; Monte Carlo is added and takes over when the
    inversion is unstable or fails.
    """
    ordered = list(dict.fromkeys(methods))
    results = _evaluate_point(scenario, ordered, settings)
    if "gil_pelaez" not in results:
        results.update(_evaluate_point(scenario, ["gil_pelaez"], settings))
    gp = results["gil_pelaez"]
    if (gp is None or gp.unstable) and "mc" not in results:
        logger.info("Gil-Pelaez value unavailable or unstable; using Monte Carlo as reference")
        results.update(_evaluate_point(scenario, ["mc"], settings))
    return _rows(scenario, results)


def run_oracle(scenario: Scenario, settings: Settings) -> List[CsvRow]:
    """Gil-Pelaez and Monte Carlo values for one scenario."""
    return _rows(scenario, _evaluate_point(scenario, ["gil_pelaez", "mc"], settings))
