"""Tests for the command-line layer."""

import csv
import io
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from spa_outage.cli import (
    COLUMNS,
    CsvRow,
    SweepSpec,
    build_scenario,
    evaluate,
    format_cell,
    load_section,
    reference_value,
    run_compare,
    run_sweep,
    to_row,
    write_rows,
)
from spa_outage.cli.config_file import parse_methods
from spa_outage.errors import ConfigError, SaddleRangeError
from spa_outage.main import EXIT_CONFIG, EXIT_NUMERIC, EXIT_OK, build_parser, main
from spa_outage.spa import OutageResult

SCENARIO_INI = """\
[poisson]
model = poisson_nakagami
theta_db = 0
lambda = 10
p = 0.7
method = normal
methods = normal, sym_nig
sweep_field = theta_db
sweep_from = -5
sweep_to = 5
sweep_steps = 3

[comp]
model = ppp_comp
theta_db = 0
avg_bs_count = 100
R_m = 150
"""


def read_csv(text: str):
    return list(csv.DictReader(io.StringIO(text)))


def result(p_out: float, method: str, **kwargs) -> OutageResult:
    return OutageResult(p_out=p_out, raw=p_out, method=method, method_used=method, **kwargs)


@pytest.fixture
def ini_file(tmp_path):
    """Scenario file with a Poisson sweep section and a PPP section."""
    path = tmp_path / "scenarios.ini"
    path.write_text(SCENARIO_INI, encoding="utf-8")
    return str(path)


class TestConfigFile:
    """Test INI scenario loading."""

    def test_first_section_by_default(self, ini_file):
        """Test the first section is read and keys are split."""
        loaded = load_section(ini_file)
        assert loaded.scenario["model"] == "poisson_nakagami"
        assert loaded.scenario["lambda"] == "10"
        assert loaded.methods == ["normal", "sym_nig"]
        assert loaded.sweep["sweep_steps"] == "3"

    def test_named_section_keeps_case(self, ini_file):
        """Test key case is preserved."""
        loaded = load_section(ini_file, "comp")
        assert loaded.scenario["R_m"] == "150"
        scenario = build_scenario(loaded.scenario)
        assert scenario.R_m == 150.0

    def test_missing_section(self, ini_file):
        """Test an unknown section raises ConfigError."""
        with pytest.raises(ConfigError):
            load_section(ini_file, "hexagonal")

    def test_missing_file(self, tmp_path):
        """Test a missing file raises ConfigError."""
        with pytest.raises(ConfigError):
            load_section(str(tmp_path / "absent.ini"))

    def test_unknown_method(self):
        """Test method names are validated."""
        assert parse_methods("auto, gil_pelaez,mc") == ["auto", "gil_pelaez", "mc"]
        with pytest.raises(ConfigError):
            parse_methods("normal, exact")


class TestSweepSpec:
    """Test sweep grids."""

    def test_linear(self):
        """Test a linear grid includes both endpoints."""
        spec = SweepSpec(sweep_field="theta_db", sweep_from=-5, sweep_to=5, sweep_steps=3)
        assert spec.grid() == [-5.0, 0.0, 5.0]

    def test_log(self):
        """Test a log grid."""
        spec = SweepSpec(
            sweep_field="lambda", sweep_from=1, sweep_to=100, sweep_steps=3, sweep_scale="log"
        )
        assert spec.field_name == "lam"
        assert spec.grid() == pytest.approx([1.0, 10.0, 100.0])

    def test_integer_field_rounded(self):
        """Test integer fields get whole values."""
        spec = SweepSpec(sweep_field="L", sweep_from=1, sweep_to=10, sweep_steps=4)
        assert spec.grid() == [1.0, 4.0, 7.0, 10.0]

    def test_invalid(self):
        """Test non-numeric fields and non-positive log ranges are rejected."""
        with pytest.raises(ValidationError):
            SweepSpec(sweep_field="model", sweep_from=0, sweep_to=1, sweep_steps=2)
        with pytest.raises(ValidationError):
            SweepSpec(
                sweep_field="lam", sweep_from=0, sweep_to=1, sweep_steps=2, sweep_scale="log"
            )


class TestCsvOutput:
    """Test CSV formatting."""

    def test_format_cell(self):
        """Test cell rendering."""
        assert format_cell(None) == ""
        assert format_cell(True) == "true"
        assert format_cell(False) == "false"
        assert format_cell(0.1) == "0.1"
        assert format_cell("normal") == "normal"

    def test_write_rows(self):
        """Test header order and empty cells."""
        out = io.StringIO()
        write_rows([CsvRow(model="nakagami_link", method="mc", theta_db=3.0, p_out=0.25)], out)
        lines = out.getvalue().splitlines()
        assert lines[0] == ",".join(COLUMNS)
        row = read_csv(out.getvalue())[0]
        assert row["p_out"] == "0.25"
        assert row["fell_back"] == ""

    def test_to_row_reference(self, poisson_scenario):
        """Test the absolute error column."""
        row = to_row(poisson_scenario, "normal", result(0.30, "normal"), reference=0.25)
        assert row.reference == 0.25
        assert row.abs_err_vs_reference == pytest.approx(0.05)

    def test_to_row_failed(self, poisson_scenario):
        """Test a failed evaluation leaves numeric cells empty."""
        row = to_row(poisson_scenario, "nig", None, reference=0.25)
        assert row.p_out is None
        assert row.reference is None


class TestCommands:
    """Test command implementations."""

    def test_reference_prefers_stable_inversion(self):
        """Test Gil-Pelaez is the reference unless unstable."""
        stable = {"gil_pelaez": result(0.4, "gil_pelaez", unstable=False), "mc": result(0.41, "mc")}
        assert reference_value(stable) == 0.4
        shaky = {"gil_pelaez": result(1e-12, "gil_pelaez", unstable=True), "mc": result(0.0, "mc")}
        assert reference_value(shaky) == 0.0
        assert reference_value({"normal": result(0.3, "normal")}) is None

    @patch("spa_outage.cli.commands.evaluate")
    def test_compare_adds_monte_carlo(self, mock_evaluate, poisson_scenario, settings):
        """Test compare falls back to Monte Carlo when inversion is unstable."""

        def fake(scenario, method, settings):
            return result(0.3, method, unstable=True if method == "gil_pelaez" else None)

        mock_evaluate.side_effect = fake
        rows = run_compare(poisson_scenario, ["normal"], settings)
        assert [row.method for row in rows] == ["normal", "gil_pelaez", "mc"]
        assert rows[0].reference == 0.3

    @patch("spa_outage.cli.commands.evaluate")
    def test_failed_method_gives_empty_row(self, mock_evaluate, poisson_scenario, settings):
        """Test numerical failures are logged and kept as empty rows."""

        def fake(scenario, method, settings):
            if method == "nig":
                raise SaddleRangeError(0.0, (1.0, 2.0))
            return result(0.3, method, unstable=False)

        mock_evaluate.side_effect = fake
        rows = run_compare(poisson_scenario, ["nig"], settings)
        assert rows[0].method == "nig"
        assert rows[0].p_out is None
        assert rows[1].p_out == 0.3

    def test_sweep_in_grid_order(self, poisson_scenario, settings):
        """Test one row per point and method, ordered by grid value."""
        spec = SweepSpec(sweep_field="theta_db", sweep_from=-5, sweep_to=5, sweep_steps=3)
        rows = run_sweep(poisson_scenario, spec, ["normal", "sym_nig"], settings)
        assert [(row.sweep_value, row.method) for row in rows] == [
            (-5.0, "normal"), (-5.0, "sym_nig"),
            (0.0, "normal"), (0.0, "sym_nig"),
            (5.0, "normal"), (5.0, "sym_nig"),
        ]
        outages = [row.p_out for row in rows if row.method == "normal"]
        assert outages == sorted(outages)

    def test_timing(self, link_scenario, settings):
        """Test wall time is recorded only when requested."""
        scenario = link_scenario(3.0)
        assert evaluate(scenario, "normal", settings).wall_time_ms is None
        timed = settings.model_copy(update={"record_timing": True})
        assert evaluate(scenario, "normal", timed).wall_time_ms >= 0.0

    def test_unknown_method(self, link_scenario, settings):
        """Test evaluate rejects unknown methods."""
        with pytest.raises(ConfigError):
            evaluate(link_scenario(), "exact", settings)


class TestMain:
    """Test the entry point and its exit codes."""

    def test_parser_aliases(self):
        """Test --lambda fills the lam field."""
        args = build_parser().parse_args(["outage", "--model", "poisson_nakagami", "--lambda", "5"])
        assert args.lam == "5"
        assert args.command == "outage"

    def test_outage_stdout(self, capsys):
        """Test a single outage row on stdout."""
        code = main(["outage", "--model", "nakagami_link", "--theta_db", "3", "--method", "normal"])
        assert code == EXIT_OK
        rows = read_csv(capsys.readouterr().out)
        assert len(rows) == 1
        assert rows[0]["method"] == "normal"
        assert 0.0 < float(rows[0]["p_out"]) < 1.0

    def test_sweep_to_file(self, ini_file, tmp_path):
        """Test a sweep from a config file written to --out."""
        out = tmp_path / "sweep.csv"
        code = main(["sweep", "--config", ini_file, "--out", str(out)])
        assert code == EXIT_OK
        rows = read_csv(out.read_text(encoding="utf-8"))
        assert len(rows) == 6
        assert {row["sweep_field"] for row in rows} == {"theta_db"}

    def test_flag_overrides_file(self, ini_file, capsys):
        """Test command-line fields win over the file."""
        code = main(["outage", "--config", ini_file, "--theta_db", "2"])
        assert code == EXIT_OK
        assert read_csv(capsys.readouterr().out)[0]["theta_db"] == "2.0"

    def test_invalid_scenario(self):
        """Test validation failures exit with the configuration code."""
        assert main(["outage", "--model", "poisson_nakagami", "--theta_db", "0"]) == EXIT_CONFIG

    def test_sweep_without_grid(self):
        """Test sweep without sweep keys is a configuration error."""
        assert main(["sweep", "--model", "nakagami_link", "--theta_db", "0"]) == EXIT_CONFIG

    def test_bad_threads(self):
        """Test --threads 0 is a configuration error."""
        args = ["outage", "--model", "nakagami_link", "--theta_db", "0", "--threads", "0"]
        assert main(args) == EXIT_CONFIG

    @patch("spa_outage.main.run_outage")
    def test_numeric_failure(self, mock_run_outage):
        """Test numerical failures exit with the numeric code."""
        mock_run_outage.side_effect = SaddleRangeError(0.0, (1.0, 2.0))
        assert main(["outage", "--model", "nakagami_link", "--theta_db", "0"]) == EXIT_NUMERIC
