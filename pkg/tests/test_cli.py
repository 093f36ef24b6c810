"""Tests for the command line and its output records."""

import json
import sys
import logging
from fractions import Fraction

import pytest
from mpmath import mpc, mpf

from indexdens.cli.main import EXIT_ERROR, EXIT_OK, build_parser, main
from indexdens.cli.output import OutputRecord, render, render_complex, render_real
from indexdens.cli.verify import significant_tolerance, verify_table2
from indexdens.core.settings import DEFAULT_TERMS, TEST_TERMS, ComputeSettings
from indexdens.core.types import ExclusionConvention, OutputFormat
from indexdens.core.values import BigComplexValue, BigRealValue
from indexdens.harness.counting import count
from tests.golden import ARTIN_A1, B_PSI, CATALAN, GOLDEN_THEORY

FAST = ["--terms", str(TEST_TERMS)]


def _records(capsys, argv):
    status = main(FAST + ["--format", "records"] + argv)
    out = capsys.readouterr().out
    return status, json.loads(out)


class TestRendering:
    """Tests for decimal rendering of balls."""

    def test_exact_rational(self):
        """Test that a tiny radius allows every requested digit."""
        assert render_real(BigRealValue.from_number(Fraction(19, 20), 192), 4) == "0.9500"

    def test_truncation_warns(self, caplog):
        """Test that digits beyond the radius are dropped with a warning."""
        value = BigRealValue(mpf("0.123456789"), mpf("1e-5"), 64)

        with caplog.at_level(logging.WARNING):
            text = render_real(value, 10)

        assert text == "0.1235"
        assert "guaranteed" in caplog.text

    def test_complex(self):
        """Test both signs of the imaginary part."""
        plus = BigComplexValue(mpc("0.25", "0.5"), mpf(0), 64)
        minus = BigComplexValue(mpc("0.25", "-0.5"), mpf(0), 64)

        assert render_complex(plus, 2) == "0.25 + 0.50i"
        assert render_complex(minus, 2) == "0.25 - 0.50i"


class TestOutputRecord:
    """Tests for OutputRecord and its formats."""

    def _record(self):
        record = OutputRecord(command="rho")
        record.add_input("a", 0)
        record.add_input("d", 6)
        record.add_value("rho", BigRealValue.from_number(Fraction(1, 12), 192), 10)
        record.add_value("exact", Fraction(1, 12), 10)
        record.notes.append("example")
        return record

    def test_values_and_radii(self):
        """Test stored strings."""
        record = self._record()

        assert record.values == {"rho": "0.0833333333", "exact": "1/12"}
        assert record.radii["exact"] == "0"
        assert record.inputs == {"a": "0", "d": "6"}

    def test_records_round_trip(self):
        """Test that the JSON rendering loads back into an equal record."""
        record = self._record()
        loaded = OutputRecord.from_dict(json.loads(render(record, OutputFormat.RECORDS)))

        assert loaded == record

    def test_csv(self):
        """Test the CSV rendering."""
        lines = render(self._record(), OutputFormat.CSV).splitlines()

        assert lines[0] == "name,value,radius"
        assert lines[2] == "exact,1/12,0"

    def test_table(self):
        """Test the table rendering."""
        text = render(self._record(), OutputFormat.TABLE)

        assert text.splitlines()[0] == "rho a=0 d=6"
        assert "note: example" in text
        assert text.endswith("elapsed: 0s")

    def test_empty_table(self):
        """Test a record without values."""
        assert "(no values)" in render(OutputRecord(command="coeffs"), OutputFormat.TABLE)


class TestCommands:
    """Tests for the subcommands."""

    def test_bchi(self, capsys):
        """Test B_psi(1) from the command line."""
        status, data = _records(capsys, ["bchi", "5", "-c", "chi(2)=i"])
        real, imag = data["values"]["B"].rstrip("i").split(" + ")

        assert status == EXIT_OK
        assert abs(float(real) - B_PSI.real) < 1e-12
        assert abs(float(imag) - B_PSI.imag) < 1e-12
        assert data["inputs"]["character"] == "chi_5[1]"
        assert data["inputs"]["terms"] == str(TEST_TERMS)
        assert "e_bound" in data["values"]

    def test_bchi_principal_is_exact(self, capsys):
        """Test that the principal character prints a rational."""
        status, data = _records(capsys, ["bchi", "5"])

        assert status == EXIT_OK
        assert data["values"]["B"] == "19/20"
        assert data["radii"]["B"] == "0"

    def test_lvalue(self, capsys):
        """Test Catalan's constant as L(2, chi_4)."""
        status, data = _records(capsys, ["lvalue", "4", "2", "-c", "chi(3)=-1"])

        assert status == EXIT_OK
        assert abs(float(data["values"]["L"]) - CATALAN) < 1e-15

    def test_artin(self, capsys):
        """Test A_1 with a raw comparison."""
        status, data = _records(capsys, ["artin", "1", "--raw", "1000"])

        assert status == EXIT_OK
        assert abs(float(data["values"]["A"]) - ARTIN_A1) < 1e-15
        assert "A_raw[p<=1000]" in data["values"]

    def test_rho_exact_class(self, capsys):
        """Test rho(0, 6) = 1/12."""
        status, data = _records(capsys, ["rho", "0", "6"])

        assert status == EXIT_OK
        assert data["values"]["rho"] == "0.08333333333333333333"

    def test_density(self, capsys):
        """Test dens(1, 5) for the golden-ratio model with its breakdown."""
        status, data = _records(capsys, ["--model", "q-sqrt5-golden", "density", "1", "5"])
        value = float(data["values"]["density"])

        assert status == EXIT_OK
        assert abs(value - GOLDEN_THEORY[1]) <= significant_tolerance(GOLDEN_THEORY[1])
        assert data["model"] == "q-sqrt5-golden"
        assert "d[chi_5[1]]" in data["values"]
        assert "B[chi_5[1]]" in data["values"]

    def test_density_exact_class(self, capsys):
        """Test the rational density of the zero class."""
        status, data = _records(capsys, ["--model", "q-sqrt5-golden", "density", "0", "5"])

        assert status == EXIT_OK
        assert data["values"]["density_exact"] == "1/10"

    def test_density_from_model_file(self, capsys, model_file):
        """Test --model with a JSON file and --describe."""
        status = main(FAST + ["--model", str(model_file), "density", "0", "5", "--describe"])
        out = capsys.readouterr().out

        assert status == EXIT_OK
        assert "model: q-sqrt5-golden" in out
        assert "note: K = Q(sqrt5)" in out

    def test_coeffs(self, capsys):
        """Test the coefficients of the generic model."""
        status, data = _records(capsys, ["coeffs", "2", "5"])

        assert status == EXIT_OK
        assert len(data["values"]) == 4
        assert data["values"]["d[chi_5[0]]"].startswith("0.25")

    def test_coeffs_zero_class(self, capsys):
        """Test that the zero class has no expansion."""
        status, data = _records(capsys, ["coeffs", "0", "5"])

        assert status == EXIT_OK
        assert data["values"] == {}
        assert data["notes"]

    def test_count(self, capsys):
        """Test counts over Q(sqrt5) with the histogram."""
        status, data = _records(
            capsys, ["count", "5", "(1+sqrt5)/2", "--x", "2000", "-d", "5", "--histogram"]
        )
        values = data["values"]
        counts = [int(values[f"count[{a}]"]) for a in range(5)]

        assert status == EXIT_OK
        assert sum(counts) == int(values["pi_K"])
        assert values["skipped"] == "1"
        assert "index[1]" in values

    def test_count_csv(self, capsys):
        """Test CSV output of a count."""
        status = main(["--format", "csv", "count", "Q", "2", "--x", "100", "-d", "2"])
        lines = capsys.readouterr().out.splitlines()

        assert status == EXIT_OK
        assert lines[0] == "name,value,radius"
        assert lines[1] == "pi_K,24,0"

    def test_count_in_total_convention(self, capsys):
        """Test that the prime above 2 enters pi_K under count-in-total."""
        status, data = _records(
            capsys,
            ["count", "Q", "2", "--x", "100", "-d", "2", "--convention", "count-in-total"],
        )

        assert status == EXIT_OK
        assert data["values"]["pi_K"] == "25"
        assert data["values"]["skipped"] == "1"

    def test_count_threads_forwarded(self, capsys, mocker):
        """Test that --threads reaches the counting workers."""
        cli_main = sys.modules["indexdens.cli.main"]
        spy = mocker.patch.object(cli_main, "count", wraps=count)

        status = main(["--threads", "3", "count", "Q", "2", "--x", "100", "-d", "2"])

        assert status == EXIT_OK
        assert spy.call_args.kwargs["workers"] == 3
        assert spy.call_args.kwargs["convention"] == ExclusionConvention.EXCLUDE


class TestVerify:
    """Tests for the acceptance suites."""

    def test_table2(self, capsys):
        """Test the B_chi(1) suite with 10^4 primes."""
        status = main(FAST + ["verify", "table2"])
        out = capsys.readouterr().out

        assert status == EXIT_OK
        assert out.startswith("Validation passed")

    def test_table1_theory_rows(self, capsys):
        """Test the density suite without the empirical counts."""
        status = main(FAST + ["--format", "records", "verify", "table1", "--skip-empirical"])
        data = json.loads(capsys.readouterr().out)

        assert status == EXIT_OK
        assert data["is_valid"]

    def test_table2_library_call(self):
        """Test the suite directly."""
        report = verify_table2(ComputeSettings.default().with_overrides(n_terms=TEST_TERMS))

        assert report.is_valid
        assert len(report.infos) == 4

    @pytest.mark.slow
    def test_table2_at_default_terms(self):
        """Test the B_chi(1) suite with the default 10^6 primes."""
        settings = ComputeSettings.default()
        report = verify_table2(settings)

        assert settings.n_terms == DEFAULT_TERMS
        assert report.is_valid
        assert len(report.infos) == 4

    @pytest.mark.slow
    def test_table1_with_counts(self, capsys):
        """Test the full density suite at x = 10^6."""
        assert main(FAST + ["verify", "table1"]) == EXIT_OK


class TestErrors:
    """Tests for exit codes."""

    def test_selector_error(self, capsys):
        """Test that library errors exit with status 2 and a message."""
        status = main(FAST + ["bchi", "5", "-c", "chi(2)=e(1/3)"])
        err = capsys.readouterr().err

        assert status == EXIT_ERROR
        assert err.startswith("indexdens bchi:")

    def test_validity_error(self, capsys):
        """Test an invalid (r, n) pair."""
        assert main(["--terms", "1", "bchi", "5", "-c", "chi(2)=i"]) == EXIT_ERROR

    def test_unknown_model(self, capsys):
        """Test an unknown --model."""
        assert main(["--model", "nope", "density", "1", "5"]) == EXIT_ERROR

    def test_bad_generator(self, capsys):
        """Test an unreadable generator."""
        assert main(["count", "5", "sqrt3", "--x", "100", "-d", "2"]) == EXIT_ERROR

    def test_bad_settings(self):
        """Test that invalid global flags are usage errors."""
        with pytest.raises(SystemExit) as excinfo:
            main(["--threads", "0", "rho", "1", "5"])

        assert excinfo.value.code == 2

    def test_missing_command(self):
        """Test that a command is required."""
        with pytest.raises(SystemExit):
            build_parser().parse_args([])
