"""
Tests for the heightforge command line.
"""

import json

import pytest
from click.testing import CliRunner

from src import __version__
from src.cli import cli, run_command

LEHMER = "x^10 + x^9 - x^7 - x^6 - x^5 - x^4 - x^3 + x + 1"


@pytest.fixture
def runner():
    return CliRunner()


def invoke_json(runner, args):
    result = runner.invoke(cli, args + ["--json"])
    return result, json.loads(result.stdout)


class TestHeightCommands:
    """Tests for height, mahler and the projective height commands."""

    def test_mahler_lehmer(self, runner):
        """Test the Mahler measure of Lehmer's polynomial."""
        result = runner.invoke(cli, ["mahler", LEHMER])

        assert result.exit_code == 0
        assert "global: 1.17628081825991" in result.stdout

    def test_mahler_cross_check(self, runner):
        """Test that the two Mahler measure paths agree."""
        result, report = invoke_json(runner, ["mahler", "x^3 - x - 1", "--cross-check"])

        assert result.exit_code == 0
        assert report["verdict"] == "pass"
        assert report["global"]["midpoint"].startswith("1.32471795724474")

    def test_height_by_field_and_by_polynomial(self, runner):
        """Test h(golden ratio) from a corpus field and from its minimal polynomial."""
        _, by_field = invoke_json(runner, ["height", "t", "--field", "golden"])
        _, by_poly = invoke_json(runner, ["height", "x^2 - x - 1"])

        assert by_field["global"]["midpoint"].startswith("1.27201964951406")
        assert by_poly["global"]["midpoint"].startswith("1.27201964951406")

    def test_proj_height(self, runner):
        """Test H(1, 2, 4, 8) = 8."""
        result, report = invoke_json(runner, ["proj-height", "--point", "[1, 2, 4, 8]"])

        assert result.exit_code == 0
        assert float(report["global"]["midpoint"]) == pytest.approx(8)
        assert "inf0" in {row["place"] for row in report["places"]}

    def test_subspace_height(self, runner):
        """Test the height of the plane spanned by (1,2,3) and (0,1,1)."""
        result, report = invoke_json(
            runner, ["subspace-height", "--basis", "[1, 2, 3]; [0, 1, 1]"]
        )

        assert result.exit_code == 0
        assert float(report["global"]["midpoint"]) == pytest.approx(1)

    def test_places(self, runner):
        """Test the places of Q(i) above 2 and 5."""
        _, report = invoke_json(runner, ["places", "--field", "Qi", "--prime", "2", "--prime", "5"])

        assert [row["place"] for row in report["places"]] == ["inf0", "p2.0", "p5.0", "p5.1"]

    def test_fields(self, runner):
        """Test listing the corpus."""
        result = runner.invoke(cli, ["fields"])

        assert result.exit_code == 0
        assert "lehmer" in result.stdout
        assert "golden" in result.stdout


class TestVerifyCommands:
    """Tests for the identity and product formula checks."""

    def test_verify_projective(self, runner):
        """Test H(a)^2 * U(a, x1*x2) = 1 at (1, sqrt 2)."""
        args = ["verify-projective", "--field", "t^2-2", "--point", "[1, t]"]
        result = runner.invoke(cli, args + ["--poly", "x1*x2", "--deg", "2"])

        assert result.exit_code == 0
        assert "verdict: pass" in result.stdout

    def test_verify_subspace(self, runner):
        """Test the subspace identity for span{(3,4)} and Psi = (1, 0)."""
        result, report = invoke_json(
            runner, ["verify-subspace", "--basis", "[3, 4]", "--map", "[1, 0]"]
        )

        assert result.exit_code == 0
        assert report["verdict"] == "pass"

    def test_verify_univariate(self, runner):
        """Test alpha = 2, T = x, N = 1."""
        result, report = invoke_json(
            runner, ["verify-univariate", "--alpha", "2", "--poly", "x", "--n", "1"]
        )

        assert result.exit_code == 0
        assert report["verdict"] == "pass"
        assert report["details"]["observed_exponent"] is not None

    def test_product_formula(self, runner):
        """Test the product formula for t + 2 in the golden field."""
        result, report = invoke_json(
            runner, ["product-formula", "--field", "golden", "--element", "t + 2"]
        )

        assert result.exit_code == 0
        assert report["details"]["norm"] == "5"
        assert report["details"]["finite_product"] == "1/5"

    def test_product_formula_large_norm(self, runner):
        """Test an element of norm 7000000 in Q(sqrt 2) passes with exit code 0."""
        result, report = invoke_json(
            runner, ["product-formula", "--field", "Qsqrt2", "--element", "3000 + 1000*t"]
        )

        assert result.exit_code == 0
        assert report["verdict"] == "pass"
        assert report["details"]["norm"] == "7000000"


class TestBoundCommands:
    """Tests for the congruence bound commands."""

    def test_bound(self, runner):
        """Test m / L1(T) = 3 for x^2 + 3xy + 3y^2 and x^2 mod 3."""
        args = ["bound", "--F", "x^2+3*x*y+3*y^2", "--T", "x^2", "--m", "3"]
        result, report = invoke_json(runner, args)

        assert result.exit_code == 0
        assert report["details"]["bound"] == "3"
        assert report["details"]["congruent"] is True

    def test_bound_not_congruent(self, runner):
        """Test that a failed congruence is a usage error."""
        args = ["bound", "--F", "x^2+3*x*y+3*y^2", "--T", "x^2", "--m", "2"]
        result, report = invoke_json(runner, args)

        assert result.exit_code == 2
        assert report["error"]["code"] == "CONGRUENCE_FAILED"

    def test_check_point(self, runner):
        """Test the tight point of t^2 + 3t + 3."""
        args = ["check-point", "--field", "eisenstein3", "--point", "[t, 1]"]
        args += ["--F", "x^2+3*x*y+3*y^2", "--T", "x^2", "--m", "3"]
        result, report = invoke_json(runner, args)

        assert result.exit_code == 0
        assert report["verdict"] == "pass"
        assert report["details"]["tight"] is True


class TestErrorsAndOutput:
    """Tests for error reports, exit codes and output stability."""

    def test_syntax_error(self, runner):
        """Test a malformed polynomial exits 2 with a JSON error."""
        result, report = invoke_json(runner, ["mahler", "x^2 + $"])

        assert result.exit_code == 2
        assert report["error"]["code"] == "SYNTAX_ERROR"
        assert "position 6" in report["error"]["message"]

    def test_error_without_json(self, runner):
        """Test errors go to stderr in table mode."""
        result = runner.invoke(cli, ["mahler", "0"])

        assert result.exit_code == 2
        assert result.stdout == ""
        assert "error [ZERO_POLYNOMIAL]" in result.stderr

    def test_unknown_field(self, runner):
        """Test an unparseable field name is invalid input."""
        result, report = invoke_json(runner, ["places", "--field", "nosuchfield"])

        assert result.exit_code == 2
        assert report["error"]["code"] in {"SYNTAX_ERROR", "INVALID_INPUT"}

    def test_json_is_deterministic(self, runner):
        """Test two runs differ at most in timing."""
        args = ["verify-projective", "--point", "[1, 2]", "--poly", "x1*x2"]
        _, first = invoke_json(runner, args)
        _, second = invoke_json(runner, args)

        first.pop("timing_ms")
        second.pop("timing_ms")
        assert first == second
        assert first["version"] == __version__

    def test_version(self, runner):
        """Test --version."""
        result = runner.invoke(cli, ["--version"])

        assert __version__ in result.stdout


class TestRunCommand:
    """Tests for the programmatic entry point."""

    def test_exit_codes(self):
        """Test pass, usage error and unknown command."""
        assert run_command(["fields", "--json"]) == 0
        assert run_command(["mahler", "x +"]) == 2
        assert run_command(["no-such-command"]) == 2
