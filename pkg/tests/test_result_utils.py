"""Tests for result utility functions."""

from src.services import CommandResult, ExitCode
from src.utils.result_utils import (
    format_key_values,
    format_rows_csv,
    format_table,
)


class TestResultUtils:
    """Test result formatting utility functions."""

    def test_format_key_values_aligned(self):
        """Keys are padded to a common width."""
        text = format_key_values({"ratio": 1.5, "cr_bytes": 384})
        assert text == "ratio     1.5\ncr_bytes  384"

    def test_format_key_values_nested(self):
        """Nested mappings are indented beneath their key."""
        text = format_key_values({"counts": {"rejected": 7}, "ok": True})
        assert text == "counts:\n  rejected  7\nok      true"

    def test_format_key_values_empty(self):
        """Empty mappings render as an empty string."""
        assert format_key_values({}) == ""

    def test_format_rows_csv(self):
        """Floats use general format and booleans are lowercase."""
        rows = [
            {"envelope": 128, "ratio": 384 / 226, "ok": True},
            {"envelope": 64, "ratio": 1.5, "ok": False},
        ]
        assert format_rows_csv(rows) == (
            "envelope,ratio,ok\n128,1.69912,true\n64,1.5,false\n"
        )

    def test_format_rows_csv_ragged(self):
        """Missing cells are left empty."""
        rows = [{"scenario": "a", "bytes": 10}, {"scenario": "b", "error": "boom"}]
        assert format_rows_csv(rows) == "scenario,bytes,error\na,10,\nb,,boom\n"

    def test_format_rows_csv_columns(self):
        """An explicit column list fixes the header even with no rows."""
        assert format_rows_csv([], columns=["a", "b"]) == "a,b\n"

    def test_format_table_empty(self):
        """Empty tables say so."""
        assert format_table([]) == "No rows."

    def test_format_table(self):
        """Tables render without an index column."""
        text = format_table([{"kind": "forge", "rejected": True}])
        assert text.splitlines()[0].split() == ["kind", "rejected"]
        assert text.splitlines()[1].split() == ["forge", "true"]


class TestCommandResult:
    """Success and error results."""

    def test_success_result(self):
        """Success carries output and exit code zero."""
        result = CommandResult.success_result(output="ok\n")
        assert result.success
        assert result.exit_code == ExitCode.OK
        assert result.output == "ok\n"

    def test_error_result(self):
        """Errors default to the validation exit code."""
        result = CommandResult.error_result("bad input")
        assert not result.success
        assert result.exit_code == ExitCode.VALIDATION
        assert result.message == "bad input"
