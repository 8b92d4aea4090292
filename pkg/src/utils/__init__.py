"""
Utilities package for the commit-reveal ledger toolkit.

- env: environment-driven configuration
- contract_utils: YAML loading and dict -> dataclass conversion
- io_utils: atomic file output
- result_utils: command output formatting
- session_context: per-run logging context
"""

from .result_utils import (
    format_key_values,
    format_rows_csv,
    format_table,
)

__all__ = [
    "format_key_values",
    "format_rows_csv",
    "format_table",
]
