from typing import Any, Dict, Iterable, List, Mapping, Optional

import pandas as pd


def _cell(value: Any) -> str:
    # Missing cells in ragged rows arrive as NaN
    if value is None or (isinstance(value, float) and pd.isna(value)):
        return ""
    if pd.api.types.is_bool(value):
        return str(bool(value)).lower()
    if isinstance(value, float):
        return format(value, "g")
    return str(value)


def format_key_values(items: Mapping[str, Any], indent: int = 0) -> str:
    """Aligned 'key: value' lines; nested mappings are indented beneath their key."""
    if not items:
        return ""
    width = max(len(str(key)) for key in items)
    pad = " " * indent
    lines = []
    for key, value in items.items():
        if isinstance(value, Mapping):
            lines.append(f"{pad}{key}:")
            nested = format_key_values(value, indent + 2)
            if nested:
                lines.append(nested)
        else:
            lines.append(f"{pad}{str(key).ljust(width)}  {_cell(value)}")
    return "\n".join(lines)


def _frame(rows: Iterable[Dict[str, Any]], columns: Optional[List[str]]) -> pd.DataFrame:
    rows = list(rows)
    frame = pd.DataFrame(rows, columns=columns)
    return frame.map(_cell) if not frame.empty else frame


def format_rows_csv(rows: Iterable[Dict[str, Any]], columns: Optional[List[str]] = None) -> str:
    return _frame(rows, columns).to_csv(index=False, lineterminator="\n")


def format_table(rows: Iterable[Dict[str, Any]], columns: Optional[List[str]] = None) -> str:
    frame = _frame(rows, columns)
    if frame.empty:
        return "No rows."
    return frame.to_string(index=False)
