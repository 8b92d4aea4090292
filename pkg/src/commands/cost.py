import argparse
import logging

import pandas as pd

from ..costmodel import load_catalog
from ..costmodel.catalog import ECDSA_AUTH_BYTES
from ..costmodel.reports import (
    FIGURE_NAMES,
    build_cost_report,
    chart_for,
    figure_frame,
    fmt,
    frame_to_csv,
    render_text,
    report_to_json,
)
from ..errors import UsageError
from ..netsim import footprint_sensitivity
from ..services import CommandResult, arg, command_registry
from ..utils.io_utils import OutputFile, atomic_write, atomic_write_all

logger = logging.getLogger(__name__)

FOOTPRINT_FIGURE = "footprint"


def footprint_frame(auth_bytes: int = ECDSA_AUTH_BYTES) -> pd.DataFrame:
    rows = [
        {
            "envelope_bytes": str(row.envelope_bytes),
            "baseline_bytes": str(row.baseline_bytes),
            "full_ratio": fmt(row.full_ratio),
            "compact_ratio": fmt(row.compact_ratio),
        }
        for row in footprint_sensitivity(auth_bytes=auth_bytes)
    ]
    return pd.DataFrame(
        rows, columns=["envelope_bytes", "baseline_bytes", "full_ratio", "compact_ratio"]
    )


def cmd_cost_report(args: argparse.Namespace) -> CommandResult:
    """Full cost report: sizes, storage aggregate, infrastructure cost, catch-up horizon."""
    report = build_cost_report(load_catalog(args.catalog))
    text = report_to_json(report) if args.format == "json" else render_text(report)
    if args.out:
        atomic_write(args.out, text)
        return CommandResult.success_result(message=f"Wrote {args.out}")
    return CommandResult.success_result(output=text)


def cmd_cost_figure(args: argparse.Namespace) -> CommandResult:
    """CSV data behind one figure or table, optionally rendered as a bar chart."""
    if args.name == FOOTPRINT_FIGURE:
        frame = footprint_frame()
    elif args.name in FIGURE_NAMES:
        frame = figure_frame(args.name, load_catalog(args.catalog))
    else:
        raise UsageError(f"Unknown figure '{args.name}'")
    csv_text = frame_to_csv(frame)

    outputs = []
    if args.plot:
        outputs.append(OutputFile(args.plot, chart_for(args.name, frame)))
    if args.out:
        outputs.append(OutputFile(args.out, csv_text))
    atomic_write_all(outputs)
    if args.plot:
        logger.info(f"Wrote chart to {args.plot}")
    if args.out:
        return CommandResult.success_result(message=f"Wrote {args.out}")
    return CommandResult.success_result(output=csv_text)


def register_cost_commands() -> None:
    catalog = arg("--catalog", help="catalog override file (default: <config dir>/catalog.yaml)")
    out = arg("--out", help="write output here instead of stdout")
    command_registry.register_command(
        cmd_cost_report,
        name="cost report",
        arguments=[arg("--format", default="text", choices=["text", "json"]), catalog, out],
    )
    command_registry.register_command(
        cmd_cost_figure,
        name="cost figure",
        arguments=[
            arg("name", choices=list(FIGURE_NAMES) + [FOOTPRINT_FIGURE]),
            arg("--plot", help="also write a PNG bar chart here"),
            catalog,
            out,
        ],
    )
