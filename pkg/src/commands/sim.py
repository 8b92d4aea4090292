import argparse
import json
import logging
from dataclasses import replace
from typing import List, Optional

from ..costmodel import load_catalog
from ..costmodel.catalog import DEFAULT_ENVELOPE_BYTES, ECDSA_AUTH_BYTES
from ..crypto import CommitMode
from ..errors import UsageError
from ..netsim import (
    SchemeKind,
    SchemeUnderTest,
    SimConfig,
    footprint_per_auth,
    footprint_ratio,
    footprint_sensitivity,
    load_scenario,
    run_attack_suite,
    run_simulation,
    run_sweep,
)
from ..services import CommandResult, ExitCode, arg, command_registry
from ..utils.contract_utils import dump_yaml
from ..utils.io_utils import atomic_write
from ..utils.result_utils import format_key_values, format_rows_csv, format_table

logger = logging.getLogger(__name__)


def _emit(text: str, out: Optional[str]) -> CommandResult:
    if out:
        atomic_write(out, text)
        return CommandResult.success_result(message=f"Wrote {out}")
    return CommandResult.success_result(output=text)


def _int_list(text: str, flag: str) -> List[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated integers, got '{text}'") from None
    if not values or any(v < 0 for v in values):
        raise UsageError(f"{flag} expects non-negative integers")
    return values


def _render(data: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(data, indent=2, sort_keys=True) + "\n"
    return dump_yaml(data)


def cmd_sim_run(args: argparse.Namespace) -> CommandResult:
    """Run a scenario and print its storage and transmission metrics."""
    metrics = run_simulation(load_scenario(args.config))
    if args.format == "csv":
        return _emit(format_rows_csv([metrics.summary_row()]), args.out)
    return _emit(_render(metrics.to_dict(), args.format), args.out)


def cmd_sim_attacks(args: argparse.Namespace) -> CommandResult:
    """Enumerate adversarial interleavings against one honest transfer."""
    config = load_scenario(args.config) if args.config else SimConfig()
    if args.mode:
        config = config.with_scheme(
            SchemeUnderTest(kind=SchemeKind.CR, mode=CommitMode.parse(args.mode))
        )
    report = run_attack_suite(config, strict=args.strict)
    rows = [
        {
            "kind": v.kind.value,
            "ordering": v.ordering,
            "outcomes": "; ".join(v.moves),
            "rejected": v.rejected,
            "expected": v.expected,
            "victim_completed": v.victim_completed,
            "griefing": v.griefing,
        }
        for v in report.verdicts
    ]
    text = format_table(rows) + "\n\n" + format_key_values(report.counts()) + "\n"
    if report.regressions:
        return CommandResult.error_result(
            f"{len(report.regressions)} interleavings ended in an unexpected outcome",
            exit_code=ExitCode.VALIDATION,
            output=text,
        )
    return CommandResult.success_result(output=text)


def cmd_sim_footprint(args: argparse.Namespace) -> CommandResult:
    """Bytes per authorization: commit-reveal against a signed baseline."""
    if args.sweep:
        rows = [
            {
                "envelope_bytes": row.envelope_bytes,
                "baseline_bytes": row.baseline_bytes,
                "full_ratio": round(row.full_ratio, 6),
                "compact_ratio": round(row.compact_ratio, 6),
            }
            for row in footprint_sensitivity(auth_bytes=args.auth_bytes)
        ]
        return _emit(format_rows_csv(rows), args.out)

    if args.config:
        config = load_scenario(args.config)
        if args.envelope is not None:
            config = replace(
                config, envelope=replace(config.envelope, envelope_bytes=args.envelope)
            )
        comparison = footprint_per_auth(config, load_catalog(args.catalog))
        summary = {
            "scenario": config.name,
            "envelope_bytes": comparison.envelope_bytes,
            "baseline_auth_bytes": comparison.baseline_auth_bytes,
            "cr_bytes_per_auth": comparison.cr_bytes_per_auth,
            "baseline_bytes_per_auth": comparison.baseline_bytes_per_auth,
            "ratio": round(comparison.ratio, 6),
        }
    else:
        envelope = DEFAULT_ENVELOPE_BYTES if args.envelope is None else args.envelope
        result = footprint_ratio(envelope, args.auth_bytes, CommitMode.parse(args.mode))
        summary = {
            "envelope_bytes": result.envelope_bytes,
            "mode": result.mode.name.lower(),
            "commit_bytes": result.commit_bytes,
            "reveal_bytes": result.reveal_bytes,
            "cr_bytes": result.cr_bytes,
            "baseline_bytes": result.baseline_bytes,
            "ratio": round(result.ratio, 6),
        }
    return _emit(format_key_values(summary) + "\n", args.out)


def cmd_sim_sweep(args: argparse.Namespace) -> CommandResult:
    """Re-run a scenario across node populations, optionally against the signed baseline."""
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    base = load_scenario(args.config)
    baseline = load_catalog(args.catalog).scheme(args.baseline) if args.baseline else None
    configs = []
    for full in _int_list(args.full_nodes, "--full-nodes"):
        config = base.with_nodes(full=full)
        configs.append(config)
        if baseline is not None:
            configs.append(
                config.with_scheme(
                    SchemeUnderTest(
                        kind=SchemeKind.SIGNATURE,
                        name=baseline.name,
                        auth_bytes=baseline.modeled_auth_bytes,
                    )
                )
            )
    outcomes = run_sweep(configs, workers=args.workers)
    text = format_rows_csv([o.summary_row() for o in outcomes])
    failed = [o for o in outcomes if not o.ok]
    if failed:
        return CommandResult.error_result(
            f"{len(failed)} of {len(outcomes)} runs failed", output=text
        )
    return _emit(text, args.out)


def register_sim_commands() -> None:
    out = arg("--out", help="write output here instead of stdout")
    catalog = arg("--catalog", help="catalog override file")
    command_registry.register_command(
        cmd_sim_run,
        name="sim run",
        arguments=[
            arg("config"),
            arg("--format", default="yaml", choices=["yaml", "json", "csv"]),
            out,
        ],
    )
    command_registry.register_command(
        cmd_sim_attacks,
        name="sim attacks",
        arguments=[
            arg("config", nargs="?"),
            arg("--mode", choices=["full", "compact"]),
            arg("--strict", action="store_true", help="fail on the first unexpected outcome"),
        ],
    )
    command_registry.register_command(
        cmd_sim_footprint,
        name="sim footprint",
        arguments=[
            arg("config", nargs="?"),
            arg("--envelope", type=int),
            arg("--auth-bytes", type=int, default=ECDSA_AUTH_BYTES),
            arg("--mode", default="full", choices=["full", "compact"]),
            arg("--sweep", action="store_true", help="ratio table over envelope sizes"),
            catalog,
            out,
        ],
    )
    command_registry.register_command(
        cmd_sim_sweep,
        name="sim sweep",
        arguments=[
            arg("config"),
            arg("--full-nodes", required=True, help="comma-separated full node counts"),
            arg("--baseline", help="also run each point under this catalog signature scheme"),
            arg("--workers", type=int, default=4),
            catalog,
            out,
        ],
    )
