"""CostReport assembly and its text, CSV, JSON and chart renderings.

CSV cells are preformatted with ``format(value, "g")`` so figure files
are byte-stable across runs and platforms.
"""

import io
import json
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from .catalog import CostAssumptions, CostCatalog, SignatureSchemeSpec
from .infrastructure import (
    InfrastructureCost,
    component_multiplier_product,
    infrastructure_cost,
    operator_media_cost,
)
from .sizes import (
    SegwitProfile,
    bitcoin_tx_size,
    ethereum_tx_size,
    segwit_profile,
    signature_fraction,
    tx_size_for_scheme,
)
from .storage import (
    StorageTable,
    aggregate_storage,
    current_storage_baselines,
    figure2_series,
    hardware_catchup_years,
)
from .units import Interval

logger = logging.getLogger(__name__)

CATCHUP_MULTIPLIERS = (50, 100)
FIGURE_NAMES = ("fig1", "fig2", "table2")


def fmt(value: Optional[float]) -> str:
    if value is None:
        return ""
    return format(value, "g")


def fmt_usd(value: float) -> str:
    if value >= 1e9:
        return f"${value / 1e9:,.2f}B"
    if value >= 1e6:
        return f"${value / 1e6:,.2f}M"
    return f"${value:,.0f}"


def fmt_interval(interval: Optional[Interval], formatter=fmt) -> str:
    if interval is None:
        return "-"
    if interval.is_point:
        return formatter(interval.low)
    return f"{formatter(interval.low)} - {formatter(interval.high)}"


@dataclass(frozen=True)
class CostReport:
    assumptions: CostAssumptions
    schemes: Tuple[SignatureSchemeSpec, ...]
    storage: StorageTable
    infrastructure: InfrastructureCost
    rounded_subtotal_eb: float
    rounded_infrastructure: InfrastructureCost
    component_product: Interval
    catchup_years: Tuple[Tuple[float, float], ...]
    reference_tx_bytes: int
    ethereum_tx: Tuple[int, Interval]
    segwit: Tuple[SegwitProfile, ...]
    signature_fractions: Tuple[Tuple[str, float], ...]
    operator_costs: Tuple[Tuple[str, Interval], ...]
    figure2: Tuple[Tuple[str, float], ...]
    current_storage_tb: Tuple[Tuple[str, Interval], ...]


def build_cost_report(catalog: CostCatalog) -> CostReport:
    assumptions = catalog.assumptions
    storage = aggregate_storage(catalog.profiles, assumptions)
    subtotal = storage.subtotal_eb
    # Sum of the per-row figures as a table would print them, one decimal each
    rounded_subtotal = round(
        sum(round(row.headline_total_eb.midpoint, 1) for row in storage.subtotal_rows), 1
    )
    multipliers = sorted({*CATCHUP_MULTIPLIERS, assumptions.signature_multiplier})

    report = CostReport(
        assumptions=assumptions,
        schemes=catalog.schemes,
        storage=storage,
        infrastructure=infrastructure_cost(subtotal, assumptions),
        rounded_subtotal_eb=rounded_subtotal,
        rounded_infrastructure=infrastructure_cost(rounded_subtotal, assumptions),
        component_product=component_multiplier_product(assumptions),
        catchup_years=tuple(
            (m, hardware_catchup_years(m, assumptions.doubling_period_years))
            for m in multipliers
        ),
        reference_tx_bytes=bitcoin_tx_size(1, 2),
        ethereum_tx=ethereum_tx_size(),
        segwit=tuple(segwit_profile(scheme) for scheme in catalog.schemes),
        signature_fractions=tuple(
            (scheme.name, signature_fraction(scheme)) for scheme in catalog.schemes
        ),
        operator_costs=tuple(
            (row.label, operator_media_cost(row, assumptions))
            for row in storage.rows
            if row.quantified
        ),
        figure2=tuple(figure2_series(catalog.figure2)),
        current_storage_tb=tuple(current_storage_baselines().items()),
    )
    logger.info(
        f"Cost report: subtotal {subtotal:.4f} EB, raw media {fmt_usd(report.infrastructure.raw_usd)}"
    )
    return report


# Figure data

def fig1_frame(catalog: CostCatalog) -> pd.DataFrame:
    rows = [
        {"scheme": scheme.name, "tx_bytes": fmt(tx_size_for_scheme(scheme))}
        for scheme in catalog.figure_schemes
    ]
    return pd.DataFrame(rows, columns=["scheme", "tx_bytes"])


def fig2_frame(catalog: CostCatalog) -> pd.DataFrame:
    rows = [{"bar": label, "storage_tb": fmt(value)} for label, value in figure2_series(catalog.figure2)]
    return pd.DataFrame(rows, columns=["bar", "storage_tb"])


TABLE2_COLUMNS = [
    "network",
    "ten_year_growth_tb",
    "per_node_tb",
    "total_eb",
    "total_eb_low",
    "total_eb_high",
]


def table2_frame(storage: StorageTable) -> pd.DataFrame:
    rows = []
    for row in storage.subtotal_rows:
        headline = row.headline_total_eb
        rows.append(
            {
                "network": row.label,
                "ten_year_growth_tb": fmt(row.growth_tb.midpoint),
                "per_node_tb": fmt(row.per_node_headline_tb),
                "total_eb": fmt(headline.midpoint),
                "total_eb_low": fmt(headline.low),
                "total_eb_high": fmt(headline.high),
            }
        )
    subtotal = storage.subtotal_interval_eb
    rows.append(
        {
            "network": "Subtotal",
            "ten_year_growth_tb": "",
            "per_node_tb": "",
            "total_eb": fmt(storage.subtotal_eb),
            "total_eb_low": fmt(subtotal.low),
            "total_eb_high": fmt(subtotal.high),
        }
    )
    return pd.DataFrame(rows, columns=TABLE2_COLUMNS)


def figure_frame(name: str, catalog: CostCatalog) -> pd.DataFrame:
    if name == "fig1":
        return fig1_frame(catalog)
    if name == "fig2":
        return fig2_frame(catalog)
    if name == "table2":
        return table2_frame(aggregate_storage(catalog.profiles, catalog.assumptions))
    raise KeyError(name)


def frame_to_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator="\n")


# Structured output

def _interval_dict(interval: Optional[Interval]) -> Optional[Dict[str, float]]:
    if interval is None:
        return None
    return {"low": interval.low, "high": interval.high, "midpoint": interval.midpoint}


def report_to_dict(report: CostReport) -> Dict[str, Any]:
    a = report.assumptions
    storage_rows = []
    for row in report.storage.rows:
        storage_rows.append(
            {
                "name": row.name,
                "label": row.label,
                "quantified": row.quantified,
                "in_subtotal": row.in_subtotal,
                "node_count": _interval_dict(row.node_count),
                "ten_year_growth_tb": _interval_dict(row.growth_tb),
                "per_node_tb": _interval_dict(row.per_node_tb),
                "total_eb": _interval_dict(row.headline_total_eb),
                "total_eb_propagated": _interval_dict(row.total_eb),
                "notes": row.notes,
            }
        )
    return {
        "assumptions": {
            "signature_multiplier": a.signature_multiplier,
            "media_price_per_tb": a.media_price_per_tb,
            "usable_capacity": a.usable_capacity,
            "redundancy": a.redundancy,
            "system_overhead": _interval_dict(a.system_overhead),
            "deployment": a.deployment,
            "lifecycle": a.lifecycle,
            "overall_multiplier_band": _interval_dict(a.overall_multiplier_band),
            "horizon_years": a.horizon_years,
            "doubling_period_years": a.doubling_period_years,
        },
        "schemes": [
            {
                "name": scheme.name,
                "family": scheme.family,
                "public_key_bytes": _interval_dict(scheme.public_key_bytes),
                "signature_bytes": _interval_dict(scheme.signature_bytes),
                "representative_tx_bytes": scheme.representative_tx_bytes,
                "in_figure": scheme.in_figure,
            }
            for scheme in report.schemes
        ],
        "reference_tx_bytes": report.reference_tx_bytes,
        "ethereum_tx_bytes": {
            "representative": report.ethereum_tx[0],
            "band": _interval_dict(report.ethereum_tx[1]),
        },
        "segwit": [
            {
                "scheme": p.scheme,
                "base_bytes": p.base_bytes,
                "witness_bytes": p.witness_bytes,
                "weight": p.weight,
                "vbytes": p.vbytes,
                "physical_bytes": p.physical_bytes,
                "txs_per_block": p.txs_per_block,
            }
            for p in report.segwit
        ],
        "signature_fractions": dict(report.signature_fractions),
        "storage": {
            "rows": storage_rows,
            "subtotal_eb": report.storage.subtotal_eb,
            "subtotal_interval_eb": _interval_dict(report.storage.subtotal_interval_eb),
            "rounded_subtotal_eb": report.rounded_subtotal_eb,
        },
        "infrastructure": {
            "raw_usd": report.infrastructure.raw_usd,
            "band_usd": _interval_dict(report.infrastructure.band_usd),
            "rounded_raw_usd": report.rounded_infrastructure.raw_usd,
            "rounded_band_usd": _interval_dict(report.rounded_infrastructure.band_usd),
            "component_product": _interval_dict(report.component_product),
        },
        "operator_media_cost_usd": {
            label: _interval_dict(cost) for label, cost in report.operator_costs
        },
        "hardware_catchup_years": {fmt(m): years for m, years in report.catchup_years},
        "figure2": [{"bar": label, "storage_tb": value} for label, value in report.figure2],
        "current_storage_tb": {
            name: _interval_dict(value) for name, value in report.current_storage_tb
        },
    }


def report_to_json(report: CostReport) -> str:
    return json.dumps(report_to_dict(report), indent=2) + "\n"


# Text rendering

def _section(title: str, frame: pd.DataFrame) -> List[str]:
    return [title, "-" * len(title), frame.to_string(index=False), ""]


def render_text(report: CostReport) -> str:
    lines: List[str] = []
    a = report.assumptions

    schemes = pd.DataFrame(
        [
            {
                "scheme": scheme.name,
                "public key (B)": fmt_interval(scheme.public_key_bytes),
                "signature (B)": fmt_interval(scheme.signature_bytes),
                "tx (B)": scheme.representative_tx_bytes,
                "auth share": f"{dict(report.signature_fractions)[scheme.name]:.1%}",
            }
            for scheme in report.schemes
        ]
    )
    lines += _section("Signature schemes", schemes)

    segwit = pd.DataFrame(
        [
            {
                "scheme": p.scheme,
                "weight (WU)": p.weight,
                "vbytes": p.vbytes,
                "physical (B)": p.physical_bytes,
                "txs/block": p.txs_per_block,
            }
            for p in report.segwit
        ]
    )
    lines += _section("SegWit pricing vs physical size", segwit)

    eth_bytes, eth_band = report.ethereum_tx
    lines += [
        f"Reference Bitcoin tx (1 in, 2 out): {report.reference_tx_bytes} bytes",
        f"Ethereum simple transfer: {eth_bytes} bytes (band {fmt_interval(eth_band)})",
        "",
    ]

    storage = pd.DataFrame(
        [
            {
                "network": row.label,
                "nodes": fmt_interval(row.node_count),
                "10y growth (TB)": fmt_interval(row.growth_tb),
                "per node (TB)": fmt(row.per_node_headline_tb) if row.quantified else "-",
                "total (EB)": fmt_interval(row.headline_total_eb),
                "subtotal": "yes" if row.in_subtotal else "no",
            }
            for row in report.storage.rows
        ]
    )
    lines += _section(
        f"Replicated storage over {fmt(a.horizon_years)} years at {fmt(a.signature_multiplier)}x",
        storage,
    )
    lines += [
        f"Subtotal: {report.storage.subtotal_eb:.4g} EB "
        f"(range {fmt_interval(report.storage.subtotal_interval_eb)}; "
        f"rounded-table sum {fmt(report.rounded_subtotal_eb)} EB)",
        "",
    ]

    infra = report.infrastructure
    rounded = report.rounded_infrastructure
    lines += [
        "Infrastructure cost",
        "-------------------",
        f"Raw media at ${fmt(a.media_price_per_tb)}/TB: {fmt_usd(infra.raw_usd)} "
        f"(rounded-table sum: {fmt_usd(rounded.raw_usd)})",
        f"Overall band {fmt_interval(infra.multiplier_band)}x: "
        f"{fmt_interval(infra.band_usd, fmt_usd)} "
        f"(rounded-table sum: {fmt_interval(rounded.band_usd, fmt_usd)})",
        f"Product of listed overheads: {fmt_interval(report.component_product)}x",
        "",
    ]

    operators = pd.DataFrame(
        [
            {"network": label, "media per operator": fmt_interval(cost, fmt_usd)}
            for label, cost in report.operator_costs
        ]
    )
    lines += _section("Per-operator media cost", operators)

    lines += ["Hardware catch-up (capacity doubling every "
              f"{fmt(a.doubling_period_years)} years)"]
    for multiplier, years in report.catchup_years:
        lines.append(f"  {fmt(multiplier)}x: {years:.2f} years")
    lines.append("")

    lines += ["Storage per node (TB)"]
    for label, value in report.figure2:
        lines.append(f"  {label}: {fmt(value)}")
    return "\n".join(lines) + "\n"


# Charts

def render_bar_chart(
    frame: pd.DataFrame,
    x: str,
    y: str,
    title: str,
    ylabel: str,
    log_scale: bool = False,
) -> bytes:
    """PNG bytes of a bar chart over ``frame``; values are parsed from their CSV text."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import seaborn as sns

    data = frame.copy()
    data[y] = pd.to_numeric(data[y])
    sns.set_style("whitegrid")
    fig, ax = plt.subplots(figsize=(8, 5))
    try:
        sns.barplot(data=data, x=x, y=y, ax=ax, color="#3498DB")
        if log_scale:
            ax.set_yscale("log")
        ax.set_title(title)
        ax.set_xlabel("")
        ax.set_ylabel(ylabel)
        for container in ax.containers:
            ax.bar_label(container, fmt="%g")
        fig.tight_layout()
        buffer = io.BytesIO()
        fig.savefig(buffer, format="png", dpi=150)
    finally:
        plt.close(fig)
    return buffer.getvalue()


CHARTS: Dict[str, Tuple[str, str, str, str, bool]] = {
    "fig1": ("scheme", "tx_bytes", "Transaction size by signature scheme", "Bytes", True),
    "fig2": ("bar", "storage_tb", "Ethereum node storage", "Storage (TB)", False),
    "table2": ("network", "total_eb", "Additional replicated storage", "EB", False),
    "footprint": ("envelope_bytes", "full_ratio", "Commit-reveal footprint ratio", "Ratio", False),
}


def chart_for(name: str, frame: pd.DataFrame) -> bytes:
    x, y, title, ylabel, log_scale = CHARTS[name]
    if name == "table2":
        frame = frame[frame["network"] != "Subtotal"]
    return render_bar_chart(frame, x, y, title, ylabel, log_scale)
