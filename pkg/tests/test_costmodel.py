"""Tests for transaction sizes, storage aggregation and infrastructure cost."""

import math

import pytest
import yaml

from src.costmodel import (
    CostAssumptions,
    Interval,
    aggregate_storage,
    bitcoin_tx_size,
    block_capacity,
    component_multiplier_product,
    default_catalog,
    ethereum_tx_size,
    hardware_catchup_years,
    infrastructure_cost,
    load_catalog,
    node_storage_projection,
    operator_media_cost,
    segwit_profile,
    segwit_weight,
    signature_fraction,
)
from src.costmodel.storage import figure2_series
from src.errors import ConfigurationError, ValidationError


class TestInterval:
    """Range arithmetic."""

    def test_point_and_range(self):
        """Intervals parse from scalars and [low, high] lists."""
        assert Interval.of(5) == Interval(5, 5)
        assert Interval.of([1, 3]).midpoint == 2
        with pytest.raises(ValidationError):
            Interval(3, 1)

    def test_arithmetic(self):
        """Products and sums act on bounds."""
        assert Interval(1, 2) * Interval(3, 4) == Interval(3, 8)
        assert Interval(1, 2) + 1 == Interval(2, 3)
        assert str(Interval(0.5, 0.7)) == "0.5-0.7"


class TestSizes:
    """Bitcoin, SegWit and signed-envelope sizes."""

    @pytest.mark.parametrize(
        "inputs,outputs,size", [(1, 2, 226), (2, 2, 374), (1, 1, 192)]
    )
    def test_bitcoin_tx_size(self, inputs, outputs, size):
        """Legacy size = 10 + 148 per input + 34 per output."""
        assert bitcoin_tx_size(inputs, outputs) == size

    def test_bitcoin_tx_size_rejects_zero(self):
        """Transactions need at least one input and output."""
        with pytest.raises(ValidationError):
            bitcoin_tx_size(0, 1)

    def test_segwit_weight(self):
        """Witness bytes count a quarter; vbytes round up."""
        assert segwit_weight(100, 100) == (400, 100)
        assert segwit_weight(100, 200) == (500, 125)
        assert segwit_weight(100, 201) == (501, 126)

    def test_segwit_weight_domain(self):
        """total_size below base_size is rejected."""
        with pytest.raises(ValidationError):
            segwit_weight(200, 100)

    def test_block_capacity(self):
        """Four million weight units per block."""
        assert block_capacity(400) == 10_000
        with pytest.raises(ValidationError):
            block_capacity(0)

    def test_ethereum_band(self):
        """Representative Ethereum transfer inside its band."""
        size, band = ethereum_tx_size()
        assert band.contains(size)

    def test_signature_fraction(self, catalog):
        """ECDSA authorization is 98 of 226 bytes."""
        assert signature_fraction(catalog.scheme("ECDSA")) == pytest.approx(98 / 226)
        assert signature_fraction(catalog.scheme("SPHINCS+")) > 0.99

    def test_segwit_hides_physical_bytes(self, catalog):
        """Larger signatures get a bigger vbyte discount while physical bytes grow."""
        ecdsa = segwit_profile(catalog.scheme("ECDSA"))
        sphincs = segwit_profile(catalog.scheme("SPHINCS+"))
        assert ecdsa.physical_bytes == 226
        assert ecdsa.weight == 3 * 128 + 226
        assert ecdsa.vbytes == 153
        assert sphincs.discount > ecdsa.discount
        assert sphincs.physical_bytes > 50 * ecdsa.physical_bytes


class TestStorage:
    """Per-node projections and the aggregate table."""

    def test_node_storage_projection(self):
        """Projected storage scales current storage."""
        assert node_storage_projection(1.2, 50) == pytest.approx(60)
        with pytest.raises(ValidationError):
            node_storage_projection(0, 50)
        with pytest.raises(ValidationError):
            node_storage_projection(1, 0.5)

    def test_figure2_bars(self, catalog):
        """Current and projected bars alternate per node type."""
        assert figure2_series(catalog.figure2) == [
            ("Full (Current)", 1.2),
            ("Full (PQ)", 60),
            ("Archive (Current)", 15),
            ("Archive (PQ)", 800),
        ]

    def test_table_rows(self, catalog):
        """Rows multiply growth by the signature multiplier and the node count."""
        table = aggregate_storage(catalog.profiles, catalog.assumptions)
        bitcoin = table.row("bitcoin")
        assert bitcoin.growth_tb.midpoint == pytest.approx(0.6)
        assert bitcoin.per_node_headline_tb == pytest.approx(30)
        assert bitcoin.headline_total_eb.midpoint == pytest.approx(2.16)
        assert table.row("ethereum-full").headline_total_eb.midpoint == pytest.approx(1.2)
        assert table.row("ethereum-archive").headline_total_eb.midpoint == pytest.approx(1.0)
        other = table.row("other-utxo").headline_total_eb
        assert (other.low, other.high) == (pytest.approx(0.063), pytest.approx(0.09))

    def test_subtotal(self, catalog):
        """Only quantified rows marked for the subtotal contribute."""
        table = aggregate_storage(catalog.profiles, catalog.assumptions)
        assert [row.name for row in table.subtotal_rows] == [
            "bitcoin",
            "ethereum-full",
            "ethereum-archive",
            "other-utxo",
        ]
        assert table.subtotal_eb == pytest.approx(4.4365)
        assert table.subtotal_interval_eb.low == pytest.approx(4.423)
        assert table.subtotal_interval_eb.high == pytest.approx(4.45)
        assert not table.row("layer-2").quantified
        assert table.row("layer-2").headline_total_eb is None

    def test_multiplier_scales_linearly(self, catalog):
        """Doubling the multiplier doubles the subtotal."""
        base = aggregate_storage(catalog.profiles, catalog.assumptions)
        doubled = aggregate_storage(catalog.profiles, CostAssumptions(signature_multiplier=100))
        assert doubled.subtotal_eb == pytest.approx(2 * base.subtotal_eb)

    @pytest.mark.parametrize("multiplier,years", [(50, 11.29), (100, 13.29), (1, 0.0)])
    def test_hardware_catchup(self, multiplier, years):
        """Years = doubling period x log2(multiplier)."""
        assert hardware_catchup_years(multiplier) == pytest.approx(years, abs=0.01)

    def test_hardware_catchup_domain(self):
        """Multipliers below one are outside the model."""
        with pytest.raises(ValidationError):
            hardware_catchup_years(0.5)
        assert hardware_catchup_years(8, doubling_period_years=1.5) == pytest.approx(
            1.5 * math.log2(8)
        )


class TestInfrastructure:
    """Media cost and provisioning multipliers."""

    def test_rounded_subtotal_cost(self):
        """4.5 EB at $300/TB is $1.35B raw and $13.5B-$27B provisioned."""
        cost = infrastructure_cost(4.5, CostAssumptions())
        assert cost.raw_usd == pytest.approx(1.35e9)
        assert cost.band_usd.low == pytest.approx(13.5e9)
        assert cost.band_usd.high == pytest.approx(27e9)

    def test_rejects_empty_storage(self):
        """Storage must be positive."""
        with pytest.raises(ValidationError):
            infrastructure_cost(0, CostAssumptions())

    def test_component_product(self):
        """1.3 x 2 x [2, 2.5] x 1.5 x 1.5."""
        product = component_multiplier_product(CostAssumptions())
        assert product.low == pytest.approx(11.7)
        assert product.high == pytest.approx(14.625)

    def test_operator_media_cost(self, catalog):
        """Per-node growth priced at media cost."""
        table = aggregate_storage(catalog.profiles, catalog.assumptions)
        assert operator_media_cost(table.row("bitcoin"), catalog.assumptions).midpoint == (
            pytest.approx(9_000)
        )
        assert operator_media_cost(
            table.row("ethereum-full"), catalog.assumptions
        ).midpoint == pytest.approx(30_000)
        assert operator_media_cost(
            table.row("ethereum-archive"), catalog.assumptions
        ).midpoint == pytest.approx(300_000)

    def test_assumptions_validation(self):
        """Multipliers below one are configuration errors."""
        with pytest.raises(ConfigurationError):
            CostAssumptions(redundancy=0.5)


class TestCatalog:
    """Defaults and catalog.yaml overrides."""

    def test_defaults(self, catalog):
        """Charted schemes and their modeled authorization bytes."""
        assert [s.name for s in catalog.figure_schemes] == ["ECDSA", "Dilithium", "SPHINCS+"]
        assert catalog.scheme("ecdsa").modeled_auth_bytes == 98
        assert catalog.scheme("Dilithium").modeled_auth_bytes == 5000

    def test_unknown_scheme(self, catalog):
        """Lookups by unknown name raise ConfigurationError."""
        with pytest.raises(ConfigurationError, match="known"):
            catalog.scheme("RSA")

    def test_missing_config_file_uses_defaults(self):
        """Without catalog.yaml in the config dir the defaults apply."""
        assert load_catalog() == default_catalog()

    def test_config_dir_override(self, tmp_path, monkeypatch):
        """catalog.yaml in the config dir adds schemes and changes assumptions."""
        (tmp_path / "catalog.yaml").write_text(
            yaml.safe_dump(
                {
                    "schemes": [
                        {
                            "name": "Falcon-512",
                            "public_key_bytes": [897, 897],
                            "signature_bytes": [666, 666],
                            "representative_tx_bytes": 1700,
                        }
                    ],
                    "profiles": [{"name": "bitcoin", "node_count": [13000, 20000]}],
                    "assumptions": {"signature_multiplier": 100},
                }
            )
        )
        monkeypatch.setenv("CRLEDGER_CONFIG_DIR", str(tmp_path))
        catalog = load_catalog()
        assert catalog.scheme("falcon-512").modeled_auth_bytes == 1563
        assert catalog.profile("bitcoin").node_count == Interval(13000, 20000)
        assert catalog.profile("bitcoin").growth_gb_per_year == Interval(50, 70)
        assert catalog.assumptions.signature_multiplier == 100

    def test_explicit_path_must_exist(self, tmp_path):
        """An explicit catalog path that does not exist is an error."""
        with pytest.raises(ConfigurationError):
            load_catalog(tmp_path / "missing.yaml")

    def test_invalid_override(self, tmp_path):
        """Out-of-domain overrides are configuration errors."""
        path = tmp_path / "catalog.yaml"
        path.write_text(yaml.safe_dump({"assumptions": {"signature_multiplier": 0.5}}))
        with pytest.raises(ConfigurationError):
            load_catalog(path)
