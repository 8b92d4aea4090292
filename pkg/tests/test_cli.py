"""End-to-end tests for the crledger command line."""

import json
import stat
from pathlib import Path

import pytest
import yaml

from src.main import main

GOLDEN = Path(__file__).resolve().parent / "golden"
SCENARIOS = Path(__file__).resolve().parent.parent / "config" / "scenarios"

ZERO_SEED = "00" * 32
ZERO_AUTH = "a43b6ed31d94e5b4c4f366efad640e888a9511d3980723bcbef9a5695e6a32f9"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def key_values(text):
    return dict(line.split(None, 1) for line in text.splitlines() if line.strip())


@pytest.fixture
def bob_auth(tmp_path, capsys):
    code, out, _ = run(capsys, "keygen", "--seed", "02" * 32, "--out", tmp_path / "bob.key")
    assert code == 0
    return out.strip()


class TestKeyCommands:
    """keygen, commit, reveal and verify over files."""

    def test_keygen_golden(self, tmp_path, capsys):
        """The zero seed yields the known identifier; only the identifier is printed."""
        key = tmp_path / "alice.key"
        code, out, _ = run(capsys, "keygen", "--seed", ZERO_SEED, "--out", key)
        assert code == 0
        assert out == ZERO_AUTH + "\n"
        data = yaml.safe_load(key.read_text())
        assert data["auth"] == ZERO_AUTH
        assert data["preimage"].startswith("0dc094ce")
        assert data["preimage"] not in out
        assert stat.S_IMODE(key.stat().st_mode) == 0o600

    def test_keygen_deterministic(self, tmp_path, capsys):
        """The same seed twice produces byte-identical key files."""
        first, second = tmp_path / "a.key", tmp_path / "b.key"
        run(capsys, "keygen", "--seed", ZERO_SEED, "--out", first)
        run(capsys, "keygen", "--seed", ZERO_SEED, "--out", second)
        assert first.read_bytes() == second.read_bytes()

    def test_keygen_bad_seed(self, tmp_path, capsys):
        """Short seeds are usage errors and nothing is written."""
        key = tmp_path / "a.key"
        code, out, err = run(capsys, "keygen", "--seed", "abcd", "--out", key)
        assert code == 1
        assert out == ""
        assert "32 bytes" in err
        assert not key.exists()

    def test_commit_reveal_verify(self, tmp_path, capsys, bob_auth):
        """A matching commit and reveal verify with exit code zero."""
        key = tmp_path / "alice.key"
        run(capsys, "keygen", "--seed", ZERO_SEED, "--out", key)
        transfer = ["--key", key, "--to", bob_auth, "--amount", 30]

        code, out, _ = run(capsys, "commit", *transfer, "--out", tmp_path / "c.yaml")
        assert code == 0
        commit = yaml.safe_load((tmp_path / "c.yaml").read_text())
        assert out.strip() == commit["commitment_id"]
        assert commit["size_bytes"] == 1 + 32 + 65

        code, out, _ = run(
            capsys,
            "reveal",
            *transfer,
            "--next-seed", "03" * 32,
            "--next-key-out", tmp_path / "next.key",
            "--out", tmp_path / "r.yaml",
        )
        assert code == 0
        assert out.strip() == yaml.safe_load((tmp_path / "next.key").read_text())["auth"]
        assert stat.S_IMODE((tmp_path / "next.key").stat().st_mode) == 0o600

        code, out, _ = run(
            capsys, "verify", "--commit", tmp_path / "c.yaml", "--reveal", tmp_path / "r.yaml"
        )
        assert code == 0
        summary = key_values(out)
        assert summary["verdict"] == "Ok"
        assert summary["account"] == ZERO_AUTH
        assert summary["commitment_id"] == commit["commitment_id"]

    def test_compact_commit(self, tmp_path, capsys, bob_auth):
        """Compact commits carry one digest after the envelope header."""
        key = tmp_path / "alice.key"
        run(capsys, "keygen", "--seed", ZERO_SEED, "--out", key)
        code, _, _ = run(
            capsys,
            "commit", "--key", key, "--to", bob_auth, "--amount", 1,
            "--mode", "compact", "--out", tmp_path / "c.yaml",
        )
        assert code == 0
        assert yaml.safe_load((tmp_path / "c.yaml").read_text())["size_bytes"] == 1 + 32 + 33

    def test_verify_detects_tampering(self, tmp_path, capsys, bob_auth):
        """A reveal for a different amount fails verification with exit code 2."""
        key = tmp_path / "alice.key"
        run(capsys, "keygen", "--seed", ZERO_SEED, "--out", key)
        run(capsys, "commit", "--key", key, "--to", bob_auth, "--amount", 30,
            "--out", tmp_path / "c.yaml")
        run(capsys, "reveal", "--key", key, "--to", bob_auth, "--amount", 31,
            "--next-key-out", tmp_path / "next.key", "--out", tmp_path / "r.yaml")
        code, out, err = run(
            capsys, "verify", "--commit", tmp_path / "c.yaml", "--reveal", tmp_path / "r.yaml"
        )
        assert code == 2
        assert key_values(out)["verdict"] == "BindMismatch"
        assert "BindMismatch" in err

    def test_reveal_with_bad_key_writes_nothing(self, tmp_path, capsys, bob_auth):
        """A key file whose identifier does not match leaves no outputs behind."""
        key = tmp_path / "alice.key"
        run(capsys, "keygen", "--seed", ZERO_SEED, "--out", key)
        data = yaml.safe_load(key.read_text())
        data["auth"] = bob_auth
        key.write_text(yaml.safe_dump(data))
        code, _, err = run(
            capsys,
            "reveal", "--key", key, "--to", bob_auth, "--amount", 1,
            "--next-key-out", tmp_path / "next.key", "--out", tmp_path / "r.yaml",
        )
        assert code == 2
        assert "does not match" in err
        assert not (tmp_path / "next.key").exists()
        assert not (tmp_path / "r.yaml").exists()

    def test_reveal_unwritable_out_leaves_no_key(self, tmp_path, capsys, bob_auth):
        """If the reveal file cannot be written, the rotated key is not written either."""
        key = tmp_path / "alice.key"
        run(capsys, "keygen", "--seed", ZERO_SEED, "--out", key)
        blocker = tmp_path / "blocker"
        blocker.write_text("not a directory")
        code, out, _ = run(
            capsys,
            "reveal", "--key", key, "--to", bob_auth, "--amount", 1,
            "--next-key-out", tmp_path / "next.key", "--out", blocker / "r.yaml",
        )
        assert code == 3
        assert out == ""
        assert sorted(p.name for p in tmp_path.iterdir()) == ["alice.key", "blocker", "bob.key"]


class TestUsage:
    """Argument errors and help."""

    def test_unknown_subcommand(self, capsys):
        """Unknown subcommands exit with the usage code."""
        code, out, err = run(capsys, "mint")
        assert code == 1
        assert out == ""
        assert "usage" in err

    def test_missing_subcommand(self, capsys):
        """A bare group needs a subcommand."""
        code, _, _ = run(capsys, "sim")
        assert code == 1

    def test_help(self, capsys):
        """--help exits zero."""
        code, out, _ = run(capsys, "--help")
        assert code == 0
        assert "keygen" in out

    def test_missing_scenario_file(self, tmp_path, capsys):
        """Unreadable configuration is a validation error."""
        code, _, err = run(capsys, "sim", "run", tmp_path / "nope.yaml")
        assert code == 2
        assert "not found" in err


class TestLedgerCommands:
    """ledger run and ledger genesis."""

    def test_ledger_run(self, capsys):
        """Final state names the scenario's accounts."""
        code, out, _ = run(capsys, "ledger", "run", SCENARIOS / "transfers.yaml")
        assert code == 0
        assert "alice" in out and "carol" in out

    def test_ledger_genesis(self, capsys):
        """The shipped genesis file loads."""
        code, out, _ = run(capsys, "ledger", "genesis", SCENARIOS.parent / "genesis.yaml")
        assert code == 0
        assert ZERO_AUTH in out


class TestSimCommands:
    """sim run, attacks, footprint and sweep."""

    def test_sim_run_json(self, capsys):
        """Metrics render as JSON."""
        code, out, _ = run(capsys, "sim", "run", SCENARIOS / "transfers.yaml", "--format", "json")
        assert code == 0
        metrics = json.loads(out)
        assert metrics["total_bytes_stored"] == metrics["accepted_tx_bytes"] * 6

    def test_sim_run_csv_golden(self, capsys):
        """The CSV summary row matches the checked-in file byte for byte."""
        code, out, _ = run(capsys, "sim", "run", SCENARIOS / "transfers.yaml", "--format", "csv")
        assert code == 0
        assert out == (GOLDEN / "sim_transfers.csv").read_text()

    def test_sim_run_to_file(self, tmp_path, capsys):
        """--out writes the file and leaves stdout empty."""
        out_file = tmp_path / "metrics.yaml"
        code, out, _ = run(capsys, "sim", "run", SCENARIOS / "attacks.yaml", "--out", out_file)
        assert code == 0
        assert out == ""
        assert yaml.safe_load(out_file.read_text())["successful_attacks"] == 0

    @pytest.mark.parametrize("mode", ["full", "compact"])
    def test_sim_attacks(self, capsys, mode):
        """Every interleaving is rejected."""
        code, out, _ = run(capsys, "sim", "attacks", "--mode", mode, "--strict")
        assert code == 0
        assert "interleavings" in out
        assert key_values(out)["successful"] == "0"

    def test_sim_footprint_default(self, capsys):
        """128-byte envelope, ECDSA authorization."""
        code, out, _ = run(capsys, "sim", "footprint")
        assert code == 0
        values = key_values(out)
        assert values["cr_bytes"] == "384"
        assert values["baseline_bytes"] == "226"
        assert 1.5 <= float(values["ratio"]) <= 2.0

    def test_sim_footprint_scenario(self, capsys):
        """Scenario footprints compare against the signed baseline.

        The declined overdraft at the end of the script stores nothing.
        """
        code, out, _ = run(capsys, "sim", "footprint", SCENARIOS / "transfers.yaml")
        assert code == 0
        values = key_values(out)
        assert values["baseline_auth_bytes"] == "98"
        assert float(values["ratio"]) == pytest.approx(384 / 226, abs=1e-5)

    def test_sim_footprint_sweep(self, capsys):
        """The sensitivity table has one row per envelope size."""
        code, out, _ = run(capsys, "sim", "footprint", "--sweep")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "envelope_bytes,baseline_bytes,full_ratio,compact_ratio"
        assert len(lines) == 8

    def test_sim_sweep(self, tmp_path, capsys):
        """One row per node count and scheme."""
        out_file = tmp_path / "sweep.csv"
        code, _, _ = run(
            capsys,
            "sim", "sweep", SCENARIOS / "transfers.yaml",
            "--full-nodes", "1,10", "--baseline", "ECDSA", "--workers", 2, "--out", out_file,
        )
        assert code == 0
        lines = out_file.read_text().splitlines()
        assert len(lines) == 5
        assert lines[1].split(",")[1] == "cr-full"
        assert lines[2].split(",")[1] == "ECDSA"
        assert all(line.split(",")[-2] == "completed" for line in lines[1:])

    def test_sim_sweep_failure_writes_nothing(self, tmp_path, capsys):
        """A failing run fails the sweep and leaves --out untouched."""
        scenario = tmp_path / "broken.yaml"
        scenario.write_text(
            yaml.safe_dump(
                {
                    "name": "broken",
                    "accounts": {"alice": 10},
                    "events": [{"type": "attack", "kind": "replay_spent", "target": "alice"}],
                }
            )
        )
        out_file = tmp_path / "sweep.csv"
        code, out, err = run(
            capsys, "sim", "sweep", scenario, "--full-nodes", "1,2", "--out", out_file
        )
        assert code == 2
        assert "2 of 2 runs failed" in err
        assert "failed" in out
        assert not out_file.exists()

    @pytest.mark.parametrize("workers,nodes", [("0", "1"), ("2", "a,b")])
    def test_sim_sweep_bad_arguments(self, capsys, workers, nodes):
        """Invalid worker counts and node lists are usage errors."""
        code, _, _ = run(
            capsys,
            "sim", "sweep", SCENARIOS / "transfers.yaml",
            "--full-nodes", nodes, "--workers", workers,
        )
        assert code == 1


class TestCostCommands:
    """cost report and cost figure."""

    @pytest.mark.parametrize("name", ["fig1", "fig2", "table2"])
    def test_figure_golden(self, capsys, name):
        """Figure CSVs match the checked-in files byte for byte."""
        code, out, _ = run(capsys, "cost", "figure", name)
        assert code == 0
        assert out == (GOLDEN / f"{name}.csv").read_text()

    def test_figure_to_file(self, tmp_path, capsys):
        """--out writes the same bytes."""
        out_file = tmp_path / "table2.csv"
        code, out, _ = run(capsys, "cost", "figure", "table2", "--out", out_file)
        assert code == 0
        assert out == ""
        assert out_file.read_bytes() == (GOLDEN / "table2.csv").read_bytes()

    def test_figure_plot(self, tmp_path, capsys):
        """--plot writes a PNG alongside the CSV on stdout."""
        png = tmp_path / "fig1.png"
        code, out, _ = run(capsys, "cost", "figure", "fig1", "--plot", png)
        assert code == 0
        assert out.startswith("scheme,tx_bytes")
        assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"

    def test_figure_plot_not_left_behind(self, tmp_path, capsys):
        """A CSV that cannot be written leaves no chart behind."""
        png = tmp_path / "fig1.png"
        blocker = tmp_path / "blocker"
        blocker.write_text("not a directory")
        code, _, _ = run(
            capsys, "cost", "figure", "fig1", "--plot", png, "--out", blocker / "fig1.csv"
        )
        assert code == 3
        assert sorted(p.name for p in tmp_path.iterdir()) == ["blocker"]

    def test_footprint_figure(self, capsys):
        """The footprint sensitivity table is available as a figure."""
        code, out, _ = run(capsys, "cost", "figure", "footprint")
        assert code == 0
        assert out.splitlines()[3].startswith("128,226,")

    def test_report_json(self, capsys):
        """The structured report carries the aggregate and the cost band."""
        code, out, _ = run(capsys, "cost", "report", "--format", "json")
        assert code == 0
        report = json.loads(out)
        assert report["storage"]["subtotal_eb"] == pytest.approx(4.4365)
        assert report["storage"]["rounded_subtotal_eb"] == pytest.approx(4.5)
        assert report["infrastructure"]["rounded_raw_usd"] == pytest.approx(1.35e9)
        assert report["infrastructure"]["rounded_band_usd"]["low"] == pytest.approx(13.5e9)
        assert report["infrastructure"]["rounded_band_usd"]["high"] == pytest.approx(27e9)
        assert report["hardware_catchup_years"]["50"] == pytest.approx(11.29, abs=0.01)
        assert report["reference_tx_bytes"] == 226

    def test_report_text(self, capsys):
        """The text report names every section."""
        code, out, _ = run(capsys, "cost", "report")
        assert code == 0
        for heading in ("Signature schemes", "Replicated storage", "Infrastructure cost"):
            assert heading in out
        assert "$1.35B" in out

    def test_catalog_override(self, tmp_path, capsys):
        """--catalog changes the figure data."""
        catalog = tmp_path / "catalog.yaml"
        catalog.write_text(yaml.safe_dump({"schemes": [{"name": "ECDSA", "representative_tx_bytes": 250}]}))
        code, out, _ = run(capsys, "cost", "figure", "fig1", "--catalog", catalog)
        assert code == 0
        assert "ECDSA,250" in out
