"""Tests for YAML contract conversion and atomic file output."""

import pytest

from src.errors import ConfigurationError
from src.schemas.catalog_contract import CatalogContract, SchemeOverrideContract
from src.schemas.scenario_contract import ScenarioContract
from src.utils.contract_utils import convert_dict_to_dataclass, load_yaml_contract
from src.utils.io_utils import OutputFile, atomic_write, atomic_write_all, write_secret


class TestContractConversion:
    """Mappings to nested dataclasses."""

    def test_nested_lists(self):
        """Lists of nested contracts come back as dataclasses."""
        contract = convert_dict_to_dataclass(
            CatalogContract, {"schemes": [{"name": "X", "signature_bytes": [1, 2]}]}
        )
        assert isinstance(contract.schemes[0], SchemeOverrideContract)
        assert contract.schemes[0].signature_bytes == [1, 2]

    def test_unknown_keys(self):
        """Undeclared keys are configuration errors."""
        with pytest.raises(ConfigurationError, match="Unknown keys"):
            convert_dict_to_dataclass(ScenarioContract, {"name": "x", "colour": "red"})

    def test_type_mismatch(self):
        """Scalars must match their declared type."""
        with pytest.raises(ConfigurationError, match="Expected int"):
            convert_dict_to_dataclass(ScenarioContract, {"seed": "seven"})

    def test_bool_is_not_int(self):
        """Booleans are not accepted where integers are declared."""
        with pytest.raises(ConfigurationError):
            convert_dict_to_dataclass(ScenarioContract, {"seed": True})

    def test_empty_document(self, tmp_path):
        """An empty YAML file gives the contract defaults."""
        path = tmp_path / "empty.yaml"
        path.write_text("")
        assert load_yaml_contract(path, CatalogContract) == CatalogContract()

    def test_malformed_yaml(self, tmp_path):
        """Unparseable YAML is a configuration error."""
        path = tmp_path / "bad.yaml"
        path.write_text("schemes: [unclosed")
        with pytest.raises(ConfigurationError, match="Malformed YAML"):
            load_yaml_contract(path, CatalogContract)


class TestAtomicWrite:
    """Whole-file writes."""

    def test_replaces_existing(self, tmp_path):
        """Existing files are replaced and no temp files remain."""
        path = tmp_path / "out.txt"
        path.write_text("old")
        atomic_write(path, "new")
        assert path.read_text() == "new"
        assert [p.name for p in tmp_path.iterdir()] == ["out.txt"]

    def test_secret_mode(self, tmp_path):
        """Secrets are readable by the owner only."""
        path = write_secret(tmp_path / "key.yaml", "preimage: 00")
        assert path.stat().st_mode & 0o777 == 0o600

    def test_creates_parent_directories(self, tmp_path):
        """Missing parent directories are created."""
        path = atomic_write(tmp_path / "a" / "b" / "c.csv", b"x,y\n")
        assert path.read_bytes() == b"x,y\n"


class TestAtomicWriteAll:
    """Several files written as a unit."""

    def test_writes_every_file(self, tmp_path):
        """All files land with their own modes."""
        key, doc = tmp_path / "next.key", tmp_path / "r.yaml"
        atomic_write_all([OutputFile(key, "preimage: 00", 0o600), OutputFile(doc, "a: 1\n")])
        assert key.stat().st_mode & 0o777 == 0o600
        assert doc.read_text() == "a: 1\n"

    def test_staging_failure_writes_nothing(self, tmp_path):
        """A second file that cannot be staged keeps the first from appearing."""
        blocker = tmp_path / "blocker"
        blocker.write_text("x")
        with pytest.raises(OSError):
            atomic_write_all(
                [OutputFile(tmp_path / "first.txt", "1"), OutputFile(blocker / "second.txt", "2")]
            )
        assert sorted(p.name for p in tmp_path.iterdir()) == ["blocker"]

    def test_replace_failure_removes_placed_files(self, tmp_path):
        """Files already moved into place are removed when a later move fails."""
        (tmp_path / "taken").mkdir()
        with pytest.raises(OSError):
            atomic_write_all(
                [OutputFile(tmp_path / "first.txt", "1"), OutputFile(tmp_path / "taken", "2")]
            )
        assert sorted(p.name for p in tmp_path.iterdir()) == ["taken"]
        assert list((tmp_path / "taken").iterdir()) == []
