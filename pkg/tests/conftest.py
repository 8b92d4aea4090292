"""Shared fixtures."""

import logging

import pytest
from hypothesis import HealthCheck, settings

from src.costmodel import default_catalog
from src.crypto import Action, HashAlgId, keygen
from src.ledger import LedgerConfig, LedgerState
from src.netsim import NodeCounts, SimConfig

ZERO_SEED = bytes(32)

# The autouse environment fixture only sets variables, so reuse across examples is safe.
settings.register_profile("default", suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile("default")


def seed(n: int) -> bytes:
    return n.to_bytes(32, "big")


@pytest.fixture(autouse=True)
def isolated_config_dir(tmp_path_factory, monkeypatch):
    """Keep tests independent of any catalog.yaml or log dir in the developer's environment."""
    monkeypatch.setenv("CRLEDGER_CONFIG_DIR", str(tmp_path_factory.mktemp("config")))
    monkeypatch.delenv("CRLEDGER_LOG_DIR", raising=False)


@pytest.fixture
def alice():
    return keygen(seed(1))


@pytest.fixture
def bob():
    return keygen(seed(2))


@pytest.fixture
def carol():
    return keygen(seed(3))


@pytest.fixture
def genesis(alice, bob):
    """Alice holds 100, Bob holds 50; d = 1, TTL = 10."""
    config = LedgerConfig(
        hash_algorithm=HashAlgId.SHA256,
        confirmation_depth=1,
        commit_ttl=10,
        allocations=((alice[1], 100), (bob[1], 50)),
    )
    return LedgerState.genesis(config)


@pytest.fixture
def pay_bob(bob):
    return Action(dest=bob[1], amount=30)


@pytest.fixture
def catalog():
    return default_catalog()


@pytest.fixture
def sim_config():
    return SimConfig(
        name="fixture",
        seed=5,
        nodes=NodeCounts(light=1, full=3, archive=1),
        accounts=(("alice", 100), ("bob", 50)),
    )


@pytest.fixture
def quiet_logs(caplog):
    caplog.set_level(logging.WARNING)
    return caplog
