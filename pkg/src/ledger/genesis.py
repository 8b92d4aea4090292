"""Genesis files in, state exports out."""

import logging
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

from ..crypto import Digest, HashAlgId, commitment_id
from ..errors import ConfigurationError, ValidationError
from ..schemas.field_names import StateExportFields
from ..schemas.genesis_contract import GenesisContract
from ..utils.contract_utils import convert_dict_to_dataclass, dump_yaml, load_yaml_contract
from .state import AuthId, LedgerConfig, LedgerState
from .transitions import total_supply

logger = logging.getLogger(__name__)


def config_from_contract(contract: GenesisContract) -> LedgerConfig:
    allocations = []
    for allocation in contract.allocations:
        try:
            auth = Digest.from_hex(allocation.auth)
        except ValidationError as e:
            raise ConfigurationError(f"Bad genesis identifier '{allocation.auth}': {e}") from e
        allocations.append((auth, allocation.amount))
    return LedgerConfig(
        hash_algorithm=HashAlgId.parse(contract.hash_algorithm),
        confirmation_depth=contract.confirmation_depth,
        commit_ttl=contract.commit_ttl,
        allocations=tuple(allocations),
    )


def parse_genesis(data: Dict[str, Any]) -> LedgerConfig:
    return config_from_contract(convert_dict_to_dataclass(GenesisContract, data or {}))


def load_genesis(path: Union[str, Path]) -> LedgerConfig:
    config = config_from_contract(load_yaml_contract(path, GenesisContract))
    logger.info(
        f"Loaded genesis from {path}: {len(config.allocations)} allocations, "
        f"d={config.confirmation_depth}, ttl={config.commit_ttl}"
    )
    return config


def export_state(
    state: LedgerState, names: Optional[Mapping[AuthId, str]] = None
) -> Dict[str, Any]:
    """Plain-data dump of a state, sorted so equal states export identically.

    ``names`` optionally labels identifiers with scenario account names.
    """
    alg = state.config.hash_algorithm
    accounts = []
    for auth in sorted(state.accounts, key=lambda a: a.hex()):
        account = state.accounts[auth]
        entry: Dict[str, Any] = {}
        if names and auth in names:
            entry[StateExportFields.NAME.value] = names[auth]
        entry[StateExportFields.AUTH.value] = auth.hex()
        entry[StateExportFields.BALANCE.value] = account.balance
        entry[StateExportFields.STATUS.value] = account.status.value
        if account.pending is not None:
            entry[StateExportFields.PENDING.value] = {
                StateExportFields.COMMITMENT_ID.value: commitment_id(
                    account.pending.commit, alg
                ).hex(),
                StateExportFields.COMMIT_HEIGHT.value: account.pending.height,
                StateExportFields.EXPIRY_HEIGHT.value: account.pending.expiry_height,
            }
        else:
            entry[StateExportFields.PENDING.value] = None
        accounts.append(entry)

    return {
        StateExportFields.HEIGHT.value: state.height,
        StateExportFields.HASH_ALGORITHM.value: alg.value,
        StateExportFields.TOTAL_SUPPLY.value: total_supply(state),
        StateExportFields.ACCOUNTS.value: accounts,
        StateExportFields.SPENT_COMMITMENTS.value: sorted(
            d.hex() for d in state.spent_commitments
        ),
    }


def export_state_yaml(
    state: LedgerState, names: Optional[Mapping[AuthId, str]] = None
) -> str:
    return dump_yaml(export_state(state, names))
