from enum import Enum


class StateExportFields(Enum):
    HEIGHT = "height"
    HASH_ALGORITHM = "hash_algorithm"
    TOTAL_SUPPLY = "total_supply"
    ACCOUNTS = "accounts"
    NAME = "name"
    AUTH = "auth"
    BALANCE = "balance"
    STATUS = "status"
    PENDING = "pending"
    COMMITMENT_ID = "commitment_id"
    COMMIT_HEIGHT = "height"
    EXPIRY_HEIGHT = "expiry_height"
    SPENT_COMMITMENTS = "spent_commitments"


class EventFields(Enum):
    TYPE = "type"
    FROM = "from"
    TO = "to"
    AMOUNT = "amount"
    ACCOUNT = "account"
    LABEL = "label"
    BLOCKS = "blocks"
    KIND = "kind"
    TARGET = "target"


class MetricsFields(Enum):
    SCHEME = "scheme"
    TOTAL_BYTES_STORED = "total_bytes_stored"
    TOTAL_BYTES_TRANSMITTED = "total_bytes_transmitted"
    ACCEPTED_TX_BYTES = "accepted_tx_bytes"
    ACCEPTED_TX_COUNT = "accepted_tx_count"
    REJECTED_TX_COUNT = "rejected_tx_count"
    AUTHORIZATION_EVENTS = "authorization_events"
    AUTHORIZED_TX_BYTES = "authorized_tx_bytes"
    DECLINED_TRANSFERS = "declined_transfers"
    FOOTPRINT_PER_AUTH = "footprint_per_auth"
    REJECTED_ATTACKS = "rejected_attacks"
    SUCCESSFUL_ATTACKS = "successful_attacks"
    GRIEFING_ATTACKS = "griefing_attacks"
    BLOCKS = "blocks"
    WIRE_BYTES = "wire_bytes"
    NODES = "nodes"
    BALANCES = "balances"
