"""Offline protocol commands over key, commit and reveal files.

Preimages are written only to the paths given with --out / --next-key-out
(mode 0600) and never echoed to stdout.
"""

import argparse
import logging

from ..crypto import (
    Action,
    CommitMode,
    Digest,
    HashAlgId,
    Preimage,
    auth_id,
    commitment_id,
    decode_commitment,
    decode_reveal,
    keygen,
    make_commit,
    make_reveal,
    verify_reveal,
)
from ..errors import ConfigurationError, UsageError, ValidationError
from ..ledger import TxEnvelope
from ..schemas.key_contract import (
    COMMIT_FILE_KIND,
    KEY_FILE_KIND,
    REVEAL_FILE_KIND,
    CommitFileContract,
    KeyFileContract,
    RevealFileContract,
)
from ..services import CommandResult, arg, command_registry
from ..utils.contract_utils import contract_to_dict, dump_yaml, load_yaml_contract
from ..utils.env import CRLEDGER_HASH_ALG
from ..utils.io_utils import (
    SECRET_MODE,
    OutputFile,
    atomic_write,
    atomic_write_all,
    write_secret,
)
from ..utils.result_utils import format_key_values

logger = logging.getLogger(__name__)


def _seed(text: str) -> bytes:
    try:
        seed = bytes.fromhex(text.strip().removeprefix("0x"))
    except ValueError:
        raise UsageError(f"--seed is not valid hex: '{text}'") from None
    if len(seed) != 32:
        raise UsageError("--seed must be exactly 32 bytes (64 hex characters)")
    return seed


def _digest_arg(text: str, flag: str) -> Digest:
    try:
        return Digest.from_hex(text)
    except ValidationError as e:
        raise UsageError(f"{flag}: {e}") from None


def _key_file(x: Preimage, alg: HashAlgId) -> str:
    contract = KeyFileContract(
        preimage=x.hex(), auth=auth_id(x, alg).hex(), hash_algorithm=alg.value
    )
    return dump_yaml(contract_to_dict(contract))


def _load_key(path: str) -> tuple[Preimage, HashAlgId]:
    contract = load_yaml_contract(path, KeyFileContract)
    if contract.kind != KEY_FILE_KIND:
        raise ConfigurationError(f"{path} is not a key file (kind '{contract.kind}')")
    alg = HashAlgId.parse(contract.hash_algorithm)
    x = Preimage.from_hex(contract.preimage)
    if auth_id(x, alg).hex() != contract.auth.lower():
        raise ValidationError(f"{path}: stored identifier does not match the preimage")
    return x, alg


def cmd_keygen(args: argparse.Namespace) -> CommandResult:
    """Generate a preimage and its public identifier."""
    alg = HashAlgId.parse(args.alg)
    seed = _seed(args.seed) if args.seed else None
    x, auth = keygen(seed, alg)
    write_secret(args.out, _key_file(x, alg))
    logger.info(f"Wrote key for {auth.hex()[:16]} to {args.out}")
    return CommandResult.success_result(output=auth.hex() + "\n")


def cmd_commit(args: argparse.Namespace) -> CommandResult:
    """Build a commit envelope for a transfer."""
    x, alg = _load_key(args.key)
    mode = CommitMode.parse(args.mode)
    action = Action(dest=_digest_arg(args.to, "--to"), amount=args.amount)
    commitment = make_commit(x, action, mode, alg)
    envelope = TxEnvelope.for_commit(commitment, account=auth_id(x, alg))
    cid = commitment_id(commitment, alg)
    contract = CommitFileContract(
        account=envelope.account.hex(),
        payload=envelope.payload.hex(),
        mode=mode.name.lower(),
        hash_algorithm=alg.value,
        commitment_id=cid.hex(),
        size_bytes=envelope.size_bytes,
    )
    atomic_write(args.out, dump_yaml(contract_to_dict(contract)))
    return CommandResult.success_result(output=cid.hex() + "\n")


def cmd_reveal(args: argparse.Namespace) -> CommandResult:
    """Build a reveal envelope and rotate to a fresh key."""
    x, alg = _load_key(args.key)
    action = Action(dest=_digest_arg(args.to, "--to"), amount=args.amount)
    next_seed = _seed(args.next_seed) if args.next_seed else None
    reveal, next_x = make_reveal(x, action, next_seed, alg)
    envelope = TxEnvelope.for_reveal(auth_id(x, alg), reveal)
    contract = RevealFileContract(
        account=envelope.account.hex(),
        payload=envelope.payload.hex(),
        dest=action.dest.hex(),
        amount=action.amount,
        next_auth=reveal.next_auth.hex(),
        hash_algorithm=alg.value,
        size_bytes=envelope.size_bytes,
    )
    atomic_write_all(
        [
            OutputFile(args.next_key_out, _key_file(next_x, alg), SECRET_MODE),
            OutputFile(args.out, dump_yaml(contract_to_dict(contract))),
        ]
    )
    return CommandResult.success_result(output=reveal.next_auth.hex() + "\n")


def cmd_verify(args: argparse.Namespace) -> CommandResult:
    """Check a reveal file against a commit file."""
    commit_file = load_yaml_contract(args.commit, CommitFileContract)
    reveal_file = load_yaml_contract(args.reveal, RevealFileContract)
    if commit_file.kind != COMMIT_FILE_KIND or reveal_file.kind != REVEAL_FILE_KIND:
        raise ConfigurationError("verify needs a commit file and a reveal file")
    alg = HashAlgId.parse(commit_file.hash_algorithm)
    if HashAlgId.parse(reveal_file.hash_algorithm) != alg:
        return CommandResult.error_result("Commit and reveal use different hash algorithms")

    account = Digest.from_hex(commit_file.account)
    try:
        commitment = decode_commitment(bytes.fromhex(commit_file.payload), account)
        reveal = decode_reveal(bytes.fromhex(reveal_file.payload))
    except ValueError as e:
        return CommandResult.error_result(f"Malformed payload: {e}")
    if Digest.from_hex(reveal_file.account) != account:
        return CommandResult.error_result("Reveal targets a different account than the commit")

    verdict = verify_reveal(commitment, reveal, alg)
    summary = format_key_values(
        {
            "account": account.hex(),
            "commitment_id": commitment_id(commitment, alg).hex(),
            "verdict": verdict.reason.value,
        }
    )
    if not verdict.ok:
        return CommandResult.error_result(
            f"Verification failed: {verdict.reason.value}", output=summary + "\n"
        )
    return CommandResult.success_result(output=summary + "\n")


def register_key_commands() -> None:
    alg = arg("--alg", default=CRLEDGER_HASH_ALG, help="sha256 | blake2s | keccak256")
    transfer = [
        arg("--key", required=True, help="key file"),
        arg("--to", required=True, help="destination identifier (hex)"),
        arg("--amount", required=True, type=int),
    ]
    command_registry.register_command(
        cmd_keygen,
        name="keygen",
        arguments=[
            arg("--seed", help="32-byte hex seed for deterministic output"),
            alg,
            arg("--out", required=True, help="key file to write (mode 0600)"),
        ],
    )
    command_registry.register_command(
        cmd_commit,
        name="commit",
        arguments=transfer
        + [
            arg("--mode", default="full", choices=["full", "compact"]),
            arg("--out", required=True, help="commit file to write"),
        ],
    )
    command_registry.register_command(
        cmd_reveal,
        name="reveal",
        arguments=transfer
        + [
            arg("--next-seed", help="32-byte hex seed for the rotated key"),
            arg("--next-key-out", required=True, help="rotated key file (mode 0600)"),
            arg("--out", required=True, help="reveal file to write"),
        ],
    )
    command_registry.register_command(
        cmd_verify,
        name="verify",
        arguments=[
            arg("--commit", required=True, help="commit file"),
            arg("--reveal", required=True, help="reveal file"),
        ],
    )
