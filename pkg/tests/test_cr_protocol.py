"""Tests for commit, reveal and verification."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.crypto import (
    BURN_AUTH,
    Action,
    CommitMode,
    Digest,
    HashAlgId,
    Preimage,
    Reveal,
    VerifyReason,
    auth_id,
    decode_commitment,
    decode_reveal,
    derive_preimage,
    encode_commitment,
    encode_reveal,
    keygen,
    make_commit,
    make_reveal,
    verify_reveal,
)
from src.crypto.cr_protocol import MAX_AMOUNT
from src.errors import ValidationError

seeds = st.binary(min_size=32, max_size=32)
digests = st.binary(min_size=32, max_size=32).map(Digest)
amounts = st.integers(min_value=1, max_value=MAX_AMOUNT)
algorithms = st.sampled_from(list(HashAlgId))
modes = st.sampled_from(list(CommitMode))


class TestKeygen:
    """Preimage derivation and identifiers."""

    def test_zero_seed_golden(self):
        """A zero seed gives fixed SHA-256 preimage and identifier."""
        x, y = keygen(bytes(32))
        assert x.hex() == "0dc094ceb3e01e9e0ac5bf1fe57cb4af5763f1f07feb53532d6c2ec779f5bf25"
        assert y.hex() == "a43b6ed31d94e5b4c4f366efad640e888a9511d3980723bcbef9a5695e6a32f9"

    def test_deterministic(self):
        """The same seed always yields the same key."""
        assert keygen(b"\x07" * 32) == keygen(b"\x07" * 32)

    def test_without_seed_is_random(self):
        """Unseeded keys come from the OS generator."""
        assert derive_preimage() != derive_preimage()

    def test_seed_length(self):
        """Seeds must be 32 bytes."""
        with pytest.raises(ValidationError):
            derive_preimage(b"short")

    def test_preimage_repr_hides_secret(self):
        """The preimage never appears in its repr."""
        x, _ = keygen(bytes(32))
        assert x.hex() not in repr(x)


class TestVerify:
    """verify_reveal outcomes."""

    def test_round_trip(self, alice, pay_bob):
        """An honest commit and reveal verify."""
        x, _ = alice
        commitment = make_commit(x, pay_bob)
        reveal, _ = make_reveal(x, pay_bob, bytes(32))
        verdict = verify_reveal(commitment, reveal)
        assert verdict.ok and verdict.reason == VerifyReason.OK

    def test_wrong_preimage(self, alice, bob, pay_bob):
        """Revealing another secret fails the address check."""
        commitment = make_commit(alice[0], pay_bob)
        reveal, _ = make_reveal(bob[0], pay_bob, bytes(32))
        assert verify_reveal(commitment, reveal).reason == VerifyReason.ADDR_MISMATCH

    def test_substituted_action(self, alice, carol, pay_bob):
        """Changing the action after committing fails the binding check."""
        x, _ = alice
        commitment = make_commit(x, pay_bob)
        reveal, _ = make_reveal(x, Action(dest=carol[1], amount=30), bytes(32))
        assert verify_reveal(commitment, reveal).reason == VerifyReason.BIND_MISMATCH

    def test_rotation_to_revealed_identifier(self, alice, pay_bob):
        """A reveal may not rotate the remainder back to the revealed identifier."""
        x, y = alice
        commitment = make_commit(x, pay_bob)
        reveal = Reveal(x=x, m=pay_bob, next_auth=y)
        assert verify_reveal(commitment, reveal).reason == VerifyReason.NEXT_AUTH_REUSED

    def test_zero_amount_is_malformed(self, alice, bob):
        """A zero-amount action cannot be committed."""
        with pytest.raises(ValidationError):
            make_commit(alice[0], Action(dest=bob[1], amount=0))

    def test_zero_amount_reveal_reports_malformed(self, alice, bob, pay_bob):
        """A decoded zero-amount reveal verifies as MalformedAction."""
        x, _ = alice
        commitment = make_commit(x, pay_bob)
        reveal = Reveal(x=x, m=Action(dest=bob[1], amount=0), next_auth=BURN_AUTH)
        assert verify_reveal(commitment, reveal).reason == VerifyReason.MALFORMED_ACTION

    def test_algorithm_mismatch(self, alice, pay_bob):
        """Verifying under another algorithm fails."""
        x, _ = alice
        commitment = make_commit(x, pay_bob, alg=HashAlgId.SHA256)
        reveal, _ = make_reveal(x, pay_bob, bytes(32), HashAlgId.SHA256)
        assert not verify_reveal(commitment, reveal, HashAlgId.BLAKE2S).ok

    def test_compact_commit_size(self, alice, pay_bob):
        """Compact commitments serialize to 33 bytes, full ones to 65."""
        x, _ = alice
        assert len(encode_commitment(make_commit(x, pay_bob, CommitMode.COMPACT))) == 33
        assert len(encode_commitment(make_commit(x, pay_bob, CommitMode.FULL))) == 65

    def test_reveal_size(self, alice, pay_bob):
        """Reveals serialize to 105 bytes."""
        reveal, _ = make_reveal(alice[0], pay_bob, bytes(32))
        assert len(encode_reveal(reveal)) == 105


class TestProtocolProperties:
    """Randomized protocol properties."""

    @settings(max_examples=1000, deadline=None)
    @given(seed=seeds, dest=digests, amount=amounts, alg=algorithms, mode=modes, nxt=seeds)
    def test_honest_round_trip(self, seed, dest, amount, alg, mode, nxt):
        """Every honest commit/reveal pair verifies, also after a wire round trip."""
        x = derive_preimage(seed)
        m = Action(dest=dest, amount=amount)
        commitment = make_commit(x, m, mode, alg)
        reveal, next_x = make_reveal(x, m, nxt, alg)
        decoded_c = decode_commitment(encode_commitment(commitment), auth_id(x, alg))
        decoded_r = decode_reveal(encode_reveal(reveal))
        assert verify_reveal(decoded_c, decoded_r, alg).ok
        assert reveal.next_auth == auth_id(next_x, alg)

    @settings(max_examples=1000, deadline=None)
    @given(seed=seeds, dest=digests, amount=amounts, other=amounts, alg=algorithms, mode=modes)
    def test_mutated_amount_fails_binding(self, seed, dest, amount, other, alg, mode):
        """Any change to the amount breaks the binding."""
        if other == amount:
            other = amount - 1 if amount > 1 else amount + 1
        x = derive_preimage(seed)
        commitment = make_commit(x, Action(dest=dest, amount=amount), mode, alg)
        reveal, _ = make_reveal(x, Action(dest=dest, amount=other), bytes(32), alg)
        assert verify_reveal(commitment, reveal, alg).reason == VerifyReason.BIND_MISMATCH

    @settings(max_examples=1000, deadline=None)
    @given(seed=seeds, dest=digests, other=digests, amount=amounts, alg=algorithms, mode=modes)
    def test_mutated_destination_fails_binding(self, seed, dest, other, amount, alg, mode):
        """Any change to the destination breaks the binding."""
        if other == dest:
            return
        x = derive_preimage(seed)
        commitment = make_commit(x, Action(dest=dest, amount=amount), mode, alg)
        reveal, _ = make_reveal(x, Action(dest=other, amount=amount), bytes(32), alg)
        assert verify_reveal(commitment, reveal, alg).reason == VerifyReason.BIND_MISMATCH

    @settings(max_examples=1000, deadline=None)
    @given(
        seed=seeds,
        wrong=seeds,
        dest=digests,
        amount=amounts,
        claimed=amounts,
        alg=algorithms,
    )
    def test_compact_and_full_agree(self, seed, wrong, dest, amount, claimed, alg):
        """Both representations return the same verdict for the same reveal."""
        x = derive_preimage(seed)
        m = Action(dest=dest, amount=amount)
        full = make_commit(x, m, CommitMode.FULL, alg)
        compact = make_commit(x, m, CommitMode.COMPACT, alg)
        compact = decode_commitment(encode_commitment(compact), auth_id(x, alg))
        for revealed_x in (x, derive_preimage(wrong)):
            reveal, _ = make_reveal(revealed_x, Action(dest=dest, amount=claimed), bytes(32), alg)
            assert verify_reveal(full, reveal, alg) == verify_reveal(compact, reveal, alg)

    @settings(max_examples=1000, deadline=None)
    @given(seed=seeds, dest=digests, amount=amounts, alg=algorithms, mode=modes)
    def test_commit_never_contains_preimage(self, seed, dest, amount, alg, mode):
        """The serialized commitment does not carry the preimage bytes."""
        x = derive_preimage(seed)
        commitment = make_commit(x, Action(dest=dest, amount=amount), mode, alg)
        assert x.x not in encode_commitment(commitment)


class TestPreimage:
    """Preimage value type."""

    def test_length(self):
        """Preimages are exactly 32 bytes."""
        with pytest.raises(ValidationError):
            Preimage(b"\x00" * 33)

    def test_from_hex(self):
        """Hex round trip."""
        x, _ = keygen(bytes(32))
        assert Preimage.from_hex(x.hex()) == x
