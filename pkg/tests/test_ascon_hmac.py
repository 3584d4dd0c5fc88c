import random

import pytest

from ascondrbg.ascon import ascon_hash256
from ascondrbg.ascon_hmac import DEFAULT_PARAMS, HmacParams, derive_k0, hmac

B = DEFAULT_PARAMS.block_len


def reference_hmac(key: bytes, message: bytes, block_len: int = B) -> bytes:
    """Independent recomposition from plain ascon_hash256 calls."""
    if len(key) > block_len:
        key = ascon_hash256(key)
    k0 = key + bytes(block_len - len(key))
    inner = ascon_hash256(bytes(b ^ 0x36 for b in k0) + message)
    return ascon_hash256(bytes(b ^ 0x5C for b in k0) + inner)


class TestDeriveK0:
    def test_full_block_key_unchanged(self):
        key = bytes(range(B))
        assert derive_k0(key) == key

    def test_empty_key_zero_block(self):
        assert derive_k0(b"") == bytes(B)

    def test_long_key_hashed_then_padded(self):
        key = bytes(range(B + 1))
        assert derive_k0(key) == ascon_hash256(key) + bytes(B - 32)

    def test_block_len_must_hold_digest(self):
        with pytest.raises(ValueError):
            HmacParams(block_len=16)


class TestHmac:
    def test_matches_two_call_composition(self):
        rng = random.Random(0x36)
        for _ in range(60):
            key = rng.randbytes(rng.randrange(0, 2 * B))
            msg = rng.randbytes(rng.randrange(0, 200))
            assert hmac(key, msg) == reference_hmac(key, msg)

    def test_deterministic(self):
        assert hmac(b"key", b"msg") == hmac(b"key", b"msg")

    def test_distinct_messages(self):
        assert hmac(b"key", b"\x00") != hmac(b"key", b"\x01")

    def test_output_is_256_bits(self):
        for key_len, msg_len in [(0, 0), (B, 33), (3 * B, 1)]:
            assert len(hmac(bytes(key_len), bytes(msg_len))) == 32

    def test_zero_pad_equivalence(self):
        key = b"\xab" * 20
        for pad in (1, 5, B - 20):
            assert hmac(key + bytes(pad), b"data") == hmac(key, b"data")

    def test_rate_sized_block_alternative(self):
        params = HmacParams(block_len=32)
        key, msg = b"\x11" * 40, b"payload"
        assert hmac(key, msg, params) == reference_hmac(key, msg, block_len=32)
        assert hmac(key, msg, params) != hmac(key, msg)
