"""Keyed-hash message authentication code built on Ascon-Hash256.

The classic nested construction: hash((K0 xor opad) || hash((K0 xor ipad) || M))
with the usual 0x36/0x5c pad bytes. Ascon-Hash256 is a sponge, so it has no
canonical block length; we default to 64 bytes, which mirrors the SHA-256
HMAC geometry and lets K0 carry a 256-bit key unhashed. The block length is
a parameter so other choices stay testable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ascon import ascon_hash256

_DIGEST_LEN = 32  # bytes


@dataclass(frozen=True)
class HmacParams:
    block_len: int = 64   # bytes; must hold a full digest
    ipad_byte: int = 0x36
    opad_byte: int = 0x5C

    def __post_init__(self):
        if self.block_len < _DIGEST_LEN:
            raise ValueError(f"block length {self.block_len} < digest length {_DIGEST_LEN}")


DEFAULT_PARAMS = HmacParams()


def derive_k0(key: bytes, params: HmacParams = DEFAULT_PARAMS) -> bytes:
    """Pad (or hash then pad) the key to exactly one block."""
    if len(key) > params.block_len:
        key = ascon_hash256(key)
    return key + bytes(params.block_len - len(key))


def hmac(key: bytes, message: bytes, params: HmacParams = DEFAULT_PARAMS) -> bytes:
    """256-bit MAC of message under key."""
    k0 = derive_k0(key, params)
    inner = ascon_hash256(bytes(b ^ params.ipad_byte for b in k0) + message)
    return ascon_hash256(bytes(b ^ params.opad_byte for b in k0) + inner)
