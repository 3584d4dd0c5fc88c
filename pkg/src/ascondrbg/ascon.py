"""Ascon-Hash256 and Ascon-AEAD128 over the 320-bit Ascon permutation.

Implemented from scratch per the NIST lightweight-cryptography standard and
validated bit-exactly against the known-answer vectors vendored under
``vectors/`` (see kat.py). State words are loaded and stored little-endian,
matching the standard's byte ordering.

Only encryption is provided for the AEAD: the DRBG constructions use it as
a keystream block generator and discard the tag, so decryption and tag
verification are deliberately out of scope here.
"""

from __future__ import annotations

_MASK64 = 0xFFFFFFFFFFFFFFFF

# Constants for the maximum 16-round schedule; an rnd-round permutation uses
# the last rnd entries.
_ROUND_CONSTANTS = (
    0x3C, 0x2D, 0x1E, 0x0F, 0xF0, 0xE1, 0xD2, 0xC3,
    0xB4, 0xA5, 0x96, 0x87, 0x78, 0x69, 0x5A, 0x4B,
)

# Initial-value words (first state word of each mode, little-endian load).
_HASH256_IV = 0x0000080100CC0002
_AEAD128_IV = 0x00001000808C0001

_HASH_RATE = 8    # bytes
_AEAD_RATE = 16   # bytes

AsconState = tuple[int, int, int, int, int]


def _permute(s: list[int], rounds: int) -> None:
    """Apply the rounds in place; s holds five 64-bit words.

    Rotations are written out inline: this loop dominates every hash and
    AEAD call, and call overhead roughly halves pure-Python throughput.
    """
    x0, x1, x2, x3, x4 = s
    for rc in _ROUND_CONSTANTS[16 - rounds:]:
        # constant addition
        x2 ^= rc
        # substitution layer (5-bit S-box applied across the words)
        x0 ^= x4
        x4 ^= x3
        x2 ^= x1
        t0 = (x0 ^ _MASK64) & x1
        t1 = (x1 ^ _MASK64) & x2
        t2 = (x2 ^ _MASK64) & x3
        t3 = (x3 ^ _MASK64) & x4
        t4 = (x4 ^ _MASK64) & x0
        x0 ^= t1
        x1 ^= t2
        x2 ^= t3
        x3 ^= t4
        x4 ^= t0
        x1 ^= x0
        x0 ^= x4
        x3 ^= x2
        x2 ^= _MASK64
        # linear diffusion layer
        x0 ^= ((x0 >> 19) | (x0 << 45) & _MASK64) ^ ((x0 >> 28) | (x0 << 36) & _MASK64)
        x1 ^= ((x1 >> 61) | (x1 << 3) & _MASK64) ^ ((x1 >> 39) | (x1 << 25) & _MASK64)
        x2 ^= ((x2 >> 1) | (x2 << 63) & _MASK64) ^ ((x2 >> 6) | (x2 << 58) & _MASK64)
        x3 ^= ((x3 >> 10) | (x3 << 54) & _MASK64) ^ ((x3 >> 17) | (x3 << 47) & _MASK64)
        x4 ^= ((x4 >> 7) | (x4 << 57) & _MASK64) ^ ((x4 >> 41) | (x4 << 23) & _MASK64)
    s[0], s[1], s[2], s[3], s[4] = x0, x1, x2, x3, x4


def ascon_permute(state: AsconState, rounds: int) -> AsconState:
    """The p8/p12 permutation on a 320-bit state of five 64-bit words."""
    if rounds not in (8, 12):
        raise ValueError(f"unsupported round count {rounds}; expected 8 or 12")
    if len(state) != 5:
        raise ValueError(f"state holds five words, got {len(state)}")
    s = [w & _MASK64 for w in state]
    if list(state) != s:
        raise ValueError("state words must be 64-bit")
    _permute(s, rounds)
    return tuple(s)


def state_to_bytes(state: AsconState) -> bytes:
    return b"".join(w.to_bytes(8, "little") for w in state)


def state_from_bytes(data: bytes) -> AsconState:
    if len(data) != 40:
        raise ValueError(f"state is 40 bytes, got {len(data)}")
    return tuple(int.from_bytes(data[i:i + 8], "little") for i in range(0, 40, 8))


def _word(data: bytes) -> int:
    return int.from_bytes(data, "little")


def ascon_hash256(message: bytes) -> bytes:
    """256-bit Ascon-Hash256 digest of an arbitrary byte string."""
    s = [_HASH256_IV, 0, 0, 0, 0]
    _permute(s, 12)

    # absorb: pad with 0x01 then zeros to the 8-byte rate
    padded = message + b"\x01" + bytes(-(len(message) + 1) % _HASH_RATE)
    for i in range(0, len(padded), _HASH_RATE):
        s[0] ^= _word(padded[i:i + _HASH_RATE])
        _permute(s, 12)

    # squeeze four rate blocks
    out = bytearray(s[0].to_bytes(8, "little"))
    for _ in range(3):
        _permute(s, 12)
        out += s[0].to_bytes(8, "little")
    return bytes(out)


def aead128_encrypt(key: bytes, nonce: bytes, associated_data: bytes,
                    plaintext: bytes) -> tuple[bytes, bytes]:
    """Ascon-AEAD128 encryption; returns (ciphertext, 128-bit tag).

    The ciphertext always has the plaintext's length.
    """
    if len(key) != 16:
        raise ValueError(f"key must be 16 bytes, got {len(key)}")
    if len(nonce) != 16:
        raise ValueError(f"nonce must be 16 bytes, got {len(nonce)}")
    k0, k1 = _word(key[:8]), _word(key[8:])

    # initialization
    s = [_AEAD128_IV, k0, k1, _word(nonce[:8]), _word(nonce[8:])]
    _permute(s, 12)
    s[3] ^= k0
    s[4] ^= k1

    # associated data (skipped entirely when empty), then domain separation
    if associated_data:
        padded = associated_data + b"\x01" + bytes(-(len(associated_data) + 1) % _AEAD_RATE)
        for i in range(0, len(padded), _AEAD_RATE):
            s[0] ^= _word(padded[i:i + 8])
            s[1] ^= _word(padded[i + 8:i + 16])
            _permute(s, 8)
    s[4] ^= 1 << 63

    # plaintext: last block's ciphertext is truncated to the message length
    last = len(plaintext) % _AEAD_RATE
    padded = plaintext + b"\x01" + bytes(_AEAD_RATE - last - 1)
    ciphertext = bytearray()
    for i in range(0, len(padded) - _AEAD_RATE, _AEAD_RATE):
        s[0] ^= _word(padded[i:i + 8])
        s[1] ^= _word(padded[i + 8:i + 16])
        ciphertext += s[0].to_bytes(8, "little") + s[1].to_bytes(8, "little")
        _permute(s, 8)
    i = len(padded) - _AEAD_RATE
    s[0] ^= _word(padded[i:i + 8])
    s[1] ^= _word(padded[i + 8:i + 16])
    block = s[0].to_bytes(8, "little") + s[1].to_bytes(8, "little")
    ciphertext += block[:last]

    # finalization
    s[2] ^= k0
    s[3] ^= k1
    _permute(s, 12)
    tag = ((s[3] ^ k0).to_bytes(8, "little") + (s[4] ^ k1).to_bytes(8, "little"))
    return bytes(ciphertext), tag
