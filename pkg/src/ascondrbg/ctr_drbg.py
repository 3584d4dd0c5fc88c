"""Counter-mode DRBG (no derivation function) with 128-bit K and V.

The keystream/update/generate algorithms are generic over a single-block
encryptor E(K, V) -> 128 bits and bound here to Ascon-AEAD128 used
ciphertext-only: the working state carries a nonce N (drawn once at
instantiate, never rotated) and caller-set associated data A, the tag is
discarded, and every keystream block is one AEAD encryption of V under the
same N. That nonce reuse is inherent to this construction; treat the AEAD
strictly as a keystream primitive here. baselines.py rebinds the same
algorithms to AES-128 ECB.

ctr_len picks how many low-order bits of V the per-block increment touches.
"""

from __future__ import annotations

from typing import Callable, NamedTuple, Optional

from .ascon import aead128_encrypt
from .bitstring import BitString, EMPTY, add_mod_pow2
from .framework import (
    DrbgStatus,
    EntropySource,
    GenerateResult,
    as_provided_data,
    check_request,
)

BLOCKLEN = 128            # bits of V and of each keystream block
KEYLEN = 128
SEEDLEN = KEYLEN + BLOCKLEN

BlockFn = Callable[[BitString, BitString], BitString]


class CtrDrbgState(NamedTuple):
    k: BitString
    v: BitString
    n: BitString          # AEAD nonce, fixed for the instance lifetime
    a: bytes              # AEAD associated data, may be empty
    ctr_len: int
    reseed_counter: int


def ascon_block_encrypt(k: BitString, n: BitString, a: bytes, v: BitString) -> BitString:
    """The 128-bit ciphertext of AEAD-encrypting block V; tag discarded."""
    if len(v) != BLOCKLEN:
        raise ValueError(f"block must be {BLOCKLEN} bits, got {len(v)}")
    ciphertext, _tag = aead128_encrypt(k.to_bytes(), n.to_bytes(), a, v.to_bytes())
    return BitString.from_bytes(ciphertext)


def _check_ctr_len(ctr_len: int) -> None:
    if not 4 <= ctr_len <= BLOCKLEN:
        raise ValueError(f"ctr_len must be in [4, {BLOCKLEN}], got {ctr_len}")


def increment(v: BitString, ctr_len: int) -> BitString:
    """Advance V by one: only the low ctr_len bits count up and wrap."""
    if ctr_len < BLOCKLEN:
        inc = add_mod_pow2(v.rightmost(ctr_len), 1, ctr_len)
        return v.leftmost(BLOCKLEN - ctr_len) + inc
    return add_mod_pow2(v, 1, BLOCKLEN)


def _keystream(block_fn: BlockFn, k: BitString, v: BitString, n_bits: int,
               ctr_len: int) -> tuple[BitString, BitString]:
    """Generate at least n_bits of keystream; returns (bits, final V)."""
    temp = EMPTY
    while len(temp) < n_bits:
        v = increment(v, ctr_len)
        temp = temp + block_fn(k, v)
    return temp, v


# --- core algorithms, generic over the block encryptor ---

def update(block_fn: BlockFn, provided_data: BitString, k: BitString, v: BitString,
           ctr_len: int = BLOCKLEN) -> tuple[BitString, BitString]:
    """Two keystream blocks XOR provided_data become the new (K, V)."""
    if len(provided_data) != SEEDLEN:
        raise ValueError(f"provided data must be {SEEDLEN} bits, got {len(provided_data)}")
    _check_ctr_len(ctr_len)
    temp, v = _keystream(block_fn, k, v, SEEDLEN, ctr_len)
    temp = temp.leftmost(SEEDLEN) ^ provided_data
    return temp.leftmost(KEYLEN), temp.rightmost(BLOCKLEN)


def _pad_to_seedlen(s: BitString) -> BitString:
    if len(s) > SEEDLEN:
        raise ValueError(f"input longer than {SEEDLEN} bits: {len(s)}")
    return s + BitString.zeros(SEEDLEN - len(s))


def generate(block_fn: BlockFn, state, output_length: int,
             add_input: Optional[BitString] = None) -> GenerateResult:
    """One generate request; the post-update uses the padded additional input
    when one was given and all zeros otherwise."""
    if add_input is not None and len(add_input) > SEEDLEN:
        raise ValueError(f"additional input longer than {SEEDLEN} bits: {len(add_input)}")
    early = check_request(state, output_length)
    if early is not None:
        return early
    k, v, ctr_len = state.k, state.v, state.ctr_len

    provided = as_provided_data(add_input)
    if provided is not None:
        provided = _pad_to_seedlen(provided)
        k, v = update(block_fn, provided, k, v, ctr_len)
    else:
        provided = BitString.zeros(SEEDLEN)

    temp, v = _keystream(block_fn, k, v, output_length, ctr_len)
    requested = temp.leftmost(output_length)

    k, v = update(block_fn, provided, k, v, ctr_len)
    new_state = state._replace(k=k, v=v, reseed_counter=state.reseed_counter + 1)
    return GenerateResult(DrbgStatus.SUCCESS, requested, new_state)


def seed_material(entropy_input: BitString, extra: Optional[BitString]) -> BitString:
    """entropy XOR zero-padded personalization/additional input."""
    if extra is None:
        return entropy_input
    return entropy_input ^ _pad_to_seedlen(extra)


# --- Ascon-AEAD128 bindings ---

def _ascon_block_fn(n: BitString, a: bytes) -> BlockFn:
    return lambda k, v: ascon_block_encrypt(k, n, a, v)


def ctr_update(provided_data: BitString, k: BitString, v: BitString, n: BitString,
               a: bytes, ctr_len: int = BLOCKLEN) -> tuple[BitString, BitString]:
    return update(_ascon_block_fn(n, a), provided_data, k, v, ctr_len)


def ctr_generate(state: Optional[CtrDrbgState], output_length: int,
                 add_input: Optional[BitString] = None) -> GenerateResult:
    if state is None:
        return GenerateResult(DrbgStatus.ERROR_FLAG, None, None)
    return generate(_ascon_block_fn(state.n, state.a), state, output_length, add_input)


def ctr_instantiate(entropy: EntropySource, personalization: Optional[BitString] = None,
                    a: bytes = b"", ctr_len: int = BLOCKLEN) -> CtrDrbgState:
    _check_ctr_len(ctr_len)
    material = seed_material(entropy.get_entropy(SEEDLEN), personalization)
    n = entropy.get_entropy(BLOCKLEN)
    k, v = update(_ascon_block_fn(n, a), material,
                  BitString.zeros(KEYLEN), BitString.zeros(BLOCKLEN), ctr_len)
    return CtrDrbgState(k, v, n, a, ctr_len, 1)


def ctr_reseed(state: CtrDrbgState, entropy: EntropySource,
               add_input: Optional[BitString] = None) -> CtrDrbgState:
    material = seed_material(entropy.get_entropy(SEEDLEN), add_input)
    k, v = update(_ascon_block_fn(state.n, state.a), material,
                  state.k, state.v, state.ctr_len)
    return state._replace(k=k, v=v, reseed_counter=1)
