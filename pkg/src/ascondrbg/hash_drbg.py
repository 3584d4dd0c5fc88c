"""Hash-based DRBG with a 440-bit seed state.

The core algorithms (derivation function, Hashgen output expansion, and the
generate state transition) are written once over a pluggable 256-bit hash
and bound here to Ascon-Hash256; baselines.py rebinds them to SHA-256.

All V/C arithmetic is mod 2**440. Inputs that get hashed (seed material,
personalization, additional input) must be whole bytes, because the
underlying hash is byte-oriented; outputs may be any bit length.
"""

from __future__ import annotations

from typing import Callable, NamedTuple, Optional

from .ascon import ascon_hash256
from .bitstring import BitString, EMPTY, add_mod_pow2, int_encode
from .framework import (
    DrbgStatus,
    EntropySource,
    GenerateResult,
    as_provided_data,
    check_request,
)

SEEDLEN = 440              # bits of V and C
_OUTLEN = 256              # hash output bits
_MAX_DF_BITS = 255 * _OUTLEN  # the derivation-function counter is one byte

ENTROPY_BITS = 256         # security strength of the hash mechanism
NONCE_BITS = ENTROPY_BITS // 2

HashFn = Callable[[bytes], bytes]


class HashDrbgState(NamedTuple):
    v: BitString
    c: BitString
    reseed_counter: int


def _digest(hash_fn: HashFn, data: BitString) -> BitString:
    return BitString.from_bytes(hash_fn(data.to_bytes()))


# --- core algorithms, generic over the hash ---

def hash_df(hash_fn: HashFn, input_string: BitString,
            output_length: int) -> tuple[DrbgStatus, Optional[BitString]]:
    """Compress/stretch input_string to output_length bits.

    Concatenates digests of (counter || output_length || input_string) with a
    one-byte counter starting at 0x01 and a 32-bit big-endian length field,
    then keeps the leftmost output_length bits.
    """
    if not 0 < output_length <= _MAX_DF_BITS:
        return (DrbgStatus.ERROR_FLAG, None)
    blocks = -(-output_length // _OUTLEN)
    length_field = int_encode(output_length, 32)
    temp = EMPTY
    for counter in range(1, blocks + 1):
        temp = temp + _digest(hash_fn, int_encode(counter, 8) + length_field + input_string)
    return (DrbgStatus.SUCCESS, temp.leftmost(output_length))


def hashgen(hash_fn: HashFn, output_length: int, v: BitString) -> BitString:
    """Output expansion: hash successive increments of V (mod 2**440)."""
    blocks = -(-output_length // _OUTLEN)
    data = v
    w = EMPTY
    for _ in range(blocks):
        w = w + _digest(hash_fn, data)
        data = add_mod_pow2(data, 1, SEEDLEN)
    return w.leftmost(output_length)


def generate(hash_fn: HashFn, state: Optional[HashDrbgState], output_length: int,
             add_input: Optional[BitString] = None) -> GenerateResult:
    """One generate request; returns (status, bits, new state).

    Additional input, when present, is mixed into V before expansion; V is
    then advanced by V + H + C + reseed_counter mod 2**440.
    """
    early = check_request(state, output_length)
    if early is not None:
        return early
    v, c, reseed_counter = state

    add_input = as_provided_data(add_input)
    if add_input is not None:
        w = _digest(hash_fn, int_encode(0x02, 8) + v + add_input)
        v = add_mod_pow2(v, w, SEEDLEN)

    requested = hashgen(hash_fn, output_length, v)

    h = _digest(hash_fn, int_encode(0x03, 8) + v)
    v = add_mod_pow2(v, h, SEEDLEN)
    v = add_mod_pow2(v, c, SEEDLEN)
    v = add_mod_pow2(v, reseed_counter, SEEDLEN)
    new_state = HashDrbgState(v, c, reseed_counter + 1)
    return GenerateResult(DrbgStatus.SUCCESS, requested, new_state)


def _seed_state(hash_fn: HashFn, seed_material: BitString) -> tuple[BitString, BitString]:
    _, v = hash_df(hash_fn, seed_material, SEEDLEN)
    _, c = hash_df(hash_fn, int_encode(0x00, 8) + v, SEEDLEN)
    return v, c


def instantiate(hash_fn: HashFn, entropy: EntropySource,
                personalization: Optional[BitString] = None) -> HashDrbgState:
    seed_material = entropy.get_entropy(ENTROPY_BITS) + entropy.get_entropy(NONCE_BITS)
    if personalization is not None:
        seed_material = seed_material + personalization
    v, c = _seed_state(hash_fn, seed_material)
    return HashDrbgState(v, c, 1)


def reseed(hash_fn: HashFn, state: HashDrbgState, entropy: EntropySource,
           add_input: Optional[BitString] = None) -> HashDrbgState:
    seed_material = int_encode(0x01, 8) + state.v + entropy.get_entropy(ENTROPY_BITS)
    if add_input is not None:
        seed_material = seed_material + add_input
    v, c = _seed_state(hash_fn, seed_material)
    return HashDrbgState(v, c, 1)


# --- Ascon-Hash256 bindings ---

def ascon_hash_df(input_string: BitString,
                  output_length: int) -> tuple[DrbgStatus, Optional[BitString]]:
    return hash_df(ascon_hash256, input_string, output_length)


def ascon_hashgen(output_length: int, v: BitString) -> BitString:
    return hashgen(ascon_hash256, output_length, v)


def hash_generate(state: Optional[HashDrbgState], output_length: int,
                  add_input: Optional[BitString] = None) -> GenerateResult:
    return generate(ascon_hash256, state, output_length, add_input)


def hash_instantiate(entropy: EntropySource,
                     personalization: Optional[BitString] = None) -> HashDrbgState:
    return instantiate(ascon_hash256, entropy, personalization)


def hash_reseed(state: HashDrbgState, entropy: EntropySource,
                add_input: Optional[BitString] = None) -> HashDrbgState:
    return reseed(ascon_hash256, state, entropy, add_input)
