"""HMAC-based DRBG with 256-bit K and V.

The update/generate algorithms are generic over a keyed MAC and bound here
to the Ascon HMAC; baselines.py rebinds them to HMAC-SHA256. Provided data
and additional input must be whole bytes (they are fed to the byte-oriented
MAC); absent and empty inputs are equivalent.
"""

from __future__ import annotations

from typing import Callable, NamedTuple, Optional

from . import ascon_hmac
from .bitstring import BitString, EMPTY, int_encode
from .framework import (
    DrbgStatus,
    EntropySource,
    GenerateResult,
    as_provided_data,
    check_request,
)

_OUTLEN = 256  # MAC output bits

ENTROPY_BITS = 256
NONCE_BITS = ENTROPY_BITS // 2

MacFn = Callable[[bytes, bytes], bytes]


class HmacDrbgState(NamedTuple):
    k: BitString
    v: BitString
    reseed_counter: int


def _mac(mac_fn: MacFn, key: BitString, message: BitString) -> BitString:
    return BitString.from_bytes(mac_fn(key.to_bytes(), message.to_bytes()))


# --- core algorithms, generic over the MAC ---

def update(mac_fn: MacFn, provided_data: Optional[BitString], k: BitString,
           v: BitString) -> tuple[BitString, BitString]:
    """Absorb provided_data into (K, V); one pass when it is absent, two when
    present, separated by 0x00/0x01 bytes."""
    provided = as_provided_data(provided_data)
    suffix = EMPTY if provided is None else provided
    k = _mac(mac_fn, k, v + int_encode(0x00, 8) + suffix)
    v = _mac(mac_fn, k, v)
    if provided is None:
        return k, v
    k = _mac(mac_fn, k, v + int_encode(0x01, 8) + provided)
    v = _mac(mac_fn, k, v)
    return k, v


def generate(mac_fn: MacFn, state: Optional[HmacDrbgState], output_length: int,
             add_input: Optional[BitString] = None) -> GenerateResult:
    """One generate request: chain V through the MAC until enough bits
    accumulate, then run the final update (always, even without add_input)."""
    early = check_request(state, output_length)
    if early is not None:
        return early
    k, v, reseed_counter = state

    add_input = as_provided_data(add_input)
    if add_input is not None:
        k, v = update(mac_fn, add_input, k, v)

    temp = EMPTY
    while len(temp) < output_length:
        v = _mac(mac_fn, k, v)
        temp = temp + v
    requested = temp.leftmost(output_length)

    k, v = update(mac_fn, add_input, k, v)
    new_state = HmacDrbgState(k, v, reseed_counter + 1)
    return GenerateResult(DrbgStatus.SUCCESS, requested, new_state)


def instantiate(mac_fn: MacFn, entropy: EntropySource,
                personalization: Optional[BitString] = None) -> HmacDrbgState:
    seed_material = entropy.get_entropy(ENTROPY_BITS) + entropy.get_entropy(NONCE_BITS)
    if personalization is not None:
        seed_material = seed_material + personalization
    k = BitString.from_bytes(b"\x00" * 32)
    v = BitString.from_bytes(b"\x01" * 32)
    k, v = update(mac_fn, seed_material, k, v)
    return HmacDrbgState(k, v, 1)


def reseed(mac_fn: MacFn, state: HmacDrbgState, entropy: EntropySource,
           add_input: Optional[BitString] = None) -> HmacDrbgState:
    seed_material = entropy.get_entropy(ENTROPY_BITS)
    if add_input is not None:
        seed_material = seed_material + add_input
    k, v = update(mac_fn, seed_material, state.k, state.v)
    return HmacDrbgState(k, v, 1)


# --- Ascon HMAC bindings ---

def hmac_update(provided_data: Optional[BitString], k: BitString,
                v: BitString) -> tuple[BitString, BitString]:
    return update(ascon_hmac.hmac, provided_data, k, v)


def hmac_generate(state: Optional[HmacDrbgState], output_length: int,
                  add_input: Optional[BitString] = None) -> GenerateResult:
    return generate(ascon_hmac.hmac, state, output_length, add_input)


def hmac_instantiate(entropy: EntropySource,
                     personalization: Optional[BitString] = None) -> HmacDrbgState:
    return instantiate(ascon_hmac.hmac, entropy, personalization)


def hmac_reseed(state: HmacDrbgState, entropy: EntropySource,
                add_input: Optional[BitString] = None) -> HmacDrbgState:
    return reseed(ascon_hmac.hmac, state, entropy, add_input)
