"""Reference DRBG mechanisms for benchmark parity: SHA-256 hash DRBG,
HMAC-SHA256 DRBG, and AES-128 counter-mode DRBG (no derivation function).

These bind the exact algorithm cores from hash_drbg/hmac_drbg/ctr_drbg to
stock primitives, so the published SP 800-90A test vectors double as a
check of the shared DRBG plumbing. The primitives themselves come from
hashlib and the cryptography package; reimplementing SHA-256 or AES is a
non-goal.

The AES variant's working state has no nonce or associated data; its
analytic footprint is two 128-bit words plus the request counter.
"""

from __future__ import annotations

import hashlib
import hmac as _hmac
from typing import NamedTuple, Optional

from cryptography.hazmat.primitives.ciphers import Cipher, algorithms, modes

from . import ctr_drbg, hash_drbg, hmac_drbg
from .bitstring import BitString
from .framework import DrbgStatus, EntropySource, GenerateResult


def sha256(data: bytes) -> bytes:
    return hashlib.sha256(data).digest()


def hmac_sha256(key: bytes, message: bytes) -> bytes:
    return _hmac.new(key, message, hashlib.sha256).digest()


def aes128_encrypt_block(key: BitString, block: BitString) -> BitString:
    encryptor = Cipher(algorithms.AES(key.to_bytes()), modes.ECB()).encryptor()
    return BitString.from_bytes(encryptor.update(block.to_bytes()) + encryptor.finalize())


class AesCtrDrbgState(NamedTuple):
    k: BitString
    v: BitString
    ctr_len: int
    reseed_counter: int


# --- SHA-256 hash DRBG ---

def sha256_hash_instantiate(entropy: EntropySource,
                            personalization: Optional[BitString] = None) -> hash_drbg.HashDrbgState:
    return hash_drbg.instantiate(sha256, entropy, personalization)


def sha256_hash_reseed(state: hash_drbg.HashDrbgState, entropy: EntropySource,
                       add_input: Optional[BitString] = None) -> hash_drbg.HashDrbgState:
    return hash_drbg.reseed(sha256, state, entropy, add_input)


def sha256_hash_generate(state: Optional[hash_drbg.HashDrbgState], output_length: int,
                         add_input: Optional[BitString] = None) -> GenerateResult:
    return hash_drbg.generate(sha256, state, output_length, add_input)


# --- HMAC-SHA256 DRBG ---

def sha256_hmac_instantiate(entropy: EntropySource,
                            personalization: Optional[BitString] = None) -> hmac_drbg.HmacDrbgState:
    return hmac_drbg.instantiate(hmac_sha256, entropy, personalization)


def sha256_hmac_reseed(state: hmac_drbg.HmacDrbgState, entropy: EntropySource,
                       add_input: Optional[BitString] = None) -> hmac_drbg.HmacDrbgState:
    return hmac_drbg.reseed(hmac_sha256, state, entropy, add_input)


def sha256_hmac_generate(state: Optional[hmac_drbg.HmacDrbgState], output_length: int,
                         add_input: Optional[BitString] = None) -> GenerateResult:
    return hmac_drbg.generate(hmac_sha256, state, output_length, add_input)


# --- AES-128 CTR DRBG (no df) ---

def aes128_ctr_instantiate(entropy: EntropySource,
                           personalization: Optional[BitString] = None,
                           ctr_len: int = ctr_drbg.BLOCKLEN) -> AesCtrDrbgState:
    material = ctr_drbg.seed_material(entropy.get_entropy(ctr_drbg.SEEDLEN), personalization)
    k, v = ctr_drbg.update(aes128_encrypt_block, material,
                           BitString.zeros(ctr_drbg.KEYLEN),
                           BitString.zeros(ctr_drbg.BLOCKLEN), ctr_len)
    return AesCtrDrbgState(k, v, ctr_len, 1)


def aes128_ctr_reseed(state: AesCtrDrbgState, entropy: EntropySource,
                      add_input: Optional[BitString] = None) -> AesCtrDrbgState:
    material = ctr_drbg.seed_material(entropy.get_entropy(ctr_drbg.SEEDLEN), add_input)
    k, v = ctr_drbg.update(aes128_encrypt_block, material, state.k, state.v, state.ctr_len)
    return state._replace(k=k, v=v, reseed_counter=1)


def aes128_ctr_generate(state: Optional[AesCtrDrbgState], output_length: int,
                        add_input: Optional[BitString] = None) -> GenerateResult:
    if state is None:
        return GenerateResult(DrbgStatus.ERROR_FLAG, None, None)
    return ctr_drbg.generate(aes128_encrypt_block, state, output_length, add_input)
