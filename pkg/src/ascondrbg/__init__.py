"""Deterministic random bit generators driven by Ascon primitives.

Three DRBG mechanisms (hash-based, HMAC-based, counter-mode) built on
from-scratch Ascon-Hash256 / Ascon-AEAD128, alongside SHA-256 and AES-128
baselines behind the same interface, a known-answer test suite, and a
benchmark CLI.
"""

from .ascon import aead128_encrypt, ascon_hash256, ascon_permute
from .ascon_hmac import HmacParams
from .bitstring import BitString, add_mod_pow2, int_decode, int_encode
from .framework import (
    MAX_BITS_PER_REQUEST,
    RESEED_INTERVAL,
    DrbgError,
    DrbgStatus,
    EntropyError,
    EntropySource,
    GenerateResult,
    OsEntropySource,
    ReseedRequiredError,
    ScriptedEntropySource,
)
from .mechanisms import (
    MECHANISMS,
    Aes128CtrDrbg,
    AsconCtrDrbg,
    AsconHashDrbg,
    AsconHmacDrbg,
    Sha256HashDrbg,
    Sha256HmacDrbg,
    create,
)

__version__ = "0.1.0"

__all__ = [
    "BitString", "add_mod_pow2", "int_encode", "int_decode",
    "ascon_hash256", "aead128_encrypt", "ascon_permute",
    "HmacParams",
    "DrbgStatus", "GenerateResult", "DrbgError", "EntropyError",
    "ReseedRequiredError", "EntropySource", "OsEntropySource",
    "ScriptedEntropySource", "RESEED_INTERVAL", "MAX_BITS_PER_REQUEST",
    "AsconHashDrbg", "AsconHmacDrbg", "AsconCtrDrbg",
    "Sha256HashDrbg", "Sha256HmacDrbg", "Aes128CtrDrbg",
    "MECHANISMS", "create",
]
