"""Stateful DRBG instances behind one uniform interface.

Each class wraps a mechanism's pure instantiate/reseed/generate functions
and an entropy source into a small state machine, so the CLI and the
benchmark driver can treat all six mechanisms interchangeably. Instances
require exclusive access per call (no internal locking); they may be moved
between threads but never shared without external mutual exclusion.

`state_bytes()` reports the analytic serialized working-state size (the
state words plus an 8-byte request counter), computed rather than measured.
"""

from __future__ import annotations

from typing import Optional

from . import baselines, ctr_drbg, hash_drbg, hmac_drbg
from .bitstring import BitString
from .framework import (
    DrbgError,
    DrbgStatus,
    EntropySource,
    ReseedRequiredError,
)

_COUNTER_BYTES = 8


class DrbgMechanism:
    name = ""
    primitive = ""

    def __init__(self, entropy: EntropySource,
                 personalization: Optional[BitString] = None):
        self._entropy = entropy
        self._state = self._instantiate(entropy, personalization)

    def generate(self, n_bits: int, add_input: Optional[BitString] = None) -> BitString:
        status, bits, new_state = self._generate(self._state, n_bits, add_input)
        if status is DrbgStatus.RESEED_REQUIRED:
            raise ReseedRequiredError(f"{self.name}: reseed interval exceeded")
        if status is not DrbgStatus.SUCCESS:
            raise DrbgError(f"{self.name}: generate failed for {n_bits}-bit request")
        self._state = new_state
        return bits

    def reseed(self, add_input: Optional[BitString] = None) -> None:
        self._state = self._reseed(self._state, self._entropy, add_input)

    @property
    def state(self):
        return self._state

    def state_bytes(self) -> int:
        raise NotImplementedError

    # bound by subclasses
    _instantiate = None
    _generate = None
    _reseed = None


class _HashStateBytes:
    def state_bytes(self) -> int:
        s = self._state
        return len(s.v) // 8 + len(s.c) // 8 + _COUNTER_BYTES


class _HmacStateBytes:
    def state_bytes(self) -> int:
        s = self._state
        return len(s.k) // 8 + len(s.v) // 8 + _COUNTER_BYTES


class AsconHashDrbg(_HashStateBytes, DrbgMechanism):
    name = "ascon-hash"
    primitive = "Ascon-Hash256"
    _instantiate = staticmethod(hash_drbg.hash_instantiate)
    _generate = staticmethod(hash_drbg.hash_generate)
    _reseed = staticmethod(hash_drbg.hash_reseed)


class Sha256HashDrbg(_HashStateBytes, DrbgMechanism):
    name = "sha256-hash"
    primitive = "SHA-256"
    _instantiate = staticmethod(baselines.sha256_hash_instantiate)
    _generate = staticmethod(baselines.sha256_hash_generate)
    _reseed = staticmethod(baselines.sha256_hash_reseed)


class AsconHmacDrbg(_HmacStateBytes, DrbgMechanism):
    name = "ascon-hmac"
    primitive = "Ascon-Hash256"
    _instantiate = staticmethod(hmac_drbg.hmac_instantiate)
    _generate = staticmethod(hmac_drbg.hmac_generate)
    _reseed = staticmethod(hmac_drbg.hmac_reseed)


class Sha256HmacDrbg(_HmacStateBytes, DrbgMechanism):
    name = "sha256-hmac"
    primitive = "SHA-256"
    _instantiate = staticmethod(baselines.sha256_hmac_instantiate)
    _generate = staticmethod(baselines.sha256_hmac_generate)
    _reseed = staticmethod(baselines.sha256_hmac_reseed)


class AsconCtrDrbg(DrbgMechanism):
    name = "ascon-ctr"
    primitive = "Ascon-AEAD128"
    _generate = staticmethod(ctr_drbg.ctr_generate)
    _reseed = staticmethod(ctr_drbg.ctr_reseed)

    def __init__(self, entropy: EntropySource,
                 personalization: Optional[BitString] = None,
                 a: bytes = b"", ctr_len: int = ctr_drbg.BLOCKLEN):
        self._entropy = entropy
        self._state = ctr_drbg.ctr_instantiate(entropy, personalization, a, ctr_len)

    def state_bytes(self) -> int:
        s = self._state
        return (len(s.k) + len(s.v) + len(s.n)) // 8 + len(s.a) + _COUNTER_BYTES


class Aes128CtrDrbg(DrbgMechanism):
    name = "aes128-ctr"
    primitive = "AES-128"
    _generate = staticmethod(baselines.aes128_ctr_generate)
    _reseed = staticmethod(baselines.aes128_ctr_reseed)

    def __init__(self, entropy: EntropySource,
                 personalization: Optional[BitString] = None,
                 ctr_len: int = ctr_drbg.BLOCKLEN):
        self._entropy = entropy
        self._state = baselines.aes128_ctr_instantiate(entropy, personalization, ctr_len)

    def state_bytes(self) -> int:
        s = self._state
        return (len(s.k) + len(s.v)) // 8 + _COUNTER_BYTES


MECHANISMS: dict[str, type[DrbgMechanism]] = {
    cls.name: cls
    for cls in (AsconHashDrbg, AsconHmacDrbg, AsconCtrDrbg,
                Sha256HashDrbg, Sha256HmacDrbg, Aes128CtrDrbg)
}

# Ascon variant -> baseline with the same mechanism kind
BASELINE_OF = {
    "ascon-hash": "sha256-hash",
    "ascon-hmac": "sha256-hmac",
    "ascon-ctr": "aes128-ctr",
}


def create(name: str, entropy: EntropySource, **kwargs) -> DrbgMechanism:
    try:
        cls = MECHANISMS[name]
    except KeyError:
        known = ", ".join(sorted(MECHANISMS))
        raise ValueError(f"unknown mechanism {name!r}; known: {known}") from None
    return cls(entropy, **kwargs)
