"""Shared mechanism contract for all DRBGs in this package.

Status codes, the generate-result triple, request limits, and the pluggable
entropy source. Every mechanism (Ascon-driven or baseline) exposes the same
instantiate/reseed/generate shapes over these types, so the benchmark driver
and the CLI treat them interchangeably.

A DRBG working state is a plain immutable value; the stateful wrappers in
mechanisms.py require exclusive access per call and do no internal locking.
"""

from __future__ import annotations

import enum
import os
from typing import NamedTuple, Optional

from .bitstring import BitString

RESEED_INTERVAL = 2 ** 48       # requests before a reseed is forced
MAX_BITS_PER_REQUEST = 2 ** 19  # per generate call


class DrbgStatus(enum.Enum):
    SUCCESS = "success"
    ERROR_FLAG = "error"
    RESEED_REQUIRED = "reseed_required"


class GenerateResult(NamedTuple):
    """(status, bits, state) triple returned by every generate algorithm.

    bits is None unless status is SUCCESS; state carries the new working
    state on SUCCESS, the untouched input state on RESEED_REQUIRED, and
    None on ERROR_FLAG.
    """
    status: DrbgStatus
    bits: Optional[BitString]
    state: object


class DrbgError(Exception):
    pass


class EntropyError(DrbgError):
    """Entropy source failed or a scripted source ran dry."""


class ReseedRequiredError(DrbgError):
    """Raised by stateful wrappers when the reseed interval is exceeded."""


class EntropySource:
    """Supplier of seed randomness; lengths are whole bytes only."""

    def get_entropy(self, n_bits: int) -> BitString:
        if n_bits <= 0 or n_bits % 8:
            raise ValueError(f"entropy request must be a positive multiple of 8 bits, got {n_bits}")
        return self._draw(n_bits // 8)

    def _draw(self, n_bytes: int) -> BitString:
        raise NotImplementedError


class OsEntropySource(EntropySource):
    """Operating-system randomness via os.urandom."""

    def _draw(self, n_bytes: int) -> BitString:
        try:
            return BitString.from_bytes(os.urandom(n_bytes))
        except OSError as exc:
            raise EntropyError(f"os.urandom failed: {exc}") from exc


class ScriptedEntropySource(EntropySource):
    """Replays a fixed byte script; deterministic tests and KAT replay.

    Bytes are consumed in order and the source errs once exhausted.
    """

    def __init__(self, script: bytes):
        self._script = bytes(script)
        self._pos = 0

    @property
    def remaining(self) -> int:
        return len(self._script) - self._pos

    def _draw(self, n_bytes: int) -> BitString:
        if self.remaining < n_bytes:
            raise EntropyError(f"entropy script exhausted: need {n_bytes} bytes, "
                               f"have {self.remaining}")
        chunk = self._script[self._pos:self._pos + n_bytes]
        self._pos += n_bytes
        return BitString.from_bytes(chunk)


def check_request(state: object, output_length: int) -> Optional[GenerateResult]:
    """Common generate-entry checks; returns an error/reseed result or None.

    Enforced before any state mutation: instantiated state, positive request
    within MAX_BITS_PER_REQUEST, and the reseed interval on state.reseed_counter.
    """
    if state is None:
        return GenerateResult(DrbgStatus.ERROR_FLAG, None, None)
    if output_length <= 0 or output_length > MAX_BITS_PER_REQUEST:
        return GenerateResult(DrbgStatus.ERROR_FLAG, None, None)
    if state.reseed_counter > RESEED_INTERVAL:
        return GenerateResult(DrbgStatus.RESEED_REQUIRED, None, state)
    return None


def as_provided_data(add_input: Optional[BitString]) -> Optional[BitString]:
    """Normalize additional input: an empty string counts as absent."""
    if add_input is None or len(add_input) == 0:
        return None
    return add_input
