"""Known-answer test vectors: parsing and replay.

Two vendored formats live under ``vectors/``:

* LWC files (``LWC_HASH_KAT_256.txt``, ``LWC_AEAD_KAT_128_128.txt``) hold
  the standard known-answer vectors for the Ascon primitives as blocks of
  ``Field = hex`` lines (Count/Msg/MD and Count/Key/Nonce/PT/AD/CT).
* CAVP-style ``.rsp`` files hold DRBG vectors for the SHA-256 and AES-128
  baseline mechanisms (bracketed parameter headers, repeated
  AdditionalInput fields, one block per COUNT).

Every runner replays the vendored vectors against this package's
implementations and reports bit-exact pass/fail per vector.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from importlib import resources
from typing import Iterator, Optional

from . import baselines
from .ascon import aead128_encrypt, ascon_hash256
from .bitstring import BitString
from .framework import DrbgStatus, ScriptedEntropySource

HASH_KAT_FILE = "LWC_HASH_KAT_256.txt"
AEAD_KAT_FILE = "LWC_AEAD_KAT_128_128.txt"
HMAC_DRBG_FILES = ("hmac_drbg_sha256_no_reseed.rsp", "hmac_drbg_sha256_reseed.rsp")
CTR_DRBG_FILES = ("ctr_drbg_aes128_no_df_no_reseed.rsp",)


@dataclass
class VectorResult:
    suite: str
    ident: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteReport:
    results: list[VectorResult] = field(default_factory=list)

    @property
    def passed(self) -> int:
        return sum(r.ok for r in self.results)

    @property
    def failed(self) -> int:
        return len(self.results) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def failures(self) -> list[VectorResult]:
        return [r for r in self.results if not r.ok]


def vector_text(name: str) -> str:
    return (resources.files(__package__) / "vectors" / name).read_text()


def parse_blocks(text: str) -> Iterator[dict[str, list[str]]]:
    """Yield blocks of ``key = value`` lines; repeated keys accumulate.

    Blank lines separate blocks; ``#`` comments and ``[...]`` parameter
    headers are skipped. Values may be empty (zero-length hex fields).
    """
    block: dict[str, list[str]] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            if block:
                yield block
                block = {}
            continue
        if line.startswith("#") or line.startswith("["):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"malformed vector line: {raw!r}")
        block.setdefault(key.strip(), []).append(value.strip())
    if block:
        yield block


def _one(block: dict[str, list[str]], key: str) -> str:
    values = block.get(key, [""])
    if len(values) != 1:
        raise ValueError(f"expected one {key} field, got {len(values)}")
    return values[0]


def run_hash_kats(text: Optional[str] = None) -> list[VectorResult]:
    text = vector_text(HASH_KAT_FILE) if text is None else text
    results = []
    for block in parse_blocks(text):
        count = _one(block, "Count")
        digest = ascon_hash256(bytes.fromhex(_one(block, "Msg")))
        ok = digest.hex() == _one(block, "MD").lower()
        detail = "" if ok else f"got {digest.hex()}"
        results.append(VectorResult("ascon-hash256", f"Count={count}", ok, detail))
    return results


def run_aead_kats(text: Optional[str] = None) -> list[VectorResult]:
    text = vector_text(AEAD_KAT_FILE) if text is None else text
    results = []
    for block in parse_blocks(text):
        count = _one(block, "Count")
        ct, tag = aead128_encrypt(bytes.fromhex(_one(block, "Key")),
                                  bytes.fromhex(_one(block, "Nonce")),
                                  bytes.fromhex(_one(block, "AD")),
                                  bytes.fromhex(_one(block, "PT")))
        got = (ct + tag).hex()
        ok = got == _one(block, "CT").lower()
        detail = "" if ok else f"got {got}"
        results.append(VectorResult("ascon-aead128", f"Count={count}", ok, detail))
    return results


def _maybe_bits(hex_value: str) -> Optional[BitString]:
    return BitString.from_hex(hex_value) if hex_value else None


def _replay_drbg(block: dict[str, list[str]], instantiate, generate, reseed,
                 uses_nonce: bool) -> str:
    """Run one CAVP vector; returns the final returned bits as hex."""
    script = bytes.fromhex(_one(block, "EntropyInput"))
    if uses_nonce:
        script += bytes.fromhex(_one(block, "Nonce"))
    script += bytes.fromhex(_one(block, "EntropyInputReseed"))
    source = ScriptedEntropySource(script)

    state = instantiate(source, _maybe_bits(_one(block, "PersonalizationString")))
    if "EntropyInputReseed" in block:
        state = reseed(state, source, _maybe_bits(_one(block, "AdditionalInputReseed")))

    n_bits = 8 * len(_one(block, "ReturnedBits")) // 2
    bits = None
    for add_hex in block.get("AdditionalInput", ["", ""]):
        status, bits, state = generate(state, n_bits, _maybe_bits(add_hex))
        if status is not DrbgStatus.SUCCESS:
            raise AssertionError(f"generate returned {status}")
    return bits.to_hex()


def run_hmac_drbg_kats() -> list[VectorResult]:
    results = []
    for name in HMAC_DRBG_FILES:
        for block in parse_blocks(vector_text(name)):
            got = _replay_drbg(block, baselines.sha256_hmac_instantiate,
                               baselines.sha256_hmac_generate,
                               baselines.sha256_hmac_reseed, uses_nonce=True)
            expected = _one(block, "ReturnedBits").lower()
            ok = got == expected
            ident = f"{name} COUNT={_one(block, 'COUNT')}"
            results.append(VectorResult("hmac-drbg-sha256", ident, ok,
                                        "" if ok else f"got {got}"))
    return results


def run_ctr_drbg_kats() -> list[VectorResult]:
    results = []
    for name in CTR_DRBG_FILES:
        for block in parse_blocks(vector_text(name)):
            got = _replay_drbg(block, baselines.aes128_ctr_instantiate,
                               baselines.aes128_ctr_generate,
                               baselines.aes128_ctr_reseed, uses_nonce=False)
            expected = _one(block, "ReturnedBits").lower()
            ok = got == expected
            ident = f"{name} COUNT={_one(block, 'COUNT')}"
            results.append(VectorResult("ctr-drbg-aes128", ident, ok,
                                        "" if ok else f"got {got}"))
    return results


def run_suite(suite: str = "all") -> SuiteReport:
    """suite: 'ascon' (primitive KATs), 'drbg' (baseline vectors), or 'all'."""
    if suite not in ("all", "ascon", "drbg"):
        raise ValueError(f"unknown suite {suite!r}; expected all, ascon, or drbg")
    report = SuiteReport()
    if suite in ("all", "ascon"):
        report.results += run_hash_kats()
        report.results += run_aead_kats()
    if suite in ("all", "drbg"):
        report.results += run_hmac_drbg_kats()
        report.results += run_ctr_drbg_kats()
    return report
