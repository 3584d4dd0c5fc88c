"""Benchmark driver: timed generate loops over any set of mechanisms.

The default protocol runs 10000 requests of 256 bits per mechanism with a
1000-call untimed warm-up, timing each generate call with a monotonic clock
and reporting the wall-clock mean. Memory is reported analytically (the
serialized working-state size from state_bytes()), not probed from the
runtime heap: heap-differencing numbers are runtime-specific and do not
travel across platforms.

Previously reported Raspberry Pi 4 measurements of the same six
constructions (a Java, BouncyCastle-based implementation) ship as reference
context only; this harness makes no attempt to replicate that environment.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import mechanisms
from .framework import EntropySource, OsEntropySource

DEFAULT_ITERATIONS = 10000
DEFAULT_BITS_PER_CALL = 256
WARMUP_CALLS = 1000

CSV_COLUMNS = ("mechanism", "primitive", "state_bytes", "mean_ms",
               "iterations", "bits_per_call")

# (mechanism, primitive, utilized memory in bytes, computation time in ms)
# as previously reported for a Raspberry Pi 4 / Java runtime.
REFERENCE_MEASUREMENTS = (
    ("sha256-hash", "SHA-256", 5216, 0.100),
    ("ascon-hash", "Ascon-Hash256", 2608, 0.103),
    ("sha256-hmac", "SHA-256", 10424, 0.133),
    ("ascon-hmac", "Ascon-Hash256", 5208, 0.154),
    ("aes128-ctr", "AES-128", 8072, 0.114),
    ("ascon-ctr", "Ascon-AEAD128", 5208, 0.109),
)


@dataclass(frozen=True)
class BenchRow:
    mechanism: str
    primitive: str
    state_bytes: Optional[int]
    mean_ms: Optional[float]
    iterations: int
    bits_per_call: int
    error: Optional[str] = None


@dataclass
class BenchReport:
    rows: list[BenchRow]
    iterations: int
    bits_per_call: int
    warmup: int


def _fmt_ms(value: Optional[float]) -> str:
    return "" if value is None else f"{value:.6f}"


def _fmt_bytes(value: Optional[int]) -> str:
    return "" if value is None else str(value)


def run_bench(names: Optional[Sequence[str]] = None,
              iterations: int = DEFAULT_ITERATIONS,
              bits_per_call: int = DEFAULT_BITS_PER_CALL,
              warmup: int = WARMUP_CALLS,
              entropy_factory: Callable[[], EntropySource] = OsEntropySource) -> BenchReport:
    """Time `iterations` generate calls of `bits_per_call` bits per mechanism.

    A mechanism that fails to instantiate yields a row with its error noted;
    the run continues with the remaining mechanisms.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    if names is None:
        names = list(mechanisms.MECHANISMS)
    rows = []
    for name in names:
        cls = mechanisms.MECHANISMS.get(name)
        if cls is None:
            raise ValueError(f"unknown mechanism {name!r}")
        try:
            mech = cls(entropy_factory())
        except Exception as exc:
            rows.append(BenchRow(name, cls.primitive, None, None,
                                 iterations, bits_per_call, error=str(exc)))
            continue
        for _ in range(warmup):
            mech.generate(bits_per_call)
        elapsed = 0.0
        for _ in range(iterations):
            start = time.perf_counter()
            mech.generate(bits_per_call)
            elapsed += time.perf_counter() - start
        rows.append(BenchRow(name, mech.primitive, mech.state_bytes(),
                             elapsed / iterations * 1000.0, iterations, bits_per_call))
    return BenchReport(rows, iterations, bits_per_call, warmup)


def to_csv(report: BenchReport) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in report.rows:
        writer.writerow([r.mechanism, r.primitive, _fmt_bytes(r.state_bytes),
                         _fmt_ms(r.mean_ms), r.iterations, r.bits_per_call])
    return out.getvalue()


def to_markdown(report: BenchReport) -> str:
    lines = ["| " + " | ".join(CSV_COLUMNS) + " |",
             "|" + "|".join(" --- " for _ in CSV_COLUMNS) + "|"]
    for r in report.rows:
        cells = [r.mechanism, r.primitive, _fmt_bytes(r.state_bytes),
                 _fmt_ms(r.mean_ms), str(r.iterations), str(r.bits_per_call)]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def format_report(report: BenchReport, form: str) -> str:
    if form == "csv":
        return to_csv(report)
    if form == "markdown":
        return to_markdown(report)
    raise ValueError(f"unknown format {form!r}; expected csv or markdown")


def reference_context() -> str:
    """The previously reported embedded-platform figures, for side-by-side
    reading; not comparable to timings from this harness."""
    lines = ["Reference measurements (Raspberry Pi 4, Java runtime; context only):",
             "  mechanism    primitive       memory_bytes  time_ms"]
    for mech, prim, mem, ms in REFERENCE_MEASUREMENTS:
        lines.append(f"  {mech:<12} {prim:<15} {mem:>12}  {ms:.3f}")
    return "\n".join(lines) + "\n"


def render_figure(report: BenchReport, path: str) -> None:
    """Bar charts of state footprint and mean generate time, written to path."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    rows = [r for r in report.rows if r.error is None]
    labels = [r.mechanism for r in rows]
    fig, (ax_mem, ax_time) = plt.subplots(1, 2, figsize=(10, 4))

    ax_mem.bar(labels, [r.state_bytes for r in rows], color="#4878a8")
    ax_mem.set_ylabel("working state (bytes)")
    ax_mem.set_title("Analytic state footprint")
    ax_mem.tick_params(axis="x", rotation=45)

    ax_time.bar(labels, [r.mean_ms for r in rows], color="#a85448")
    ax_time.set_ylabel("mean generate time (ms)")
    ax_time.set_title(f"{report.iterations} x {report.bits_per_call} bits")
    ax_time.tick_params(axis="x", rotation=45)

    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
