"""Throughput comparison: direct enumeration vs the permutation-filter baseline.

Both methods stream their output into :func:`checksum_fold`, so the measured
time always includes producing and consuming every involution, and equal
checksums mean both methods produced the same sequence.
"""

import math
import time
from dataclasses import dataclass
from statistics import median
from typing import Iterable, Sequence

from fpfi.core import count, iter_buffers
from fpfi.oracle import DEFAULT_MAX_GROUND_SIZE, OracleSizeError, naive_enumerate

__all__ = ["BenchReport", "BenchRow", "checksum_fold", "run_bench"]

_MASK = (1 << 64) - 1
_MULT = 0x100000001B3


def checksum_fold(buffers: Iterable[Sequence[int]]) -> tuple[int, int]:
    """Consume a stream of slot arrays; return (visit count, 64-bit checksum).

    Folds the first and last slot of every array, so the producer cannot
    skip work, and two streams agree iff they emit the same arrays in the
    same order (up to hash collisions).
    """
    acc = 0
    visits = 0
    for buf in buffers:
        if buf:
            acc = (acc * _MULT + buf[0] + (buf[-1] << 32)) & _MASK
        else:
            acc = (acc * _MULT + 1) & _MASK
        visits += 1
    return visits, acc


@dataclass(frozen=True)
class BenchRow:
    """One measured method: median wall time over the repetitions."""

    method: str
    size: int
    outputs: int
    candidates: int
    checksum: int
    seconds: float

    @property
    def rate(self) -> float:
        return self.outputs / self.seconds if self.seconds > 0 else float("inf")


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]
    speedup: float | None


def _time_direct(n: int) -> tuple[float, int, int]:
    t0 = time.perf_counter()
    visits, checksum = checksum_fold(iter_buffers(n))
    return time.perf_counter() - t0, visits, checksum


def _time_oracle(n: int, max_ground_size: int) -> tuple[float, int, int]:
    t0 = time.perf_counter()
    survivors = naive_enumerate(n, max_ground_size=max_ground_size)
    visits, checksum = checksum_fold(inv.slots for inv in survivors)
    return time.perf_counter() - t0, visits, checksum


def run_bench(
    size: int,
    compare_oracle: bool = False,
    reps: int = 3,
    max_ground_size: int = DEFAULT_MAX_GROUND_SIZE,
) -> BenchReport:
    """Measure enumeration throughput at ground size ``size`` (which is 2n).

    Runs one discarded warm-up repetition plus ``reps`` timed ones per
    method and reports the median.  With ``compare_oracle`` the
    permutation-filter baseline is measured as well (subject to its
    feasibility guard) and the speedup ratio oracle/direct is included.
    """
    if size < 0 or size % 2:
        raise ValueError(f"ground size must be even and non-negative, got {size}")
    if reps < 1:
        raise ValueError(f"need at least one timed repetition, got {reps}")
    if compare_oracle and size > max_ground_size:
        raise OracleSizeError(
            f"ground size {size} exceeds the brute-force guard ({max_ground_size})"
        )
    n = size // 2

    direct_runs = [_time_direct(n) for _ in range(reps + 1)]
    direct_seconds = median(seconds for seconds, _, _ in direct_runs[1:])
    _, visits, checksum = direct_runs[-1]
    assert visits == count(n)
    rows = [
        BenchRow(
            method="direct",
            size=size,
            outputs=visits,
            candidates=visits,
            checksum=checksum,
            seconds=direct_seconds,
        )
    ]

    speedup = None
    if compare_oracle:
        oracle_runs = [_time_oracle(n, max_ground_size) for _ in range(reps + 1)]
        oracle_seconds = median(seconds for seconds, _, _ in oracle_runs[1:])
        _, oracle_visits, oracle_checksum = oracle_runs[-1]
        rows.append(
            BenchRow(
                method="oracle",
                size=size,
                outputs=oracle_visits,
                candidates=math.factorial(size),
                checksum=oracle_checksum,
                seconds=oracle_seconds,
            )
        )
        speedup = oracle_seconds / direct_seconds if direct_seconds > 0 else float("inf")

    return BenchReport(rows=tuple(rows), speedup=speedup)
