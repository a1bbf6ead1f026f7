"""Fixed-point-free involutions: enumeration, canonical encoding, ranking.

The core operations live in :mod:`fpfi.core`; :mod:`fpfi.oracle` holds the
deliberately naive brute-force cross-check, :mod:`fpfi.formats` the
line-oriented serializations, :mod:`fpfi.bench` the timing harness, and
:mod:`fpfi.cli` the ``fpfi`` command.
"""

from fpfi.core import (
    Involution,
    ValidationError,
    ValidationReport,
    choices_to_involution,
    choices_to_rank,
    conjugate,
    count,
    extend,
    involution_to_choices,
    iter_buffers,
    iter_involutions,
    rank_of,
    rank_to_choices,
    shift_bijection,
    shift_bijection_inv,
    unrank,
    validate_slots,
)
from fpfi.oracle import OracleSizeError, is_fpfi, naive_enumerate

__version__ = "0.1.0"

__all__ = [
    "Involution",
    "OracleSizeError",
    "ValidationError",
    "ValidationReport",
    "choices_to_involution",
    "choices_to_rank",
    "conjugate",
    "count",
    "extend",
    "involution_to_choices",
    "is_fpfi",
    "iter_buffers",
    "iter_involutions",
    "naive_enumerate",
    "rank_of",
    "rank_to_choices",
    "shift_bijection",
    "shift_bijection_inv",
    "unrank",
    "validate_slots",
]
