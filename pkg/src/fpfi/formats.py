"""Line-oriented involution formats shared by the CLI commands.

Three formats, one involution per line, no trailing whitespace:

* ``pairs``: blocks ``lo-hi`` separated by single spaces, ascending by lo,
  e.g. ``1-5 2-4 3-6``.
* ``array``: the 2n slot values separated by single spaces, e.g.
  ``3 6 2 4 1 5``.
* ``jsonl``: one compact object per line,
  ``{"n":3,"rank":8,"pairs":[[1,5],[2,4],[3,6]]}``; all numbers are decimal
  integers.

Parsing is two-staged: ``parse_*`` raise :class:`FormatError` on syntax
problems, while :func:`line_to_involution` additionally applies the
involution invariants and raises :class:`ValidationError`.
"""

import json
from typing import Sequence

from fpfi.core import Involution, ValidationError, validate_slots

__all__ = [
    "FORMATS",
    "FormatError",
    "emit_line",
    "line_to_involution",
    "parse_array",
    "parse_jsonl",
    "parse_pairs",
]

FORMATS = ("pairs", "array", "jsonl")


class FormatError(ValueError):
    """A line cannot be parsed in its declared format."""


def _ordered_pairs(slots: Sequence[int]) -> list[list[int]]:
    # slot layout puts minima in descending order, so walk the pairs backwards
    return [[slots[j], slots[j + 1]] for j in range(len(slots) - 2, -1, -2)]


def emit_line(slots: Sequence[int], fmt: str, rank: int | None = None) -> str:
    """Render one involution (given as its slot array) in ``fmt``.

    ``rank`` is required for jsonl, which carries it in the object.
    """
    if fmt == "pairs":
        return " ".join(f"{lo}-{hi}" for lo, hi in _ordered_pairs(slots))
    if fmt == "array":
        return " ".join(map(str, slots))
    if fmt == "jsonl":
        if rank is None:
            raise ValueError("jsonl lines carry the rank; pass rank=")
        obj = {"n": len(slots) // 2, "rank": rank, "pairs": _ordered_pairs(slots)}
        return json.dumps(obj, separators=(",", ":"))
    raise ValueError(f"unknown format {fmt!r}")


def parse_array(line: str) -> list[int]:
    """Whitespace-separated integers; the empty line is the empty array."""
    try:
        return [int(token) for token in line.split()]
    except ValueError:
        raise FormatError("array line must contain only whitespace-separated integers") from None


def parse_pairs(line: str) -> list[tuple[int, int]]:
    """Blocks of the form LO-HI; returned in input order, unchecked."""
    out = []
    for token in line.split():
        lo, sep, hi = token.partition("-")
        if not sep:
            raise FormatError(f"pair block {token!r} must look like LO-HI")
        try:
            out.append((int(lo), int(hi)))
        except ValueError:
            raise FormatError(f"pair block {token!r} must hold two integers") from None
    return out


def parse_jsonl(line: str) -> tuple[int, int | None, list[tuple[int, int]]]:
    """Decode one jsonl object; returns (n, rank or None, pairs).

    ``rank`` may be omitted on input (handy for hand-written lines fed to
    the rank command); everything else is schema-checked here.
    """
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise FormatError("jsonl line must be a JSON object")
    if "n" not in obj or "pairs" not in obj:
        raise FormatError('jsonl object must have "n" and "pairs" keys')
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise FormatError('"n" must be a non-negative integer')
    rank = obj.get("rank")
    if rank is not None and (not isinstance(rank, int) or isinstance(rank, bool) or rank < 0):
        raise FormatError('"rank" must be a non-negative integer when present')
    raw_pairs = obj["pairs"]
    if not isinstance(raw_pairs, list):
        raise FormatError('"pairs" must be a list')
    pairs = []
    for item in raw_pairs:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in item)
        ):
            raise FormatError(f"pair {item!r} must be a two-integer list")
        pairs.append((item[0], item[1]))
    return n, rank, pairs


def _pairs_to_involution(pairs: list[tuple[int, int]]) -> Involution:
    prev_lo = 0
    for lo, hi in pairs:
        if lo == hi:
            raise ValidationError("fixed-point", f"element {lo} is paired with itself")
        if lo > hi:
            raise ValidationError(
                "pair-order", f"block {lo}-{hi} must put the smaller element first"
            )
        if lo <= prev_lo:
            raise ValidationError(
                "pairs-not-ascending",
                f"pair minima must increase left to right (saw {lo} after {prev_lo})",
            )
        prev_lo = lo
    return Involution.from_pairs(pairs)


def line_to_involution(line: str, fmt: str) -> tuple[Involution, int | None]:
    """Parse and validate one line; returns the involution and any rank claim.

    Raises :class:`FormatError` for syntax and :class:`ValidationError` for
    semantic violations.  Only jsonl lines can claim a rank; the caller
    decides whether to cross-check it.
    """
    if fmt == "array":
        report = validate_slots(parse_array(line))
        if report.involution is None:
            raise ValidationError(report.code or "invalid", report.message)
        return report.involution, None
    if fmt == "pairs":
        return _pairs_to_involution(parse_pairs(line)), None
    if fmt == "jsonl":
        n, rank, pairs = parse_jsonl(line)
        inv = _pairs_to_involution(pairs)
        if inv.n != n:
            raise ValidationError(
                "size-mismatch", f'line declares n={n} but carries {inv.n} pairs'
            )
        return inv, rank
    raise ValueError(f"unknown format {fmt!r}")
