"""Fixed-point-free involutions on {1..2n}: encoding, enumeration, ranking.

A fixed-point-free involution pairs up the elements of {1, ..., 2n} with no
element mapped to itself; equivalently it is a perfect matching of the set.
An involution is stored as a flat array of 2n slots: each pair occupies two
adjacent slots as (min, max), and the pairs are laid out with strictly
decreasing minima.  Element 1 is the smallest minimum, so the final pair is
always (1, partner-of-1).  The layout is canonical: equal pair sets produce
equal arrays.

Growing an involution on {1..2k} by one pair works by pushing every element
through an order-preserving shift that frees the values 1 and i, then
appending the new pair (1, i).  Iterating over all i at every level visits
every involution exactly once; the per-level choices form a mixed-radix
numeral (radices 1, 3, 5, ...) which gives constant-time ranking and
unranking.

Thread safety: everything here is pure and operates on immutable values,
except the generators returned by :func:`iter_buffers` and
:func:`iter_involutions`, which hold private mutable state and must not be
shared between threads mid-iteration.
"""

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Involution",
    "ValidationError",
    "ValidationReport",
    "choices_to_involution",
    "choices_to_rank",
    "conjugate",
    "count",
    "extend",
    "involution_to_choices",
    "iter_buffers",
    "iter_involutions",
    "rank_of",
    "rank_to_choices",
    "shift_bijection",
    "shift_bijection_inv",
    "unrank",
    "validate_slots",
]


class ValidationError(ValueError):
    """Data that claims to encode an involution violates an invariant.

    ``code`` is a stable machine-readable name for the violated invariant;
    the exception message carries the human-readable detail.
    """

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


def shift_bijection(i: int, x: int) -> int:
    """Order-preserving map from {1..2k} onto {2..2k+2} minus {i}.

    Returns ``x + 1`` when ``x + 1 < i``, else ``x + 2``.  Shifting every
    element this way frees the values 1 and i so that the pair (1, i) can be
    adjoined without collisions.  The caller is responsible for the
    size-dependent upper bounds (x <= 2k, i <= 2k + 2).
    """
    if i < 2:
        raise ValueError(f"shift target {i} must be at least 2")
    if x < 1:
        raise ValueError(f"element {x} must be at least 1")
    return x + 2 if x + 1 >= i else x + 1


def shift_bijection_inv(i: int, y: int) -> int:
    """Inverse of :func:`shift_bijection`: defined on {2..2k+2} minus {i}.

    Returns ``y - 1`` when ``y < i``, else ``y - 2``.
    """
    if i < 2:
        raise ValueError(f"shift target {i} must be at least 2")
    if y < 2:
        raise ValueError(f"element {y} must be at least 2")
    if y == i:
        raise ValueError(f"element {y} is not in the image of the shift around {i}")
    return y - 1 if y < i else y - 2


def count(n: int) -> int:
    """Number of fixed-point-free involutions on {1..2n}.

    Equals the double factorial 1 * 3 * 5 * ... * (2n - 1), which is also
    (2n)! / (2**n * n!).  Exact for any n; Python integers do not overflow.
    """
    if n < 0:
        raise ValueError(f"pair count must be non-negative, got {n}")
    return math.prod(range(1, 2 * n, 2))


def _first_violation(slots: tuple) -> tuple[str, str] | None:
    """Return (code, message) for the first broken invariant, or None."""
    size = len(slots)
    if size % 2:
        return "odd-length", f"array has {size} slots; an involution needs an even count"
    seen = bytearray(size + 1)
    for pos, value in enumerate(slots):
        if not isinstance(value, int) or isinstance(value, bool) or not 1 <= value <= size:
            return "not-a-permutation", f"slot {pos} holds {value!r}, not an element of 1..{size}"
        if seen[value]:
            return "not-a-permutation", f"element {value} appears more than once"
        seen[value] = 1
    for j in range(0, size, 2):
        if slots[j] >= slots[j + 1]:
            return (
                "pair-minimum-violation",
                f"pair at slots {j},{j + 1} is ({slots[j]}, {slots[j + 1]}); the smaller element must come first",
            )
    for j in range(0, size - 2, 2):
        if slots[j] <= slots[j + 2]:
            return (
                "minima-not-decreasing",
                f"pair minima must strictly decrease left to right; slot {j} holds {slots[j]}, slot {j + 2} holds {slots[j + 2]}",
            )
    return None


class Involution:
    """A fixed-point-free involution on {1..2n} in canonical array form.

    ``slots`` stores the n pairs as adjacent (min, max) entries with
    strictly decreasing minima, e.g. ``(3, 4, 2, 5, 1, 6)`` for the pairing
    {{1,6}, {2,5}, {3,4}}.  Instances are immutable, hashable, and compared
    by value.  The constructor validates; invalid input raises
    :class:`ValidationError`.
    """

    __slots__ = ("_slots",)
    _slots: tuple[int, ...]

    def __init__(self, slots: Iterable[int]):
        values = tuple(slots)
        violation = _first_violation(values)
        if violation is not None:
            raise ValidationError(*violation)
        self._slots = values

    @classmethod
    def _trusted(cls, slots: tuple[int, ...]) -> "Involution":
        inv = object.__new__(cls)
        inv._slots = slots
        return inv

    @classmethod
    def from_pairs(cls, pairs: Iterable[Sequence[int]]) -> "Involution":
        """Build the canonical involution whose pair set equals ``pairs``.

        Each pair may list its two elements in either order.  The pairs must
        be disjoint and cover {1..2n} exactly, where n is the number of
        pairs; anything else raises :class:`ValidationError` naming the
        offending element.
        """
        normalized: list[tuple[int, int]] = []
        for pair in pairs:
            try:
                a, b = pair
            except (TypeError, ValueError):
                raise ValidationError(
                    "pair-cardinality", f"{pair!r} is not a two-element pair"
                ) from None
            if a == b:
                raise ValidationError("fixed-point", f"element {a} is paired with itself")
            normalized.append((a, b) if a < b else (b, a))
        size = 2 * len(normalized)
        seen: set[int] = set()
        for lo, hi in normalized:
            for element in (lo, hi):
                if not isinstance(element, int) or not 1 <= element <= size:
                    raise ValidationError(
                        "element-out-of-range",
                        f"element {element!r} is outside 1..{size}",
                    )
                if element in seen:
                    raise ValidationError(
                        "element-repeated", f"element {element} appears in more than one pair"
                    )
                seen.add(element)
        # n disjoint in-range pairs cover all of 1..2n, so no coverage scan needed
        normalized.sort(reverse=True)
        flat: list[int] = []
        for lo, hi in normalized:
            flat.append(lo)
            flat.append(hi)
        return cls._trusted(tuple(flat))

    @property
    def slots(self) -> tuple[int, ...]:
        return self._slots

    @property
    def n(self) -> int:
        """Pair count; the ground set is {1..2n}."""
        return len(self._slots) // 2

    @property
    def size(self) -> int:
        """Ground-set size 2n."""
        return len(self._slots)

    def pairs(self) -> list[tuple[int, int]]:
        """The pair set as (min, max) tuples, ascending by minimum."""
        s = self._slots
        return [(s[j], s[j + 1]) for j in range(len(s) - 2, -1, -2)]

    def partner(self, element: int) -> int:
        """The element this involution maps ``element`` to (never itself)."""
        try:
            pos = self._slots.index(element)
        except ValueError:
            raise ValueError(
                f"element {element!r} is not in the ground set 1..{len(self._slots)}"
            ) from None
        return self._slots[pos ^ 1]

    def rank(self) -> int:
        """Position of this involution in enumeration order; see :func:`rank_of`."""
        return rank_of(self)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Involution):
            return self._slots == other._slots
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._slots)

    def __repr__(self) -> str:
        return f"Involution({list(self._slots)!r})"


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of :func:`validate_slots`: either an involution or a diagnosis."""

    ok: bool
    code: str | None
    message: str
    involution: "Involution | None"


def validate_slots(slots: Iterable[int]) -> ValidationReport:
    """Check an arbitrary array against the involution invariants.

    Never raises.  On success the report carries the validated
    :class:`Involution`; on failure it names the first violated invariant
    (``odd-length``, ``not-a-permutation``, ``pair-minimum-violation``, or
    ``minima-not-decreasing``).
    """
    values = tuple(slots)
    violation = _first_violation(values)
    if violation is not None:
        code, message = violation
        return ValidationReport(ok=False, code=code, message=message, involution=None)
    return ValidationReport(
        ok=True, code=None, message="valid", involution=Involution._trusted(values)
    )


def extend(inv: Involution, i: int) -> Involution:
    """Grow ``inv`` by one pair: shift every element around ``i``, adjoin (1, i).

    ``i`` selects the new partner of element 1 and must lie in [2, 2k + 2]
    where 2k is the current ground size.  The existing pairs keep their
    order, so the result is already canonical.
    """
    limit = len(inv.slots) + 2
    if not 2 <= i <= limit:
        raise ValueError(f"extension choice {i} is outside 2..{limit}")
    grown = tuple(shift_bijection(i, x) for x in inv.slots) + (1, i)
    return Involution._trusted(grown)


def conjugate(inv: Involution, table: Sequence[int]) -> Involution:
    """Relabel ``inv`` through a permutation of its ground set.

    ``table[x - 1]`` is the new label of element x.  The image of a
    fixed-point-free involution under any relabeling is again one, so the
    result always validates.
    """
    size = len(inv.slots)
    if len(table) != size:
        raise ValueError(f"bijection table has {len(table)} entries, expected {size}")
    if sorted(table) != list(range(1, size + 1)):
        raise ValueError(f"bijection table is not a permutation of 1..{size}")
    return Involution.from_pairs((table[lo - 1], table[hi - 1]) for lo, hi in inv.pairs())


def _check_digit(k: int, d: int) -> None:
    if not 2 <= d <= 2 * k:
        raise ValueError(f"choice {d} at level {k} is outside 2..{2 * k}")


def choices_to_involution(digits: Sequence[int]) -> Involution:
    """Fold a choice sequence into its involution.

    Starting from the empty involution, level k adjoins the pair
    (1, digits[k - 1]); digit k must lie in [2, 2k].
    """
    buf: list[int] = []
    for k, d in enumerate(digits, 1):
        _check_digit(k, d)
        buf = [shift_bijection(d, x) for x in buf]
        buf.append(1)
        buf.append(d)
    return Involution._trusted(tuple(buf))


def involution_to_choices(inv: Involution) -> tuple[int, ...]:
    """Recover the choice sequence that builds ``inv``.

    The last choice is the partner of 1; stripping that pair and unshifting
    the rest peels off one level, down to the empty involution.  Exact
    inverse of :func:`choices_to_involution`.
    """
    work = list(inv.slots)
    digits: list[int] = []
    while work:
        d = work[-1]
        digits.append(d)
        del work[-2:]
        for j, y in enumerate(work):
            work[j] = shift_bijection_inv(d, y)
    digits.reverse()
    return tuple(digits)


def choices_to_rank(digits: Sequence[int]) -> int:
    """Mixed-radix value of a choice sequence; level k has radix 2k - 1.

    Earlier digits are more significant, which makes ranks increase in
    exactly the order :func:`iter_buffers` visits involutions.
    """
    r = 0
    for k, d in enumerate(digits, 1):
        _check_digit(k, d)
        r = r * (2 * k - 1) + (d - 2)
    return r


def rank_to_choices(n: int, r: int) -> tuple[int, ...]:
    """Digits of rank ``r`` for pair count ``n``; inverse of :func:`choices_to_rank`."""
    total = count(n)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} is outside 0..{total - 1} for pair count {n}")
    digits = [0] * n
    for k in range(n, 0, -1):
        r, rem = divmod(r, 2 * k - 1)
        digits[k - 1] = rem + 2
    return tuple(digits)


def rank_of(inv: Involution) -> int:
    """Position of ``inv`` in enumeration order, in [0, count(n))."""
    return choices_to_rank(involution_to_choices(inv))


def unrank(n: int, r: int) -> Involution:
    """The involution visited at position ``r`` by the enumeration for pair count ``n``."""
    return choices_to_involution(rank_to_choices(n, r))


def iter_buffers(n: int, start: int = 0) -> Iterator[list[int]]:
    """Stream every involution on {1..2n} in rank order, without copying.

    Yields the enumerator's single working buffer once per involution:
    treat it as read-only, and copy it if it must outlive the iteration
    step.  Memory stays at O(n) regardless of how many involutions are
    visited.  ``start`` resumes mid-sequence: the first buffer yielded has
    rank ``start``, and iteration continues through rank count(n) - 1, so
    disjoint rank intervals partition the search space exactly.
    """
    total = count(n)
    if not 0 <= start < total:
        raise ValueError(f"start rank {start} is outside 0..{total - 1}")
    if n == 0:
        yield []
        return
    if n == 1:
        yield [1, 2]
        return

    last = 2 * n
    m = last - 2  # prefix rewritten by the deepest level
    m1 = last - 1
    buf = [0] * last
    choice = [0] * n  # choice[k]: current digit at level k, for 1 <= k <= n - 1
    if start:
        digits = rank_to_choices(n, start)
        buf[:] = choices_to_involution(digits).slots
        for k in range(1, n):
            choice[k] = digits[k - 1]
        k = n - 1
        head = digits[n - 1]  # deepest-level digit to resume after
    else:
        k = 0
        head = 0
    find = buf.index

    while True:
        if head:
            i0 = head
            head = 0
        else:
            # descend to the deepest level, taking digit 2 everywhere:
            # digit 2 shifts every prefix element up by 2, then appends (1, 2)
            while k < n - 1:
                mm = 2 * k
                for j in range(mm):
                    buf[j] += 2
                buf[mm] = 1
                buf[mm + 1] = 2
                k += 1
                choice[k] = 2
            for j in range(m):
                buf[j] += 2
            buf[m] = 1
            buf[m1] = 2
            i0 = 2
        yield buf
        # remaining siblings at the deepest level:  moving the digit from
        # i - 1 to i changes the shift at exactly one element, the one the
        # buffer currently shows as i, which drops to i - 1
        for i in range(i0 + 1, last + 1):
            buf[find(i, 0, m)] = i - 1
            buf[m1] = i
            yield buf
        # the final digit 2n shifted every prefix element up by 1; undo it
        for j in range(m):
            buf[j] -= 1
        # pop exhausted levels (digit at maximum 2k), undoing their shifts
        while choice[k] == 2 * k:
            k -= 1
            if k == 0:
                return
            mm = 2 * k
            for j in range(mm):
                buf[j] -= 1
        i = choice[k] + 1
        choice[k] = i
        mm = 2 * k - 2
        buf[find(i, 0, mm)] = i - 1
        buf[mm + 1] = i


def iter_involutions(n: int, start: int = 0) -> Iterator[Involution]:
    """Like :func:`iter_buffers`, but yields independent :class:`Involution` values."""
    for buf in iter_buffers(n, start):
        yield Involution._trusted(tuple(buf))
