import tracemalloc
from collections import deque
from itertools import islice

import pytest

from fpfi import (
    Involution,
    count,
    iter_buffers,
    iter_involutions,
    rank_of,
)


def all_involutions(n: int) -> list[Involution]:
    return list(iter_involutions(n))


def test_count_values():
    assert [count(n) for n in range(7)] == [1, 1, 3, 15, 105, 945, 10395]
    assert count(10) == 654_729_075
    with pytest.raises(ValueError):
        count(-1)


def test_count_is_exact_for_large_n():
    # 64-bit arithmetic would wrap near n = 33; Python must not
    value = count(40)
    assert value % 10 != 0  # odd product of odd numbers
    assert value == count(39) * 79


def test_single_pair():
    assert [tuple(b) for b in iter_buffers(1)] == [(1, 2)]


def test_empty_ground_set():
    assert [tuple(b) for b in iter_buffers(0)] == [()]


def test_two_pair_order():
    got = [inv.pairs() for inv in iter_involutions(2)]
    assert got == [
        [(1, 2), (3, 4)],
        [(1, 3), (2, 4)],
        [(1, 4), (2, 3)],
    ]


def test_three_pair_output_is_all_involutions():
    got = all_involutions(3)
    assert len(got) == 15
    assert len(set(got)) == 15
    for inv in got:
        for e in range(1, 7):
            assert inv.partner(inv.partner(e)) == e
            assert inv.partner(e) != e


@pytest.mark.parametrize("n", range(7))
def test_visit_count_and_distinctness(n):
    seen = set()
    visits = 0
    for buf in iter_buffers(n):
        seen.add(tuple(buf))
        visits += 1
    assert visits == count(n)
    assert len(seen) == visits


@pytest.mark.parametrize("n", range(6))
def test_ranks_are_consecutive(n):
    assert [rank_of(inv) for inv in iter_involutions(n)] == list(range(count(n)))


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
@pytest.mark.parametrize("fraction", [0.0, 0.33, 0.5, 0.99])
def test_resume_matches_suffix(n, fraction):
    full = all_involutions(n)
    start = int(fraction * (count(n) - 1))
    assert list(iter_involutions(n, start=start)) == full[start:]


def test_resume_at_last_rank():
    last = count(4) - 1
    (only,) = list(iter_involutions(4, start=last))
    assert rank_of(only) == last


def test_start_out_of_range():
    with pytest.raises(ValueError):
        next(iter_buffers(2, start=3))
    with pytest.raises(ValueError):
        next(iter_buffers(2, start=-1))


def test_partition_by_rank_intervals():
    # fixing the first two digits splits rank space into width-15 blocks;
    # independent runs over the blocks must tile the full enumeration
    n, width = 4, 15
    full = all_involutions(n)
    tiled = []
    for start in range(0, count(n), width):
        tiled.extend(islice(iter_involutions(n, start=start), width))
    assert tiled == full


def test_buffer_is_reused_not_reallocated():
    ids = {id(buf) for buf in iter_buffers(5)}
    assert len(ids) == 1


def test_buffer_contents_are_transient():
    it = iter_buffers(2)
    first = next(it)
    snapshot = tuple(first)
    next(it)
    assert tuple(first) != snapshot  # same list object, rewritten in place


def test_memory_stays_flat():
    def peak_bytes(n):
        tracemalloc.start()
        deque(iter_buffers(n), maxlen=0)
        _, peak = tracemalloc.get_traced_memory()
        tracemalloc.stop()
        return peak

    small, large = peak_bytes(4), peak_bytes(7)
    # count(7)/count(4) is 1287x; the buffers differ by a few dozen bytes
    assert large < 64_000
    assert large < small + 8_000
