import pytest

from fpfi import (
    Involution,
    ValidationError,
    conjugate,
    extend,
    validate_slots,
)


class TestConstruction:
    def test_valid_slots(self):
        inv = Involution([3, 4, 2, 5, 1, 6])
        assert inv.slots == (3, 4, 2, 5, 1, 6)
        assert inv.n == 3
        assert inv.size == 6

    def test_empty(self):
        inv = Involution(())
        assert inv.n == 0
        assert inv.pairs() == []

    def test_rejects_bad_layout(self):
        with pytest.raises(ValidationError) as exc:
            Involution([4, 3, 2, 5, 1, 6])
        assert exc.value.code == "pair-minimum-violation"

    def test_equality_and_hash(self):
        a = Involution([1, 2])
        b = Involution((1, 2))
        assert a == b
        assert hash(a) == hash(b)
        assert a != Involution([2, 3, 1, 4])
        assert len({a, b}) == 1


class TestFromPairs:
    def test_worked_example(self):
        inv = Involution.from_pairs([(2, 5), (3, 4), (6, 1)])
        assert inv.slots == (3, 4, 2, 5, 1, 6)

    def test_single_pair(self):
        assert Involution.from_pairs([(1, 2)]).slots == (1, 2)

    def test_repeated_element(self):
        with pytest.raises(ValidationError) as exc:
            Involution.from_pairs([(1, 2), (2, 3)])
        assert exc.value.code == "element-repeated"
        assert "2" in str(exc.value)

    def test_fixed_point(self):
        with pytest.raises(ValidationError) as exc:
            Involution.from_pairs([(3, 3), (1, 2)])
        assert exc.value.code == "fixed-point"

    def test_out_of_range(self):
        with pytest.raises(ValidationError) as exc:
            Involution.from_pairs([(1, 2), (3, 7)])
        assert exc.value.code == "element-out-of-range"
        assert "7" in str(exc.value)

    def test_not_a_pair(self):
        with pytest.raises(ValidationError) as exc:
            Involution.from_pairs([(1, 2, 3), (4, 5)])
        assert exc.value.code == "pair-cardinality"


class TestAccessors:
    def test_pairs_sorted_ascending(self):
        assert Involution([3, 4, 2, 5, 1, 6]).pairs() == [(1, 6), (2, 5), (3, 4)]
        assert Involution([3, 6, 2, 4, 1, 5]).pairs() == [(1, 5), (2, 4), (3, 6)]
        assert Involution([1, 2]).pairs() == [(1, 2)]

    def test_partner(self):
        inv = Involution([3, 4, 2, 5, 1, 6])
        assert inv.partner(2) == 5
        assert inv.partner(5) == 2
        for e in range(1, 7):
            assert inv.partner(e) == 7 - e
            assert inv.partner(inv.partner(e)) == e
            assert inv.partner(e) != e
        assert Involution([1, 2]).partner(1) == 2

    def test_partner_out_of_range(self):
        with pytest.raises(ValueError):
            Involution([1, 2]).partner(3)
        with pytest.raises(ValueError):
            Involution([1, 2]).partner(0)


class TestValidateSlots:
    def test_accepts_worked_example(self):
        report = validate_slots([3, 4, 2, 5, 1, 6])
        assert report.ok
        assert report.code is None
        assert report.involution == Involution([3, 4, 2, 5, 1, 6])

    def test_pair_minimum_violation(self):
        report = validate_slots([4, 3, 2, 5, 1, 6])
        assert not report.ok
        assert report.code == "pair-minimum-violation"
        assert report.involution is None

    def test_minima_not_decreasing(self):
        report = validate_slots([1, 2, 3, 4])
        assert report.code == "minima-not-decreasing"

    def test_odd_length(self):
        assert validate_slots([1, 2, 3]).code == "odd-length"

    def test_not_a_permutation(self):
        assert validate_slots([1, 1]).code == "not-a-permutation"
        assert validate_slots([2, 3]).code == "not-a-permutation"
        assert validate_slots([0, 1]).code == "not-a-permutation"
        assert validate_slots(["a", "b"]).code == "not-a-permutation"

    def test_never_raises_on_junk(self):
        for junk in ([None], [1.5, 2.5], [10**9, 1], [-1, 1]):
            report = validate_slots(junk)
            assert not report.ok

    def test_empty_is_valid(self):
        assert validate_slots([]).ok


class TestExtend:
    def test_worked_example(self):
        base = Involution.from_pairs([(1, 3), (2, 4)])
        grown = extend(base, 5)
        assert grown.pairs() == [(1, 5), (2, 4), (3, 6)]
        assert grown.slots == (3, 6, 2, 4, 1, 5)

    def test_from_empty(self):
        assert extend(Involution(()), 2).pairs() == [(1, 2)]

    def test_single_to_double(self):
        assert extend(Involution([1, 2]), 4).pairs() == [(1, 4), (2, 3)]

    def test_choice_out_of_range(self):
        base = Involution([1, 2])
        with pytest.raises(ValueError):
            extend(base, 5)
        with pytest.raises(ValueError):
            extend(base, 1)

    def test_all_choices_produce_valid_involutions(self):
        base = Involution.from_pairs([(1, 3), (2, 4)])
        children = [extend(base, i) for i in range(2, 7)]
        assert len(set(children)) == 5
        for i, child in zip(range(2, 7), children):
            assert validate_slots(child.slots).ok
            assert child.partner(1) == i


class TestConjugate:
    def test_identity(self):
        inv = Involution([1, 2])
        assert conjugate(inv, [1, 2]) == inv

    def test_swap_within_pair(self):
        inv = Involution([1, 2])
        assert conjugate(inv, [2, 1]) == inv

    def test_swap_across_pairs(self):
        inv = Involution.from_pairs([(1, 2), (3, 4)])
        assert conjugate(inv, [1, 3, 2, 4]) == Involution.from_pairs([(1, 3), (2, 4)])

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            conjugate(Involution([1, 2]), [1, 2, 3, 4])

    def test_not_a_permutation(self):
        with pytest.raises(ValueError):
            conjugate(Involution([1, 2]), [1, 1])
