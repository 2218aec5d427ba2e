import numpy as np
import pytest

from junta_bounds.config import get_settings
from junta_bounds.errors import ArityOverflow, IndexOutOfRange, PointOutOfRange
from junta_bounds.tables import (
    PartialAssignment,
    TruthTable,
    partial_assignments,
    restrict,
    restrict_variable,
)

AND2 = TruthTable(2, 0x8)


def test_evaluate_reads_bit_k_as_f_at_point_k():
    assert [AND2.evaluate(p) for p in range(4)] == [0, 0, 0, 1]
    with pytest.raises(PointOutOfRange):
        AND2.evaluate(4)


def test_variable_sets_bit_i_minus_one_of_the_point():
    assert TruthTable.variable(3, 2).bits == 0xCC
    assert TruthTable.variable(1, 1).bits == 0x2
    with pytest.raises(IndexOutOfRange):
        TruthTable.variable(3, 4)


def test_bits_beyond_the_table_are_rejected():
    with pytest.raises(ValueError):
        TruthTable(1, 0x4)


def test_arity_limit_comes_from_the_environment(monkeypatch):
    monkeypatch.setenv("BF_NMAX", "4")
    get_settings.cache_clear()
    TruthTable(4, 0)
    with pytest.raises(ArityOverflow):
        TruthTable(5, 0)


def test_from_function_and_array_agree():
    maj = TruthTable.from_function(3, lambda xs: sum(xs) >= 2)
    assert maj.bits == 0xE8
    assert TruthTable.from_array(3, maj.array) == maj
    assert not maj.array.flags.writeable


def test_group_actions():
    x1 = TruthTable.variable(2, 1)
    assert x1.negate().bits == 0x5
    assert x1.flip_input(1) == x1.negate()
    assert x1.flip_input(2) == x1
    # variable 2 of the result is variable 1 of x1
    assert x1.permute([2, 1]) == TruthTable.variable(2, 2)
    with pytest.raises(ValueError):
        x1.permute([1, 1])


def test_partial_assignments_enumerate_every_value_of_the_fixed_set():
    values = sorted(pa.value_mask for pa in partial_assignments(0b101))
    assert values == [0b000, 0b001, 0b100, 0b101]
    assert list(partial_assignments(0)) == [PartialAssignment(0, 0)]


def test_partial_assignment_validation_and_dict_view():
    with pytest.raises(ValueError):
        PartialAssignment(0b1, 0b10)
    pa = PartialAssignment.from_dict({1: 1, 3: 0})
    assert (pa.fixed_mask, pa.value_mask) == (0b101, 0b001)
    assert pa.as_dict() == {1: 1, 3: 0}
    assert pa.size == 2


def test_merge_and_compress():
    a = PartialAssignment(0b001, 0b001)
    b = PartialAssignment(0b100, 0b000)
    assert a.merge(b) == PartialAssignment(0b101, 0b001)
    with pytest.raises(ValueError):
        a.merge(a)
    # with x2 fixed away, x3 becomes x2
    assert b.compress(0b010) == PartialAssignment(0b010, 0)


def test_restrict_renumbers_survivors_densely():
    assert restrict_variable(AND2, 1, 1) == TruthTable.variable(1, 1)
    assert restrict_variable(AND2, 1, 0) == TruthTable.constant(1, 0)
    x3 = TruthTable.variable(3, 3)
    assert restrict(x3, PartialAssignment(0b001, 0)) == TruthTable.variable(2, 2)
    with pytest.raises(IndexOutOfRange):
        restrict(AND2, PartialAssignment(0b100, 0))


def test_restrict_matches_pointwise_evaluation():
    rng = np.random.default_rng(0)
    tt = TruthTable.from_array(5, rng.integers(0, 2, size=32, dtype=np.uint8))
    pa = PartialAssignment(0b01010, 0b00010)
    sub = restrict(tt, pa)
    assert sub.arity == 3
    for y in range(8):
        # free variables 1, 3, 5 take the bits of y in order
        x = (y & 1) | (((y >> 1) & 1) << 2) | (((y >> 2) & 1) << 4) | pa.value_mask
        assert sub.evaluate(y) == tt.evaluate(x)


def _commutes(tt: TruthTable, first: PartialAssignment, second: PartialAssignment) -> bool:
    once = restrict(tt, first.merge(second))
    twice = restrict(restrict(tt, first), second.compress(first.fixed_mask))
    return once == twice


def test_restriction_in_two_steps_matches_the_merged_assignment():
    first = PartialAssignment(0b001, 0b001)
    for bits in range(256):
        tt = TruthTable(3, bits)
        for second in partial_assignments(0b100):
            assert _commutes(tt, first, second)
        for second in partial_assignments(0b110):
            assert _commutes(tt, first, second)


def test_restriction_commutes_on_random_five_variable_tables():
    rng = np.random.default_rng(7)
    for _ in range(20):
        tt = TruthTable.from_array(5, rng.integers(0, 2, size=32, dtype=np.uint8))
        fixed = int(rng.integers(1, 31))
        split = int(rng.integers(0, 32)) & fixed
        values = int(rng.integers(0, 32)) & fixed
        first = PartialAssignment(split, values & split)
        second = PartialAssignment(fixed & ~split, values & ~split)
        assert _commutes(tt, first, second)
