import pickle
from fractions import Fraction

import pytest

from junta_bounds.config import get_settings
from junta_bounds.errors import ArityTooLargeForExact, IInJ, IndexOutOfRange
from junta_bounds.measures.dyadic import ONE, ZERO, DyadicRational, dyadic_sum
from junta_bounds.measures.packing import greedy_packing, max_disjoint_packing
from junta_bounds.measures.sensitivity import (
    block_sensitivity,
    block_sensitivity_witness,
    minimal_sensitive_blocks,
)
from junta_bounds.measures.weights import (
    WeightProfile,
    check_claim_base,
    check_claim_wi,
    deg_i,
    degree_profile,
    renumber,
    total_weight,
    weight_i,
    weight_total,
)
from junta_bounds.tables import TruthTable

AND2 = TruthTable(2, 0x8)
XOR2 = TruthTable(2, 0x6)
MAJ3 = TruthTable(3, 0xE8)
NAE3 = TruthTable(3, 0x7E)


# ---------- dyadic rationals ----------
def test_dyadic_values_are_canonical():
    assert DyadicRational(2, 2) == DyadicRational(1, 1)
    assert (DyadicRational(2, 2).numerator, DyadicRational(2, 2).exponent) == (1, 1)
    assert DyadicRational(0, 7).exponent == 0
    assert DyadicRational(3, -2) == 12
    assert str(DyadicRational(3, 3)) == "3/8"
    assert str(DyadicRational(-4, 0)) == "-4"


def test_dyadic_arithmetic_is_exact():
    eighth = DyadicRational.power_of_two(-3)
    assert eighth + eighth == DyadicRational.power_of_two(-2)
    assert ONE - eighth == Fraction(7, 8)
    assert (eighth * 3).as_fraction() == Fraction(3, 8)
    assert eighth.scale(3) == ONE
    assert -eighth < ZERO < eighth
    assert dyadic_sum([eighth] * 8) == ONE
    assert dyadic_sum([]) == ZERO


def test_dyadic_parse_and_reject_non_dyadic():
    assert DyadicRational.parse("5/16") == DyadicRational(5, 4)
    with pytest.raises(ValueError):
        DyadicRational.from_fraction(Fraction(1, 3))


def test_dyadic_is_immutable_hashable_and_picklable():
    half = DyadicRational(1, 1)
    with pytest.raises(AttributeError):
        half.numerator = 3
    assert len({half, DyadicRational(2, 2), DyadicRational(1, 2)}) == 2
    assert pickle.loads(pickle.dumps(half)) == half


# ---------- degrees and weights ----------
def test_weights_of_and_xor_and_dictator():
    assert degree_profile(AND2) == [2, 2]
    assert total_weight(AND2) == DyadicRational(1, 1)
    assert total_weight(XOR2) == DyadicRational(1, 1)
    x1 = TruthTable.variable(2, 1)
    assert degree_profile(x1) == [1, None]
    assert weight_i(x1, 2) == ZERO
    assert total_weight(x1) == DyadicRational(1, 1)


def test_deg_i_agrees_with_the_profile():
    for bits in range(256):
        tt = TruthTable(3, bits)
        assert [deg_i(tt, i) for i in (1, 2, 3)] == degree_profile(tt)
    with pytest.raises(IndexOutOfRange):
        deg_i(MAJ3, 0)


def test_weight_profile_total_must_match():
    profile = weight_total(NAE3)
    assert profile.total == DyadicRational(3, 2)
    with pytest.raises(ValueError):
        WeightProfile(profile.weights, ONE)


def test_renumber():
    assert renumber(3, 0b001) == 2
    assert renumber(4, 0b110) == 2
    assert renumber(1, 0b100) == 1


def test_claim_for_and_with_one_fixed_variable():
    report = check_claim_wi(AND2, 0b01, 2)
    # x1=0 leaves 0 (weight 0), x1=1 leaves x1 (weight 1/2)
    assert report.lhs == DyadicRational(1, 2)
    assert report.rhs == DyadicRational(1, 2)
    assert report.holds
    assert report.fixed == [1]
    assert check_claim_base(AND2, 1, 2) == report


def test_claim_argument_errors():
    with pytest.raises(IInJ):
        check_claim_wi(MAJ3, 0b011, 2)
    with pytest.raises(IndexOutOfRange):
        check_claim_wi(MAJ3, 0b1000, 1)
    with pytest.raises(IndexOutOfRange):
        check_claim_base(MAJ3, 4, 1)


def test_claim_holds_for_every_three_variable_function():
    for bits in range(256):
        tt = TruthTable(3, bits)
        for fixed in range(1, 8):
            for i in range(1, 4):
                if not (fixed >> (i - 1)) & 1:
                    assert check_claim_wi(tt, fixed, i).holds


# ---------- packing ----------
def test_packing_finds_the_maximum_where_greedy_does_not():
    # greedy takes {1,2} first, which meets both {1,3} and {2,4}
    blocks = [0b0011, 0b0101, 0b1010]
    assert greedy_packing(blocks) == [0b0011]
    best = max_disjoint_packing(blocks)
    assert sorted(best) == [0b0101, 0b1010]
    assert len(max_disjoint_packing(blocks, limit=1)) == 1
    assert max_disjoint_packing([]) == []


# ---------- block sensitivity ----------
def test_minimal_blocks_are_inclusion_minimal():
    # MAJ3 at 110: flipping x1 or x2 alone changes the value
    assert sorted(minimal_sensitive_blocks(MAJ3, 0b011)) == [0b001, 0b010]


@pytest.mark.parametrize(
    "tt, expected",
    [
        (TruthTable.constant(3, 1), 0),
        (TruthTable.variable(3, 2), 1),
        (AND2, 2),
        (XOR2, 2),
        (MAJ3, 2),
        (TruthTable(3, 0x96), 3),
        (TruthTable(3, 0xFE), 3),
    ],
)
def test_block_sensitivity_of_small_functions(tt, expected):
    assert block_sensitivity(tt) == expected


def test_witness_attains_the_value():
    x, bs, blocks = block_sensitivity_witness(TruthTable(3, 0xFE))
    assert (x, bs) == (0, 3)
    assert sorted(blocks) == [0b001, 0b010, 0b100]


def test_block_sensitivity_arity_limit(monkeypatch):
    monkeypatch.setenv("BF_BS_NMAX", "2")
    get_settings.cache_clear()
    with pytest.raises(ArityTooLargeForExact):
        block_sensitivity(MAJ3)
