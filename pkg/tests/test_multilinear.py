import numpy as np
import pytest

from junta_bounds.errors import NotBooleanValued
from junta_bounds.measures.maxonomials import hitting_number
from junta_bounds.tables import (
    MultilinearPoly,
    TruthTable,
    degree,
    is_boolean_poly,
    is_junta,
    mobius,
    poly_evaluate,
    relevant_count,
    relevant_vars,
    sensitive_vars,
    unmobius,
)
from junta_bounds.tables.multilinear import CACHED_ARITY, _cached_coefficients


def test_and_and_xor_coefficients():
    assert mobius(TruthTable(2, 0x8)).coefficients == {0b11: 1}
    xor = mobius(TruthTable(2, 0x6))
    assert xor.coefficients == {0b01: 1, 0b10: 1, 0b11: -2}
    assert xor.degree == 2
    assert xor.monomials(1) == [0b01, 0b10]


def test_not_all_equal_has_three_quadratic_monomials():
    nae = mobius(TruthTable(3, 0x7E))
    assert nae.coefficients == {0b001: 1, 0b010: 1, 0b011: -1, 0b100: 1, 0b101: -1, 0b110: -1}


def test_constants_have_degree_zero():
    assert degree(TruthTable.constant(3, 0)) == 0
    assert degree(TruthTable.constant(3, 1)) == 0
    assert mobius(TruthTable.constant(2, 1)).coefficients == {0: 1}


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_unmobius_inverts_mobius_on_every_small_table(n):
    for bits in range(1 << (1 << n)):
        tt = TruthTable(n, bits)
        assert unmobius(mobius(tt)) == tt


def test_unmobius_inverts_mobius_on_random_tables():
    rng = np.random.default_rng(3)
    for n in range(13):
        tt = TruthTable.from_array(n, rng.integers(0, 2, size=1 << n, dtype=np.uint8))
        assert unmobius(mobius(tt)) == tt


def test_unmobius_rejects_non_boolean_polynomials():
    poly = MultilinearPoly(1, {0b1: 2})
    assert not is_boolean_poly(poly)
    with pytest.raises(NotBooleanValued) as err:
        unmobius(poly)
    assert (err.value.point, err.value.value) == (1, 2)


def test_poly_evaluate_sums_monomials_inside_the_point():
    xor = mobius(TruthTable(2, 0x6))
    assert [poly_evaluate(xor, p) for p in range(4)] == [0, 1, 1, 0]
    assert is_boolean_poly(xor)


def test_zero_coefficients_are_dropped():
    assert MultilinearPoly(2, {0b11: 0, 0b01: 1}).coefficients == {0b01: 1}
    with pytest.raises(ValueError):
        MultilinearPoly(1, {0b10: 1})


def test_relevant_variables_equal_sensitive_variables():
    for bits in range(256):
        tt = TruthTable(3, bits)
        assert relevant_vars(tt) == sensitive_vars(tt)


def test_dictator_in_a_larger_space():
    x2 = TruthTable.variable(4, 2)
    assert relevant_vars(x2) == 0b10
    assert relevant_count(x2) == 1
    assert is_junta(x2, 1)
    assert not is_junta(TruthTable(2, 0x6), 1)


def test_poly_evaluate_agrees_with_the_table_everywhere():
    for bits in range(256):
        tt = TruthTable(3, bits)
        poly = mobius(tt)
        assert [poly_evaluate(poly, p) for p in range(8)] == [tt.evaluate(p) for p in range(8)]


def test_hitting_number_equals_degree_up_to_degree_one():
    seen = 0
    for bits in range(256):
        tt = TruthTable(3, bits)
        if degree(tt) <= 1:
            assert hitting_number(tt) == degree(tt)
            seen += 1
    # two constants and six literals
    assert seen == 8


def test_huge_coefficients_are_rejected_before_the_value_array():
    poly = MultilinearPoly(1, {0b1: 1 << 70})
    assert not is_boolean_poly(poly)
    with pytest.raises(NotBooleanValued) as err:
        unmobius(poly)
    assert (err.value.point, err.value.value) == (1, 1 << 70)

    wide = MultilinearPoly(2, {0b01: 1, 0b11: -(1 << 64)})
    with pytest.raises(NotBooleanValued) as err:
        unmobius(wide)
    assert (err.value.point, err.value.value) == (3, 1 - (1 << 64))


def test_only_small_tables_keep_their_coefficients_cached():
    _cached_coefficients.cache_clear()
    small = TruthTable.variable(CACHED_ARITY, 1)
    degree(small)
    degree(small)
    assert _cached_coefficients.cache_info().hits >= 1

    _cached_coefficients.cache_clear()
    large = TruthTable.variable(CACHED_ARITY + 1, 1)
    assert degree(large) == 1
    assert _cached_coefficients.cache_info().currsize == 0
