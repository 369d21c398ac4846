import pytest

from ringbench import constructions as c
from ringbench.catalog import ENTRIES, build_ring
from ringbench.core import FiniteRing
from ringbench.exceptions import NotAnIdeal, OracleCapExceeded, SidednessMismatch
from ringbench.ideals import (
    Sidedness,
    all_ideals_oracle,
    ideal_from_members,
    ideal_generated,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_completely_prime_ideal,
    is_locally_nilpotent,
    is_nil,
    is_prime_ideal,
    is_T_nilpotent,
    is_two_sided,
    jacobson_radical,
    jacobson_radical_oracle,
    maximal_left_ideals_oracle,
    maximal_right_ideals_oracle,
    nilpotency_index,
    prime_radical,
    prime_radical_oracle,
    prime_violation,
    quasi_regular_set,
    strongly_nilpotent_elements,
    whole_ring,
    zero_ideal,
)
from tests.utils import M2_E11, M2_E12, M2_E21


@pytest.fixture(scope='module')
def t3z2(z2: FiniteRing) -> FiniteRing:
    """Weights 32, 16, 8, 4, 2, 1 on entries 11, 12, 13, 22, 23, 33."""
    return c.triangular_matrix_ring(z2, None, 3)


def test_principal_ideals(z4: FiniteRing, m2z2: FiniteRing, t3z2: FiniteRing):
    assert ideal_generated(z4, 2) == {0, 2}
    assert ideal_generated(m2z2, M2_E11).is_whole
    assert ideal_generated(t3z2, 8) == {0, 8}


def test_one_sided_ideals(m2z2: FiniteRing):
    row = ideal_generated(m2z2, M2_E11, Sidedness.RIGHT)
    column = ideal_generated(m2z2, M2_E11, Sidedness.LEFT)
    assert row == {0, M2_E11, M2_E12, M2_E11 + M2_E12}
    assert column == {0, M2_E11, M2_E21, M2_E11 + M2_E21}
    assert not is_two_sided(row)
    assert row.labels()[0] == '0'


def test_ideal_from_members(z4: FiniteRing):
    ideal = ideal_from_members(z4, [0, 2])
    assert 2 in ideal
    assert 1 not in ideal
    assert 'foo' not in ideal
    with pytest.raises(NotAnIdeal):
        ideal_from_members(z4, [0, 1])


def test_ideal_arithmetic(z4: FiniteRing, z6: FiniteRing):
    doubles = ideal_generated(z4, 2)
    assert ideal_product(doubles, doubles).is_zero
    assert ideal_power(doubles, 2) == zero_ideal(z4)
    assert ideal_power(doubles, 1) == doubles
    evens, triples = ideal_generated(z6, 2), ideal_generated(z6, 3)
    assert ideal_sum(evens, triples) == whole_ring(z6)
    assert ideal_intersection(evens, triples).is_zero
    with pytest.raises(ValueError):
        ideal_power(doubles, 0)


def test_sidedness_mismatch(m2z2: FiniteRing):
    row = ideal_generated(m2z2, M2_E11, Sidedness.RIGHT)
    column = ideal_generated(m2z2, M2_E11, Sidedness.LEFT)
    with pytest.raises(SidednessMismatch):
        ideal_sum(row, column)
    with pytest.raises(SidednessMismatch):
        nilpotency_index(row)


@pytest.mark.parametrize(('ring_name', 'element', 'expected'), [
    ('z4', 2, 2),
    ('z4', 1, None),
    ('z4', 0, 1),
    ('t2z3', 3, 2),
    ('r3', 7, 3),
])
def test_nilpotency_index(request, ring_name: str, element: int, expected):
    ring = request.getfixturevalue(ring_name)
    assert nilpotency_index(ideal_generated(ring, element)) == expected


@pytest.mark.parametrize(('ring_name', 'radical'), [
    ('z2', {0}),
    ('z4', {0, 2}),
    ('z6', {0}),
    ('gf4', {0}),
    ('m2z2', {0}),
    ('t2z3', {0, 3, 6}),
    ('r3', set(range(8))),
])
def test_radicals(request, ring_name: str, radical: set):
    ring = request.getfixturevalue(ring_name)
    assert prime_radical(ring) == radical
    assert jacobson_radical(ring) == radical
    assert is_nil(jacobson_radical(ring))
    assert prime_radical(ring) <= jacobson_radical(ring)


@pytest.mark.parametrize('ring_name', ['z4', 'z6', 'gf4', 'm2z2', 't2z3', 'r3'])
def test_radical_oracles_agree(request, ring_name: str):
    ring = request.getfixturevalue(ring_name)
    assert prime_radical_oracle(ring) == prime_radical(ring)
    assert jacobson_radical_oracle(ring) == jacobson_radical(ring)
    assert strongly_nilpotent_elements(ring) == prime_radical(ring).members


@pytest.mark.parametrize('name', [entry.name for entry in ENTRIES])
def test_catalog_radicals_agree_with_oracles(name: str):
    ring = build_ring(name)
    if ring.order > 32:
        pytest.skip('above the prime ideal enumeration cap')
    assert prime_radical_oracle(ring) == prime_radical(ring)
    if ring.order <= 27:
        assert jacobson_radical_oracle(ring) == jacobson_radical(ring)


def test_oracle_caps(t3z2: FiniteRing):
    with pytest.raises(OracleCapExceeded):
        all_ideals_oracle(t3z2)
    with pytest.raises(OracleCapExceeded):
        jacobson_radical_oracle(t3z2)


def test_oracle_caps_can_be_passed(t2z3: FiniteRing):
    with pytest.raises(OracleCapExceeded) as error:
        prime_radical_oracle(t2z3, max_order=8)
    assert error.value.cap == 8
    with pytest.raises(OracleCapExceeded):
        jacobson_radical_oracle(t2z3, max_order=8)
    with pytest.raises(OracleCapExceeded):
        maximal_left_ideals_oracle(t2z3, max_order=8)
    assert len(maximal_right_ideals_oracle(t2z3, max_order=9)) == 2


def test_quasi_regular_set(z4: FiniteRing, t2z3: FiniteRing):
    assert quasi_regular_set(z4) == {0, 2}
    assert jacobson_radical(t2z3).members <= quasi_regular_set(t2z3)


def test_all_ideals(z4: FiniteRing, z6: FiniteRing, m2z2: FiniteRing):
    assert [ideal.members for ideal in all_ideals_oracle(z4)] == [{0}, {0, 2}, {0, 1, 2, 3}]
    assert len(all_ideals_oracle(z6)) == 4
    assert len(all_ideals_oracle(m2z2)) == 2


def test_maximal_one_sided_ideals(m2z2: FiniteRing, z4: FiniteRing):
    right = maximal_right_ideals_oracle(m2z2)
    assert len(right) == 3
    assert all(len(ideal) == 4 for ideal in right)
    assert len(maximal_left_ideals_oracle(m2z2)) == 3
    assert [ideal.members for ideal in maximal_right_ideals_oracle(z4)] == [{0, 2}]


def test_prime_ideals(z6: FiniteRing, m2z2: FiniteRing):
    evens = ideal_generated(z6, 2)
    assert is_prime_ideal(evens)
    assert is_completely_prime_ideal(evens)
    assert prime_violation(zero_ideal(z6)) == (2, 3)
    # M2(Z2) is simple but has zero divisors
    assert is_prime_ideal(zero_ideal(m2z2))
    assert not is_completely_prime_ideal(zero_ideal(m2z2))
    with pytest.raises(NotAnIdeal):
        is_prime_ideal(whole_ring(z6))


def test_local_nilpotency(z4: FiniteRing, t2z3: FiniteRing):
    assert is_locally_nilpotent(jacobson_radical(t2z3)).holds
    verdict = is_locally_nilpotent(whole_ring(z4))
    assert not verdict.holds
    assert verdict.witness == z4.one


@pytest.mark.parametrize('side', [Sidedness.LEFT, Sidedness.RIGHT])
def test_T_nilpotency(z4: FiniteRing, r3: FiniteRing, side: Sidedness):  # noqa: N802
    assert is_T_nilpotent(jacobson_radical(z4), side)
    assert is_T_nilpotent(jacobson_radical(r3), side)
    assert not is_T_nilpotent(whole_ring(z4), side)


def test_T_nilpotency_is_one_sided(z4: FiniteRing):  # noqa: N802
    with pytest.raises(SidednessMismatch):
        is_T_nilpotent(jacobson_radical(z4), Sidedness.TWO_SIDED)
