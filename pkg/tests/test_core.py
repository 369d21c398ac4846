from hypothesis import given, settings as hypothesis_settings
from hypothesis import strategies as st
import numpy as np
import pytest

from ringbench import constructions as c
from ringbench.core import (
    FiniteRing,
    PeriodicityWitness,
    Provenance,
    assert_ring_axioms,
    common_exponent,
    find_violations,
    validate_ring,
)
from ringbench.exceptions import (
    ElementError,
    OrderCapExceeded,
    RingMismatchError,
    RingValidationError,
)
from tests.utils import M2_E11, M2_E12, M2_E21, M2_ONE, broken_one_tables

SMALL_RINGS = [c.zmod(n) for n in (1, 2, 3, 4, 6, 8)] + [c.galois_field(2, 2)]


def test_validate_z2():
    ring = validate_ring([[0, 1], [1, 0]], [[0, 0], [0, 1]], 1)
    assert ring.order == 2
    assert ring.validated
    assert ring.provenance == Provenance.RAW_IMPORT


def test_validate_rejects_fake_identity():
    add, mul, one = broken_one_tables()
    with pytest.raises(RingValidationError) as error:
        validate_ring(add, mul, one)
    axioms = {violation.axiom for violation in error.value.violations}
    assert 'multiplicative-identity' in axioms


def test_validate_z4_full_scan(z4: FiniteRing):
    assert find_violations(z4.add_table, z4.mul_table, z4.one) == []
    ring = validate_ring(z4.add_table, z4.mul_table, z4.one)
    assert ring == z4


def test_validate_reports_witness_for_non_associative_tables():
    add = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    mul = [[0, 0, 0], [0, 1, 2], [0, 2, 2]]
    with pytest.raises(RingValidationError) as error:
        validate_ring(add, mul, 1)
    violation = error.value.violations[0]
    assert violation.axiom in {'associativity', 'left-distributivity', 'right-distributivity'}
    assert len(violation.witness) == 3


def test_validate_moves_zero_to_index_zero(z4: FiniteRing):
    # Swap 0 and 3 in Z4's tables
    permutation = [3, 1, 2, 0]
    relabelled = z4.relabel(permutation)
    ring = validate_ring(relabelled.add_table, relabelled.mul_table, relabelled.one, zero=3)
    assert ring.zero == 0
    assert ring.add(0, 1) == 1
    assert ring == z4


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        c.zmod(10, max_order=8)


def test_arithmetic(z4: FiniteRing, z6: FiniteRing):
    assert z4.add(2, 3) == 1
    assert z4.mul(2, 2) == 0
    assert z4.pow(2, 2) == 0
    assert z6.pow(2, 3) == 2
    assert z4.sub(1, 3) == 2
    for a in z6.elements:
        assert z6.add(a, z6.neg(a)) == z6.zero
        assert z6.pow(z6.one, a + 1) == z6.one


def test_element_handles(z4: FiniteRing, z6: FiniteRing):
    two = z4.element(2)
    assert int(two + z4.element(3)) == 1
    assert int(two * two) == 0
    assert int(two ** 3) == 0
    assert int(-z4.element(1)) == 3
    with pytest.raises(RingMismatchError):
        two + z6.element(1)
    with pytest.raises(ElementError):
        z4.element(4)


@pytest.mark.parametrize(('n', 'a', 'k', 'l', 'exponent'), [
    (4, 1, 1, 2, 1),
    (4, 2, 2, 3, 2),
    (6, 2, 1, 3, 2),
    (1, 0, 1, 2, 1),
])
def test_power_cycle(n: int, a: int, k: int, l: int, exponent: int):  # noqa: E741
    ring = c.zmod(n)
    witness = ring.power_cycle(a)
    assert (witness.k, witness.l) == (k, l)
    assert witness.n == exponent
    assert witness.verify(ring)


def test_power_from_witness(z6: FiniteRing):
    witness = z6.power_cycle(2)
    assert z6.power_from_witness(witness, 10 ** 9 + 1) == z6.pow(2, 3)
    assert z6.large_pow(4, 7) == 4


def test_common_exponent(z4: FiniteRing, z6: FiniteRing):
    n = z4.common_exponent(2, 3)
    for a in (2, 3):
        assert z4.nil_mask[z4.sub(a, z4.large_pow(a, n + 1))]
    # Different rings
    first, second = z4.power_cycle(2), z6.power_cycle(2)
    n = common_exponent(first, second)
    assert z4.nil_mask[z4.sub(2, z4.large_pow(2, n + 1))]
    assert z6.nil_mask[z6.sub(2, z6.large_pow(2, n + 1))]


def test_units(z4: FiniteRing, gf4: FiniteRing, t2z3: FiniteRing):
    assert z4.units() == {1, 3}
    assert gf4.units() == {1, 2, 3}
    assert len(t2z3.units()) == 12
    assert z4.inverse(3) == 3
    with pytest.raises(ElementError):
        z4.inverse(2)


def test_center(z6: FiniteRing, m2z2: FiniteRing, t2z3: FiniteRing):
    assert z6.center() == set(z6.elements)
    assert m2z2.center() == {0, M2_ONE}
    assert t2z3.center() == {0, 10, 20}


def test_potency_and_idempotents(z4: FiniteRing, z6: FiniteRing):
    assert z6.potency_exponent(3) == 2
    assert z4.potency_exponent(2) is None
    assert z4.idempotents() == {0, 1}
    assert z6.potents() == set(z6.elements)


@pytest.mark.parametrize(('a', 'p', 'w'), [(2, 0, 2), (0, 0, 0), (1, 1, 0), (3, 3, 0)])
def test_potent_decomposition_z4(z4: FiniteRing, a: int, p: int, w: int):
    decomposition = z4.potent_decomposition(a)
    assert (decomposition.p, decomposition.w) == (p, w)
    assert decomposition.verify(z4)


def test_potent_decomposition_of_potent(z6: FiniteRing):
    decomposition = z6.potent_decomposition(2)
    assert (decomposition.p, decomposition.w) == (2, 0)


def test_nil_elements(z4: FiniteRing, gf4: FiniteRing, m2z2: FiniteRing):
    assert z4.nil_elements() == {0, 2}
    assert gf4.nil_elements() == {0}
    nil = m2z2.nil_elements()
    # Square-zero matrices: 0, e12, e21 and the all-ones matrix
    assert nil == {0, M2_E12, M2_E21, 15}
    assert m2z2.add(M2_E12, M2_E21) not in nil


def test_characteristic_and_opposite(z6: FiniteRing, m2z2: FiniteRing):
    assert z6.characteristic == 6
    assert m2z2.characteristic == 2
    opposite = m2z2.opposite()
    assert opposite.mul(M2_E21, M2_E12) == m2z2.mul(M2_E12, M2_E21) == M2_E11
    assert_ring_axioms(opposite)


def test_content_hash_ignores_labels(z4: FiniteRing):
    unlabelled = FiniteRing(z4.add_table, z4.mul_table, z4.one)
    assert unlabelled.content_hash == z4.content_hash
    assert z4.relabel([0, 3, 2, 1]).content_hash != z4.content_hash


def test_tables_are_read_only(z4: FiniteRing):
    with pytest.raises(ValueError):
        z4.add_table[0, 0] = 1


def test_witness_verify_rejects_wrong_cycle(z4: FiniteRing):
    assert not PeriodicityWitness(element=2, k=1, l=2).verify(z4)


@pytest.mark.parametrize('ring', SMALL_RINGS)
def test_every_element_is_periodic(ring: FiniteRing):
    for a in ring.elements:
        assert ring.power_cycle(a).verify(ring)
        assert ring.potent_decomposition(a).verify(ring)


@hypothesis_settings(max_examples=50, deadline=None)
@given(n=st.integers(min_value=2, max_value=12), data=st.data())
def test_zmod_elements_decompose(n: int, data):
    ring = c.zmod(n)
    a = data.draw(st.integers(min_value=0, max_value=n - 1))
    decomposition = ring.potent_decomposition(a)
    assert ring.add(decomposition.p, decomposition.w) == a
    assert ring.nil_mask[decomposition.w]
    assert ring.potent_mask[decomposition.p]
    assert np.array_equal(ring.power_table[:, 1], np.arange(n))
