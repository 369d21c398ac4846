from dataclasses import replace

import numpy as np
import pytest

from ringbench import constructions as c
from ringbench.core import FiniteRing, assert_ring_axioms
from ringbench.exceptions import (
    ConstructionError,
    IrreducibilityError,
    ModuleValidationError,
    NoIdentityError,
    NotAnEndomorphism,
)
from tests.utils import M2_E11, M2_E12, M2_E21, M2_E22, M2_ONE, is_isomorphic


def test_tuple_codec_orders():
    big_endian = c.TupleCodec((3, 2, 4))
    assert big_endian.order == 24
    assert big_endian.encode_one((1, 0, 3)) == 1 * 8 + 3
    assert big_endian.decode(np.array([11])).tolist() == [[1, 0, 3]]
    little_endian = c.TupleCodec((2, 2), little_endian=True)
    assert little_endian.encode_one((0, 1)) == 2


def test_zmod():
    assert c.zmod(2).order == 2
    assert c.zmod(4).units() == {1, 3}
    zero_ring = c.zmod(1)
    assert zero_ring.order == 1
    assert zero_ring.one == zero_ring.zero
    with pytest.raises(ConstructionError):
        c.zmod(0)


def test_galois_field(gf4: FiniteRing):
    assert c.galois_field(2, 1) == c.zmod(2)
    field = c.galois_field(2, 2, [1, 1, 1])
    assert field == gf4
    for a in field.elements:
        assert field.pow(a, 4) == a
    assert field.labels == ['0', '1', 'x', 'x+1']
    with pytest.raises(IrreducibilityError):
        c.galois_field(2, 2, [1, 0, 1])
    with pytest.raises(ConstructionError):
        c.galois_field(4, 1)


def test_gf9_is_a_field():
    field = c.galois_field(3, 2)
    assert field.order == 9
    assert len(field.units()) == 8
    assert c.default_irreducible(3, 2) == [1, 0, 1]


def test_frobenius(gf4: FiniteRing):
    sigma = c.frobenius(gf4)
    assert sigma.order() == 2
    assert not sigma.is_identity
    assert sigma.compose(sigma).is_identity
    assert c.frobenius(c.zmod(5)).is_identity
    for a in gf4.elements:
        for b in gf4.elements:
            assert sigma(gf4.mul(a, b)) == gf4.mul(sigma(a), sigma(b))
    with pytest.raises(NotAnEndomorphism):
        c.frobenius(c.zmod(4))


def test_endomorphism_validation(z4: FiniteRing):
    with pytest.raises(NotAnEndomorphism):
        c.RingEndomorphism(z4, [0, 3, 2, 1])


def test_direct_product(z2: FiniteRing, z4: FiniteRing, z6: FiniteRing):
    boolean = c.direct_product(z2, z2)
    assert boolean.order == 4
    assert boolean.idempotents() == set(boolean.elements)
    assert c.direct_product(z4, c.zmod(1)) == z4
    assert is_isomorphic(c.direct_product(z2, c.zmod(3)), z6)


def test_matrix_ring(z2: FiniteRing, z4: FiniteRing, m2z2: FiniteRing):
    assert m2z2.order == 16
    assert m2z2.one == M2_ONE
    assert m2z2.mul(M2_E12, M2_E21) == M2_E11
    assert m2z2.mul(M2_E21, M2_E12) == M2_E22
    assert m2z2.mul(M2_E12, M2_E12) == 0
    assert c.matrix_ring(z4, 1) == z4
    assert_ring_axioms(m2z2)


def test_triangular_matrix_ring(t2z3: FiniteRing, gf4: FiniteRing):
    assert t2z3.order == 27
    assert c.triangular_matrix_ring(c.zmod(3), None, 1) == c.zmod(3)
    twisted = c.triangular_matrix_ring(gf4, c.frobenius(gf4), 2)
    plain = c.triangular_matrix_ring(gf4, None, 2)
    assert twisted.order == plain.order == 64
    assert not np.array_equal(twisted.mul_table, plain.mul_table)
    assert_ring_axioms(twisted)


def test_truncated_power_series(z2: FiniteRing, gf4: FiniteRing):
    series = c.truncated_skew_power_series(z2, None, 2)
    x = 2
    assert series.order == 4
    assert series.mul(x, x) == 0
    assert is_isomorphic(series, c.trivial_extension(z2, c.BimoduleSpec.regular(z2)))
    assert c.truncated_skew_power_series(z2, None, 1) == z2
    skew = c.truncated_skew_power_series(gf4, c.frobenius(gf4), 2)
    x = 4
    for a in gf4.elements:
        assert skew.mul(x, a) == skew.mul(gf4.pow(a, 2), x)
    assert not skew.is_commutative


def test_generalized_matrix(z2: FiniteRing, z4: FiniteRing):
    assert c.generalized_matrix(z2, 1) == c.matrix_ring(z2, 2)
    trivial = c.generalized_matrix(z2, 0)
    assert trivial.mul(M2_E12, M2_E21) == 0
    assert trivial.mul(M2_E11, M2_E12) == M2_E12
    ring = c.generalized_matrix(z4, 2)
    assert ring.order == 256
    assert ring == c.morita_ring(c.generalized_context(z4, 2))
    with pytest.raises(ConstructionError):
        c.generalized_matrix(c.matrix_ring(z2, 2), M2_E12)


def test_bimodule_builders(z4: FiniteRing, gf4: FiniteRing):
    ideal = c.BimoduleSpec.from_ideal(z4, {0, 2})
    assert ideal.order == 2
    ideal.validate()
    c.BimoduleSpec.zero(z4, z4).validate()
    c.BimoduleSpec.twisted(gf4, c.frobenius(gf4)).validate()
    total = c.BimoduleSpec.direct_sum(c.BimoduleSpec.regular(z4), ideal)
    assert total.order == 8
    total.validate()


def test_bimodule_validation_reports_condition(z4: FiniteRing):
    regular = c.BimoduleSpec.regular(z4)
    broken = replace(regular, left_action=np.zeros_like(regular.left_action))
    with pytest.raises(ModuleValidationError) as error:
        broken.validate()
    assert error.value.condition == 'left-unital'


def test_morita_ring(z2: FiniteRing, e39_context: c.MoritaContextSpec):
    assert c.morita_ring(e39_context).order == 128
    regular = c.BimoduleSpec.regular(z2)
    zeros = np.zeros((2, 2), dtype=np.intp)
    trivial = c.MoritaContextSpec(z2, z2, regular, regular, zeros, zeros)
    assert c.morita_ring(trivial).order == 16
    assert e39_context.digest() != trivial.digest()


def test_morita_validation_finds_unbalanced_pairing(e39_context: c.MoritaContextSpec):
    psi = e39_context.psi.copy()
    psi[1, 1] = 0
    with pytest.raises(ModuleValidationError) as error:
        c.morita_ring(replace(e39_context, psi=psi))
    assert error.value.condition.startswith('psi')
    assert error.value.witness


def test_trivial_extension(z2: FiniteRing, z4: FiniteRing):
    extension = c.trivial_extension(z2, c.BimoduleSpec.regular(z2))
    assert extension.order == 4
    # (0, 1) squares to zero
    assert extension.mul(1, 1) == 0
    assert c.trivial_extension(z4, c.BimoduleSpec.zero(z4, z4)) == z4
    assert c.trivial_extension(z4, c.BimoduleSpec.regular(z4)).order == 16


def test_trivial_extension_embeds_into_formal_triangular(z4: FiniteRing):
    module = c.BimoduleSpec.from_ideal(z4, {0, 2})
    extension = c.trivial_extension(z4, module)
    triangular = c.formal_triangular(z4, module)
    embedding = c.trivial_extension_embedding(z4, module)
    assert len(set(embedding.tolist())) == extension.order
    assert np.array_equal(
        triangular.mul_table[np.ix_(embedding, embedding)], embedding[extension.mul_table],
    )
    assert embedding[extension.one] == triangular.one


def test_quotient(z2: FiniteRing, z4: FiniteRing, t2z3: FiniteRing):
    assert c.quotient(z4, {0, 2}).ring == z2
    assert c.quotient(z4, {0}).ring == z4
    diagonal = c.quotient(t2z3, {0, 3, 6}).ring
    assert is_isomorphic(diagonal, c.direct_product(c.zmod(3), c.zmod(3)))


def test_subring_generated(z4: FiniteRing, m2z2: FiniteRing):
    with pytest.raises(NoIdentityError) as error:
        c.subring_generated(z4, {2}, include_one=False)
    assert error.value.members == {0, 2}
    assert c.subring_generated(z4, {2}).embedding.tolist() == [0, 1, 2, 3]
    prime = c.subring_generated(m2z2, {m2z2.one})
    assert prime.embedding.tolist() == [0, M2_ONE]
    diagonal = c.subring_generated(m2z2, {M2_E11, M2_E22})
    assert diagonal.embedding.tolist() == [0, M2_E22, M2_E11, M2_ONE]
    assert diagonal.ring.idempotents() == set(diagonal.ring.elements)


def test_subring_without_one_but_with_identity(z6: FiniteRing):
    # {0, 3} is a ring with identity 3
    subring = c.subring_generated(z6, {3}, include_one=False)
    assert subring.embedding.tolist() == [0, 3]
    assert subring.ring == c.zmod(2)


def test_example_3_6_blocks(r3: FiniteRing, r4: FiniteRing):
    assert r3.order == 16
    assert r4.order == 128
    assert c.example_3_6_block(4).order == 128
    with pytest.raises(ConstructionError):
        c.example_3_6_block(2)
    a = c.example_3_6_matrix(3, [(1, 2), (2, 3)], diagonal=1)
    # (1 + N)^2 = 1 + N^2 in characteristic 2
    assert r3.pow(a, 2) == c.example_3_6_matrix(3, [(1, 3)], diagonal=1)
    assert_ring_axioms(r4)


def test_example_2_5_context(z2: FiniteRing):
    spec = c.example_2_5_context(z2)
    spec.validate()
    assert not spec.psi.any() and not spec.phi.any()
    assert spec.order == 8 * 4 * 2 * 8


def test_frobenius_twisted_ring(twisted: FiniteRing):
    assert twisted.order == 64
    assert not twisted.is_commutative
    assert twisted.idempotents() <= twisted.center()
